#pragma once

#include <cstddef>
#include <vector>

#include "kindex/charclass/root_bundle.hpp"
#include "kindex/exactalg/power_series.hpp"

namespace kindex {

// prod (1 + x_i)
GradedClass total_chern(const RootBundle& b);
// k-th elementary symmetric function of the roots (c_k).
GradedClass chern_class(const RootBundle& b, std::size_t k);
// rank + sum_k p_k / k!
GradedClass chern_character(const RootBundle& b);
// prod x_i / (1 - e^{-x_i})
GradedClass todd(const RootBundle& b);
// c_rank: product of the roots.
GradedClass euler_top(const RootBundle& b);
// prod (1 - e^{x_i}), the Chern character of sum (-1)^i Lambda^i.
GradedClass lambda_alternating_ch(const RootBundle& b);
// prod (1 - e^{x_i}) / x_i
GradedClass mu_class(const RootBundle& b);

// prod Q(x_i) for Q = series, evaluated on a bundle known only through
// c_1..c_m (m <= rank; c_j homogeneous of degree 2j).  Computed in a generic
// ring of `rank` roots and rewritten through elementary symmetric functions.
GradedClass multiplicative_class_from_chern(const RingPtr& ring, const std::vector<GradedClass>& chern,
                                            const PowerSeries& series, std::size_t rank);

// Free ring Q[t_1..t_rank] (all degree 2) truncated above top_degree.
RingPtr generic_root_ring(std::size_t rank, int top_degree);

// Expresses a symmetric class of a generic root ring in the elementary
// symmetric functions e_1..e_rank, then substitutes values[j-1] for e_j
// (missing values count as zero).  Throws InvalidArgument if not symmetric.
GradedClass substitute_elementary(const GradedClass& symmetric, const RingPtr& target,
                                  const std::vector<GradedClass>& values);

}  // namespace kindex
