#pragma once

#include <optional>
#include <vector>

#include "kindex/circleop/laurent.hpp"
#include "kindex/circleop/winding.hpp"

namespace kindex {

// dim of {u polynomial vector, deg u <= bound : all modes k >= 0 of f u vanish}.
long toeplitz_kernel_dim(const LaurentMatrix& f, int bound);

struct ToeplitzOracleResult {
  KerCoker dims;
  int kernel_bound = 0;    // degree bound at which the kernel count stabilised
  int cokernel_bound = 0;  // same for the adjoint symbol
};

// Raises the degree bound from start_bound until the count is unchanged for
// two consecutive steps.  Default ceiling 64 + 8 * (total exponent span).
// The cokernel is the kernel for the pointwise adjoint symbol.
ToeplitzOracleResult toeplitz_kernel_oracle(const LaurentMatrix& f, int start_bound,
                                            std::optional<int> max_bound = std::nullopt,
                                            const WindingOptions& opts = {});

struct ConstCoeffResult {
  KerCoker dims;
  std::vector<long> kernel_modes;  // integers n with p(n) = 0
  long bound = 0;                  // scan range |n| <= bound
};

// Operator acting on e^{in theta} by multiplication with p(n); p is a
// polynomial (nonnegative exponents) in one variable.
ConstCoeffResult const_coeff_index(const LaurentPoly& p);

// Integer B with every root of p satisfying |root| <= B (Cauchy bound).
long cauchy_bound(const LaurentPoly& p);

// Value of a polynomial (nonnegative exponents) at an integer.
GaussianRational evaluate_at_integer(const LaurentPoly& p, long n);

}  // namespace kindex
