#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kindex/charclass/root_bundle.hpp"
#include "kindex/cohomring/space.hpp"

namespace kindex {

// Generic roots t_1..t_rank standing in for the complex tangent bundle of the
// space.  Bundles built over `ring` are functions of the tangent roots; the
// Euler class is t_1 ... t_rank and results are transported back to the space
// by substituting c_j(T_C X) for the elementary symmetric functions.
struct SplittingModel {
  RingPtr ring;
  std::size_t rank = 0;
};

struct EllipticComplexData {
  Space space;
  // E^0, E^1, ...; over space.ring, or over splitting->ring when present.
  std::vector<RootBundle> bundles;
  std::optional<SplittingModel> splitting;
};

struct IndexResult {
  Rational value;
  // Ordered audit trail: (label, exact value as text).
  std::vector<std::pair<std::string, std::string>> intermediates;
};

// (-1)^{n(n+1)/2} for real dimension n.
int index_sign(int real_dim);

// Td(TX (x) C).
GradedClass index_class(const Space& space);

// Splitting model sized for the space's complex tangent bundle.
SplittingModel splitting_model_for(const Space& space);

// Lambda^{0,q}: exterior powers of the conjugate complex tangent bundle.
EllipticComplexData dolbeault_data(const Space& space);
// Lambda^k of the complexified cotangent bundle T + conj(T).
EllipticComplexData de_rham_data(const Space& space);

// ch(sum (-1)^i E^i) divided by e(X), as a class on the space.
GradedClass euler_quotient(const EllipticComplexData& data);

IndexResult index_form_C(const EllipticComplexData& data);
IndexResult index_form_B(const Space& space, const GradedClass& u);
IndexResult de_rham_index(const Space& space);
IndexResult dolbeault_index(const Space& space);
IndexResult odd_dim_index(int dim);

}  // namespace kindex
