#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/cohomring/ring.hpp"

namespace kindex {

// Chern roots of a complex bundle, possibly with trivial line summands
// removed (rank_adjustment < 0) or added (> 0).  CP^n's tangent bundle is
// (n+1) copies of x minus one trivial line.
struct TangentRoots {
  std::vector<GradedClass> roots;
  int rank_adjustment = 0;
};

struct Space {
  std::string name;
  RingPtr ring;
  GradedClass euler_class;
  std::optional<int> complex_dim;
  // Roots of the complex tangent bundle when X is complex.
  std::optional<TangentRoots> complex_tangent;
  // Td(TX (x) C) supplied directly when the tangent bundle has no root form.
  std::optional<GradedClass> precomputed_index_class;

  int real_dim() const { return ring->top_degree(); }
};

// point, sphere (param = real dimension, even), cp (param = n),
// riemann_surface (param = genus).
Space builtin_space(std::string_view name, long param = 0);

std::vector<std::string> builtin_space_names();

}  // namespace kindex
