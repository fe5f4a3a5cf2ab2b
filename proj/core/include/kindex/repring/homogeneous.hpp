#pragma once

#include <vector>

#include "kindex/circleop/laurent.hpp"
#include "kindex/repring/rep.hpp"

namespace kindex {

struct ModeDims {
  long mode = 0;
  long kernel = 0;
  long cokernel = 0;
};

struct HomogeneousIndexResult {
  RepElement total;               // sum of (ker - coker) z^m over scanned modes
  std::vector<ModeDims> nonzero;  // modes with a nonzero kernel or cokernel
  long root_bound = 0;            // every singular mode satisfies |m| <= root_bound
  long scanned_bound = 0;         // max(mode_bound, root_bound)
};

// Rotation-invariant operator acting on the mode e^{i m theta} by the matrix
// p(m), p a square matrix of polynomials in one variable.  Elliptic means the
// matrix of top-degree coefficients is invertible.
HomogeneousIndexResult circle_homogeneous_index(const LaurentMatrix& p, long mode_bound);

// Equivariant index of a homogeneous operator with symbol [M] - [N] at the
// base point: the induction of M - N.
RepElement bott_homogeneous_index(const SubgroupEmbedding& e, const RepElement& m_class, const RepElement& n_class,
                                  std::optional<long> mode_bound = std::nullopt);

}  // namespace kindex
