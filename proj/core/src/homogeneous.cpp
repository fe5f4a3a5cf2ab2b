#include "kindex/repring/homogeneous.hpp"

#include <algorithm>

#include "kindex/circleop/toeplitz.hpp"
#include "kindex/error.hpp"
#include "kindex/exactalg/linalg.hpp"

namespace kindex {

namespace {

std::size_t rank_at(const LaurentMatrix& p, long m) {
  const std::size_t n = p.size();
  FieldMatrix<GaussianRational> a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = evaluate_at_integer(p(r, c), m);
  }
  return matrix_rank(a);
}

}  // namespace

HomogeneousIndexResult circle_homogeneous_index(const LaurentMatrix& p, long mode_bound) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty symbol matrix");
  if (mode_bound < 0) throw Error(ErrorCode::InvalidArgument, "mode bound must be nonnegative");
  if (p.is_zero()) throw Error(ErrorCode::NotElliptic, "zero symbol is not elliptic");
  if (p.min_exponent() < 0) throw Error(ErrorCode::InvalidArgument, "symbol entries must be polynomials");
  const int top = p.max_exponent();
  FieldMatrix<GaussianRational> lead(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) lead(r, c) = p(r, c).coefficient(top);
  }
  if (matrix_rank(lead) < n) {
    throw Error(ErrorCode::NotElliptic, "top-degree coefficient matrix (degree " + std::to_string(top) +
                                            ") is singular");
  }
  HomogeneousIndexResult res{RepElement(builtin_group("circle")), {}, 0, 0};
  // det p has degree n * top with invertible leading coefficient, so its
  // integer roots are bounded and every other mode is invertible.
  res.root_bound = cauchy_bound(determinant(p));
  res.scanned_bound = std::max(mode_bound, res.root_bound);
  std::map<long, long> total;
  for (long m = -res.scanned_bound; m <= res.scanned_bound; ++m) {
    const auto rk = static_cast<long>(rank_at(p, m));
    const long ker = static_cast<long>(n) - rk;
    const long coker = static_cast<long>(n) - rk;
    if (ker != 0 || coker != 0) res.nonzero.push_back({m, ker, coker});
    total[m] += ker - coker;
  }
  res.total = RepElement(res.total.group(), std::move(total));
  return res;
}

RepElement bott_homogeneous_index(const SubgroupEmbedding& e, const RepElement& m_class, const RepElement& n_class,
                                  std::optional<long> mode_bound) {
  return induce(e, m_class - n_class, mode_bound);
}

}  // namespace kindex
