#include "kindex/charclass/root_bundle.hpp"

#include "kindex/error.hpp"

namespace kindex {

RootBundle::RootBundle(RingPtr ring, std::vector<GradedClass> roots, int rank_adjustment)
    : ring_(std::move(ring)), roots_(std::move(roots)), rank_adjustment_(rank_adjustment) {
  if (!ring_) throw Error(ErrorCode::InvalidArgument, "bundle without a ring");
  for (const auto& r : roots_) {
    if (!same_ring(r.ring(), ring_)) throw Error(ErrorCode::RingMismatch, "root lives in a different ring");
    if (!r.is_homogeneous(2)) {
      throw Error(ErrorCode::InvalidArgument, "Chern root " + r.to_string() + " is not of degree 2");
    }
  }
  if (rank() < 0) throw Error(ErrorCode::InvalidArgument, "bundle rank would be negative");
}

RootBundle RootBundle::trivial(RingPtr ring, std::size_t rank) {
  GradedClass zero(ring);
  return {std::move(ring), std::vector<GradedClass>(rank, zero)};
}

RootBundle RootBundle::from_tangent(RingPtr ring, const TangentRoots& t) {
  return {std::move(ring), t.roots, t.rank_adjustment};
}

std::string RootBundle::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) s += ", ";
    s += roots_[i].to_string();
  }
  s += "}";
  if (rank_adjustment_ > 0) s += " + " + std::to_string(rank_adjustment_);
  if (rank_adjustment_ < 0) s += " - " + std::to_string(-rank_adjustment_);
  return s;
}

RootBundle conjugate(const RootBundle& b) {
  std::vector<GradedClass> roots;
  roots.reserve(b.roots().size());
  for (const auto& r : b.roots()) roots.push_back(-r);
  return {b.ring(), std::move(roots), b.rank_adjustment()};
}

RootBundle sum(const RootBundle& a, const RootBundle& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::RingMismatch, "bundles live over different rings");
  std::vector<GradedClass> roots = a.roots();
  roots.insert(roots.end(), b.roots().begin(), b.roots().end());
  return {a.ring(), std::move(roots), a.rank_adjustment() + b.rank_adjustment()};
}

RootBundle tensor(const RootBundle& a, const RootBundle& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::RingMismatch, "bundles live over different rings");
  if (a.is_virtual() || b.is_virtual()) {
    throw Error(ErrorCode::VirtualBundleUnsupported, "tensor product needs honest root bundles");
  }
  std::vector<GradedClass> roots;
  roots.reserve(a.roots().size() * b.roots().size());
  for (const auto& x : a.roots()) {
    for (const auto& y : b.roots()) roots.push_back(x + y);
  }
  return {a.ring(), std::move(roots)};
}

RootBundle exterior_power(const RootBundle& b, std::size_t q) {
  if (b.is_virtual()) {
    throw Error(ErrorCode::VirtualBundleUnsupported, "exterior powers need honest root bundles");
  }
  const std::size_t n = b.roots().size();
  std::vector<GradedClass> roots;
  if (q > n) return {b.ring(), std::move(roots)};
  // Enumerate q-subsets in lexicographic order.
  std::vector<std::size_t> idx(q);
  for (std::size_t i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    GradedClass s(b.ring());
    for (std::size_t i : idx) s += b.roots()[i];
    roots.push_back(std::move(s));
    std::size_t k = q;
    while (k > 0 && idx[k - 1] == n - q + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {b.ring(), std::move(roots)};
}

}  // namespace kindex
