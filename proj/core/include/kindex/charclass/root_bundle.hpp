#pragma once

#include <cstddef>
#include <vector>

#include "kindex/cohomring/ring.hpp"
#include "kindex/cohomring/space.hpp"

namespace kindex {

// Formal complex bundle given by Chern roots (degree-2 classes; zero roots are
// trivial line summands).  rank_adjustment counts trivial lines added (> 0) or
// removed (< 0) on top of the roots, so rank = roots + rank_adjustment.
class RootBundle {
 public:
  RootBundle(RingPtr ring, std::vector<GradedClass> roots, int rank_adjustment = 0);

  static RootBundle trivial(RingPtr ring, std::size_t rank);
  static RootBundle from_tangent(RingPtr ring, const TangentRoots& t);

  const RingPtr& ring() const { return ring_; }
  const std::vector<GradedClass>& roots() const { return roots_; }
  int rank_adjustment() const { return rank_adjustment_; }
  long rank() const { return static_cast<long>(roots_.size()) + rank_adjustment_; }
  bool is_virtual() const { return rank_adjustment_ != 0; }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<GradedClass> roots_;
  int rank_adjustment_ = 0;
};

RootBundle conjugate(const RootBundle& b);
RootBundle sum(const RootBundle& a, const RootBundle& b);
// All pairwise root sums.
RootBundle tensor(const RootBundle& a, const RootBundle& b);
// Lambda^q: one root per q-subset, equal to the subset's root sum.
RootBundle exterior_power(const RootBundle& b, std::size_t q);

}  // namespace kindex
