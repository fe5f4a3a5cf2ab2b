#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kindex/exactalg/int_matrix.hpp"

namespace kindex {

// Z^free_rank + Z/d_1 + ... + Z/d_k with d_i >= 2 and d_i | d_{i+1}.
// Always canonical, so structural equality is group isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  // Any list of cyclic orders; entries 0 count as free summands, 1s vanish.
  static FinAbGroup from_cyclic_orders(std::size_t free_rank, const std::vector<Integer>& orders);
  static FinAbGroup free(std::size_t rank) { return from_cyclic_orders(rank, {}); }
  static FinAbGroup cyclic(long order);
  // Cokernel of the integer matrix, Z^rows / im(m).
  static FinAbGroup cokernel(const IntMatrix& m);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  // Number of generators in the canonical presentation (torsion first, then free).
  std::size_t generator_count() const { return torsion_.size() + free_rank_; }

  // "0", "Z", "Z^3", "Z/2", "Z + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

// Direct sum of two groups, re-canonicalised.
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// ker(d_out) / im(d_in) for the cochain segment C^{p-1} -> C^p -> C^{p+1}.
// d_in is dim C^p x dim C^{p-1}; d_out is dim C^{p+1} x dim C^p.
FinAbGroup cochain_cohomology(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace kindex
