#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kindex/repring/group.hpp"

namespace kindex {

// Virtual representation: integer coordinates over the irreducibles of a
// finite group, or a finite-support map n -> coefficient of z^n for the circle.
class RepElement {
 public:
  explicit RepElement(GroupPtr g);
  RepElement(GroupPtr g, std::vector<long> coords);
  RepElement(GroupPtr g, std::map<long, long> modes);

  // The irreducible w_alpha (finite) or z^alpha (circle).
  static RepElement irreducible(GroupPtr g, long alpha);

  const GroupPtr& group() const { return g_; }
  const std::vector<long>& coords() const { return coords_; }
  const std::map<long, long>& modes() const { return modes_; }
  long coefficient(long alpha) const;
  bool is_zero() const;
  long dimension() const;

  // Character value on a conjugacy class of a finite group.
  Cyclotomic character(std::size_t cls) const;

  RepElement& operator+=(const RepElement& o);
  RepElement& operator-=(const RepElement& o);
  friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
  friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
  friend RepElement operator*(long s, RepElement a);
  friend bool operator==(const RepElement& a, const RepElement& b);

  // "w0 + 2*w2 - w3", "z^-1 + z^2", "0".
  std::string to_string() const;

 private:
  GroupPtr g_;
  std::vector<long> coords_;
  std::map<long, long> modes_;
};

// Class-weighted character pairing, conjugating the second slot.
long inner_product(const RepElement& x, const RepElement& y);

// Tensor product (pointwise character product).
RepElement multiply(const RepElement& x, const RepElement& y);

RepElement restrict_rep(const SubgroupEmbedding& e, const RepElement& x);

// Adjoint of restriction: coordinate alpha is <restrict(w_alpha), x>_H.  For
// the circle ambient the answer is truncated to |n| <= mode_bound, which is
// required whenever x is nonzero.
RepElement induce(const SubgroupEmbedding& e, const RepElement& x, std::optional<long> mode_bound = std::nullopt);

struct FrobeniusPair {
  long ambient_irrep = 0;
  long subgroup_irrep = 0;
  long lhs = 0;  // <w_alpha, induce(w_beta)>_G
  long rhs = 0;  // <restrict(w_alpha), w_beta>_H
  bool pass = false;
};

struct FrobeniusReport {
  std::vector<FrobeniusPair> pairs;
  bool all_pass = true;
};

// Every irreducible pair; for the circle ambient the modes |n| <= mode_bound.
FrobeniusReport check_frobenius(const SubgroupEmbedding& e, std::optional<long> mode_bound = std::nullopt);

}  // namespace kindex
