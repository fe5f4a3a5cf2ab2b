#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kindex/exactalg/power_series.hpp"
#include "kindex/exactalg/rational.hpp"

namespace kindex {

// Exponent vector indexed by generator position.
using Monomial = std::vector<int>;
using Terms = std::map<Monomial, Rational>;

struct Generator {
  std::string name;
  int degree = 2;  // even, positive
};

// lhs -> sum of rhs terms; every rhs monomial must precede lhs in the ring's
// monomial order.  An empty rhs is a truncation rule lhs -> 0.
struct RewriteRule {
  Monomial lhs;
  Terms rhs;
};

// Finitely presented even-graded commutative Q-algebra whose relations are
// terminating rewrite rules.  Monomials of degree above top_degree vanish.
class RingPresentation {
 public:
  RingPresentation(std::string name, std::vector<Generator> generators, std::vector<RewriteRule> rules,
                   int top_degree, Monomial fundamental);

  // Q[gens] truncated above top_degree, with no other relations.
  static std::shared_ptr<const RingPresentation> free_truncated(std::string name,
                                                                std::vector<Generator> generators,
                                                                int top_degree);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int top_degree() const { return top_degree_; }
  const Monomial& fundamental_monomial() const { return fundamental_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::optional<std::size_t> generator_index(std::string_view name) const;
  Monomial unit_monomial() const { return Monomial(generators_.size(), 0); }
  int degree(const Monomial& m) const;
  bool is_reduced(const Monomial& m) const;
  // Strict monomial order used by the rewrite rules: degree, then lexicographic.
  bool precedes(const Monomial& a, const Monomial& b) const;

  // Fully reduced normal form.  rule_order, when given, is the priority in
  // which rules are tried (a permutation of rule indices).
  Terms reduce(const Terms& terms, std::span<const std::size_t> rule_order = {}) const;

  // Reduced monomials of exactly the given degree, in increasing order.
  std::vector<Monomial> basis(int degree) const;
  // Reduced monomials of every degree 0..top_degree.
  std::vector<Monomial> full_basis() const;

  friend bool operator==(const RingPresentation& a, const RingPresentation& b);

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::vector<RewriteRule> rules_;
  int top_degree_;
  Monomial fundamental_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

bool same_ring(const RingPtr& a, const RingPtr& b);

// Element of a RingPresentation: fully reduced, no zero coefficients.
class GradedClass {
 public:
  explicit GradedClass(RingPtr ring);
  GradedClass(RingPtr ring, const Terms& terms);

  static GradedClass constant(RingPtr ring, const Rational& c);
  static GradedClass generator(RingPtr ring, std::string_view name, const Rational& coeff = Rational(1));
  static GradedClass monomial(RingPtr ring, const Monomial& m, const Rational& coeff = Rational(1));

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  GradedClass homogeneous_part(int degree) const;
  // True when every term has the given degree (the zero class counts).
  bool is_homogeneous(int degree) const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const Rational& s);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
  GradedClass operator-() const;
  // Cup product.
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);

  friend bool operator==(const GradedClass& a, const GradedClass& b);

  // "1 + 3*x + 3*x^2", "-1/2*mu", "0".
  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

GradedClass cup(const GradedClass& a, const GradedClass& b);
GradedClass power(const GradedClass& a, unsigned k);

// Coefficient of the fundamental monomial.
Rational evaluate_fundamental(const GradedClass& a);

// Returns b with b * e == a.  Coefficients of b in degrees up to
// `determined_through` (default: top_degree - lowest degree of e) must be
// uniquely determined; coefficients above it are set to zero.
GradedClass divide_by(const GradedClass& a, const GradedClass& e,
                      std::optional<int> determined_through = std::nullopt);

// sum_k series[k] * y^k for a class y with zero constant term.
GradedClass evaluate_series(const PowerSeries& series, const GradedClass& y);

}  // namespace kindex
