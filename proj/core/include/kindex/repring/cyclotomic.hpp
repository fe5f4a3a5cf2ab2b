#pragma once

#include <string>
#include <vector>

#include "kindex/exactalg/rational.hpp"

namespace kindex {

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
// Mixed-order arithmetic lifts both operands to Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(unsigned m);
  Cyclotomic(unsigned m, const Rational& r);

  // zeta_m^k for any integer k.
  static Cyclotomic root_power(unsigned m, long k);
  static Cyclotomic rational(const Rational& r) { return {1, r}; }

  unsigned order() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational to_rational() const;

  Cyclotomic lifted(unsigned multiple_of_m) const;
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // "2", "-1", "1 + zeta3", "-1/2*zeta6^2".
  std::string to_string() const;

 private:
  // Reduces an arbitrary coefficient list in powers of zeta_m.
  static Cyclotomic from_powers(unsigned m, const std::vector<Rational>& powers);

  unsigned m_;
  std::vector<Rational> c_;
};

}  // namespace kindex
