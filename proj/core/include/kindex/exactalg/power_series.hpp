#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kindex/exactalg/rational.hpp"

namespace kindex {

// Univariate truncated power series sum_{k=0}^{N} c_k x^k.  Binary operations
// on series of different orders truncate to the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  explicit PowerSeries(std::vector<Rational> coefficients);

  static PowerSeries constant(const Rational& c, std::size_t order);
  // exp(scale * x) through x^order.
  static PowerSeries exp(std::size_t order, const Rational& scale = Rational(1));

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }

  PowerSeries truncated(std::size_t order) const;
  // Requires a nonzero constant term.
  PowerSeries inverse() const;
  // Drops the x^0 coefficient and divides by x; the constant term must vanish.
  // The result has order one less.
  PowerSeries divided_by_x() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& s);
  PowerSeries operator-() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

// Coefficients of x / (1 - e^{-x}) through x^n, obtained by inverting the
// series (1 - e^{-x}) / x.
PowerSeries todd_series(std::size_t n);

// Coefficients of (1 - e^{x}) / x through x^n.
PowerSeries mu_series(std::size_t n);

}  // namespace kindex
