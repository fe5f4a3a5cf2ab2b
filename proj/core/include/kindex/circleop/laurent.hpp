#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/exactalg/gaussian.hpp"

namespace kindex {

// sum_k a_k z^k with finitely many nonzero Gaussian-rational a_k; on the
// circle z = e^{i theta}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const std::map<int, GaussianRational>& coeffs);

  static LaurentPoly constant(const GaussianRational& c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, const GaussianRational& c = GaussianRational(1));

  const std::map<int, GaussianRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  GaussianRational coefficient(int k) const;
  // Lowest and highest exponent; 0 for the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  int span() const { return max_exponent() - min_exponent(); }

  // Value at a nonzero z.
  GaussianRational evaluate(const GaussianRational& z) const;
  // Value at z with |z| = 1, using z^{-1} = conj(z).
  GaussianRational evaluate_on_circle(const GaussianRational& z) const;

  // sum conj(a_k) z^{-k}: the pointwise conjugate on the circle.
  LaurentPoly conj_reflect() const;
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& s);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  // "2 + z", "-z^-2", "(1+2i)*z^3", "0".
  std::string to_string(std::string_view var = "z") const;

 private:
  std::map<int, GaussianRational> coeffs_;
};

// Exact quotient a / b in the Laurent ring; throws InvalidArgument when b does
// not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Parses sums and products of numbers ("3", "1/2"), the unit "i", the variable
// with optional integer exponent ("z^-2"), and parenthesised groups with
// nonnegative exponents.  Juxtaposition multiplies ("2z", "3i z").
LaurentPoly parse_laurent(std::string_view text, std::string_view var = "z");

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n);
  explicit LaurentMatrix(std::vector<std::vector<LaurentPoly>> rows);

  static LaurentMatrix identity(std::size_t n);
  static LaurentMatrix scalar(const LaurentPoly& f);
  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& d);

  std::size_t size() const { return n_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  // Entrywise conj_reflect of the transpose: the pointwise adjoint on the circle.
  LaurentMatrix adjoint() const;
  int min_exponent() const;
  int max_exponent() const;
  bool is_zero() const;

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> data_;
};

// Fraction-free (Bareiss) elimination over the Laurent ring.
LaurentPoly determinant(const LaurentMatrix& m);

}  // namespace kindex
