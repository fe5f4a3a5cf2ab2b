#include "kindex/exactalg/power_series.hpp"

#include <algorithm>

#include "kindex/error.hpp"

namespace kindex {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::exp(std::size_t order, const Rational& scale) {
  PowerSeries s(order);
  Rational term(1);
  for (std::size_t k = 0; k <= order; ++k) {
    s.coeffs_[k] = term;
    term = term * scale / Rational(static_cast<long>(k + 1));
  }
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(order + 1, Rational(0));
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), order + 1), c.begin());
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0].is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "power series with zero constant term is not invertible");
  }
  const std::size_t n = order();
  PowerSeries inv(n);
  const Rational c0_inv = coeffs_[0].inverse();
  inv.coeffs_[0] = c0_inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * c0_inv;
  }
  return inv;
}

PowerSeries PowerSeries::divided_by_x() const {
  if (!coeffs_[0].is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "series is not divisible by x");
  }
  if (coeffs_.size() == 1) return PowerSeries(std::size_t{0});
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

PowerSeries operator*(PowerSeries a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

PowerSeries PowerSeries::operator-() const { return *this * Rational(-1); }

std::string PowerSeries::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ", ";
    out += coeffs_[k].to_string();
  }
  return out + "]";
}

PowerSeries todd_series(std::size_t n) {
  // (1 - e^{-x}) / x needs one extra order before the division by x.
  PowerSeries one_minus_exp = PowerSeries::constant(Rational(1), n + 1) - PowerSeries::exp(n + 1, Rational(-1));
  return one_minus_exp.divided_by_x().inverse();
}

PowerSeries mu_series(std::size_t n) {
  PowerSeries one_minus_exp = PowerSeries::constant(Rational(1), n + 1) - PowerSeries::exp(n + 1);
  return one_minus_exp.divided_by_x();
}

}  // namespace kindex
