#include "kindex/repring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "kindex/error.hpp"

namespace kindex {

namespace {

std::vector<Integer> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by every Phi_d with d | m, d < m.
  std::vector<Integer> poly(m + 1, Integer(0));
  poly[0] = -1;
  poly[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<Integer> div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> q(poly.size() - dd, Integer(0));
    for (long k = static_cast<long>(poly.size()) - 1; k >= static_cast<long>(dd); --k) {
      const Integer lead = poly[static_cast<std::size_t>(k)];
      if (lead == 0) continue;
      const std::size_t base = static_cast<std::size_t>(k) - dd;
      q[base] = lead;
      for (std::size_t j = 0; j <= dd; ++j) poly[base + j] -= lead * div[j];
    }
    poly = std::move(q);
  }
  return poly;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> p = compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, p);
  return p;
}

Cyclotomic::Cyclotomic(unsigned m) : m_(m) {
  c_.assign(cyclotomic_polynomial(m).size() - 1, Rational(0));
}

Cyclotomic::Cyclotomic(unsigned m, const Rational& r) : Cyclotomic(m) { c_[0] = r; }

Cyclotomic Cyclotomic::from_powers(unsigned m, const std::vector<Rational>& powers) {
  std::vector<Rational> folded(m, Rational(0));
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (!powers[j].is_zero()) folded[j % m] += powers[j];
  }
  const std::vector<Integer> phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = m; k-- > deg;) {
    const Rational a = folded[k];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j <= deg; ++j) folded[k - deg + j] -= a * Rational(phi[j]);
  }
  Cyclotomic out(m);
  for (std::size_t j = 0; j < deg; ++j) out.c_[j] = folded[j];
  return out;
}

Cyclotomic Cyclotomic::root_power(unsigned m, long k) {
  std::vector<Rational> p(m, Rational(0));
  const long mm = static_cast<long>(m);
  p[static_cast<std::size_t>(((k % mm) + mm) % mm)] = Rational(1);
  return from_powers(m, p);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned l) const {
  if (l == m_) return *this;
  if (l % m_ != 0) throw Error(ErrorCode::InvalidArgument, "cannot lift cyclotomic field");
  const unsigned step = l / m_;
  std::vector<Rational> p(l, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) p[(j * step) % l] += c_[j];
  return from_powers(l, p);
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> p(m_, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) p[(m_ - j) % m_] += c_[j];
  return from_powers(m_, p);
}

namespace {

unsigned common_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const unsigned l = common_order(m_, o.m_);
  if (l != m_) *this = lifted(l);
  const Cyclotomic rhs = o.lifted(l);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  const unsigned l = common_order(m_, o.m_);
  if (l != m_) *this = lifted(l);
  const Cyclotomic rhs = o.lifted(l);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= rhs.c_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const unsigned l = common_order(m_, o.m_);
  const Cyclotomic a = lifted(l);
  const Cyclotomic b = o.lifted(l);
  std::vector<Rational> p(2 * a.c_.size(), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  }
  *this = from_powers(l, p);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  return out *= Rational(-1);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned l = std::lcm(a.m_, b.m_);
  return a.lifted(l).c_ == b.lifted(l).c_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  const std::string z = "zeta" + std::to_string(m_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& a = c_[j];
    if (a.is_zero()) continue;
    std::string mono = j == 0 ? "" : (j == 1 ? z : z + "^" + std::to_string(j));
    const bool neg = a.sign() < 0;
    const Rational mag = a.abs();
    std::string body = mono.empty() ? mag.to_string() : (mag.is_one() ? mono : mag.to_string() + "*" + mono);
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace kindex
