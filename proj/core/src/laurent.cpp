#include "kindex/circleop/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "kindex/error.hpp"

namespace kindex {

LaurentPoly::LaurentPoly(const std::map<int, GaussianRational>& coeffs) {
  for (const auto& [k, c] : coeffs) {
    if (!c.is_zero()) coeffs_.emplace(k, c);
  }
}

LaurentPoly LaurentPoly::monomial(int exponent, const GaussianRational& c) {
  LaurentPoly p;
  if (!c.is_zero()) p.coeffs_.emplace(exponent, c);
  return p;
}

GaussianRational LaurentPoly::coefficient(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? GaussianRational(0) : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

namespace {

GaussianRational ipow(const GaussianRational& z, int k) {
  GaussianRational r(1);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

GaussianRational LaurentPoly::evaluate(const GaussianRational& z) const {
  if (z.is_zero()) throw Error(ErrorCode::InvalidArgument, "Laurent polynomial evaluated at 0");
  GaussianRational acc(0);
  const GaussianRational zinv = z.inverse();
  for (const auto& [k, c] : coeffs_) acc += c * (k >= 0 ? ipow(z, k) : ipow(zinv, -k));
  return acc;
}

GaussianRational LaurentPoly::evaluate_on_circle(const GaussianRational& z) const {
  if (coeffs_.empty()) return GaussianRational(0);
  // Horner in z over k >= 0 and in conj(z) = z^{-1} over k < 0.
  GaussianRational high(0);
  for (int k = std::max(max_exponent(), 0); k >= 0; --k) high = high * z + coefficient(k);
  const GaussianRational zb = z.conj();
  GaussianRational low(0);
  for (int k = std::min(min_exponent(), 0); k < 0; ++k) low = (low + coefficient(k)) * zb;
  return high + low;
}

LaurentPoly LaurentPoly::conj_reflect() const {
  LaurentPoly p;
  for (const auto& [k, c] : coeffs_) p.coeffs_.emplace(-k, c.conj());
  return p;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly p;
  for (const auto& [k, c] : coeffs_) p.coeffs_.emplace(k + s, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto& slot = coeffs_[k];
    slot += c;
    if (slot.is_zero()) coeffs_.erase(k);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto& slot = coeffs_[k];
    slot -= c;
    if (slot.is_zero()) coeffs_.erase(k);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, GaussianRational> acc;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) acc[ka + kb] += ca * cb;
  }
  return LaurentPoly(acc);
}

LaurentPoly operator*(LaurentPoly a, const GaussianRational& s) {
  if (s.is_zero()) return {};
  for (auto& [k, c] : a.coeffs_) c *= s;
  return a;
}

LaurentPoly LaurentPoly::operator-() const { return *this * GaussianRational(-1); }

std::string LaurentPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    std::string mono;
    if (k == 1) {
      mono = std::string(var);
    } else if (k != 0) {
      mono = std::string(var) + "^" + std::to_string(k);
    }
    bool negative = false;
    std::string coeff;
    bool unit = false;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      coeff = c.re().abs().to_string();
      unit = c.re().abs().is_one();
    } else if (c.re().is_zero()) {
      negative = c.im().sign() < 0;
      coeff = c.im().abs().is_one() ? "i" : c.im().abs().to_string() + "i";
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    std::string body;
    if (mono.empty()) {
      body = coeff;
    } else if (unit) {
      body = mono;
    } else {
      body = coeff + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero Laurent polynomial");
  if (a.is_zero()) return {};
  const int sa = a.min_exponent();
  const int sb = b.min_exponent();
  LaurentPoly rem = a.shifted(-sa);
  const LaurentPoly den = b.shifted(-sb);
  const int db = den.max_exponent();
  const GaussianRational lead_inv = den.coefficient(db).inverse();
  LaurentPoly q;
  while (!rem.is_zero() && rem.max_exponent() >= db) {
    const int d = rem.max_exponent();
    const LaurentPoly step = LaurentPoly::monomial(d - db, rem.coefficient(d) * lead_inv);
    q += step;
    rem -= step * den;
  }
  if (!rem.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, b.to_string() + " does not divide " + a.to_string());
  }
  return q.shifted(sa - sb);
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string text, std::string_view var) : s_(std::move(text)), var_(var) {}

  LaurentPoly parse() {
    if (var_.empty() || var_ == "i") throw Error(ErrorCode::InvalidArgument, "bad variable name");
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "position " + std::to_string(pos_ + 1) + ": " + what + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_var() const { return s_.compare(pos_, var_.size(), var_) == 0; }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char ch = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || ch == 'i' || at_var();
  }

  LaurentPoly expr() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    LaurentPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      const bool minus = s_[pos_] == '-';
      ++pos_;
      LaurentPoly t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      const long v = integer(true);
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return neg ? -v : v;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  LaurentPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    LaurentPoly base;
    bool monomial_base = false;
    const char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
      }
      Rational r;
      try {
        r = Rational::parse(s_.substr(start, pos_ - start));
      } catch (const Error& e) {
        fail(e.what());
      }
      base = LaurentPoly::constant(r);
      monomial_base = !r.is_zero();
    } else if (at_var()) {
      pos_ += var_.size();
      base = LaurentPoly::monomial(1);
      monomial_base = true;
    } else if (ch == 'i') {
      ++pos_;
      base = LaurentPoly::constant(GaussianRational::i());
      monomial_base = true;
    } else if (ch == '(') {
      ++pos_;
      base = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      monomial_base = base.coefficients().size() == 1;
    } else {
      fail("unexpected '" + std::string(1, ch) + "'");
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      const long e = integer(true);
      if (e < 0) {
        if (!monomial_base) fail("negative power of a non-monomial");
        const auto& [k, c] = *base.coefficients().begin();
        base = LaurentPoly::monomial(-k, c.inverse());
      }
      const long n = e < 0 ? -e : e;
      LaurentPoly r = LaurentPoly::constant(GaussianRational(1));
      for (long j = 0; j < n; ++j) r = r * base;
      base = r;
    }
    return base;
  }

  std::string s_;
  std::string var_;
  std::size_t pos_ = 0;
};

std::string normalise_minus(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::string_view var) {
  return LaurentParser(normalise_minus(text), var).parse();
}

LaurentMatrix::LaurentMatrix(std::size_t n) : n_(n), data_(n * n) {}

LaurentMatrix::LaurentMatrix(std::vector<std::vector<LaurentPoly>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::InvalidArgument, "symbol matrix must be square");
    for (auto& p : row) data_.push_back(std::move(p));
  }
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(GaussianRational(1));
  return m;
}

LaurentMatrix LaurentMatrix::scalar(const LaurentPoly& f) {
  LaurentMatrix m(1);
  m(0, 0) = f;
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& d) {
  LaurentMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

LaurentMatrix LaurentMatrix::adjoint() const {
  LaurentMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj_reflect();
  }
  return m;
}

int LaurentMatrix::min_exponent() const {
  int lo = 0;
  bool any = false;
  for (const auto& p : data_) {
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.min_exponent()) : p.min_exponent();
    any = true;
  }
  return lo;
}

int LaurentMatrix::max_exponent() const {
  int hi = 0;
  bool any = false;
  for (const auto& p : data_) {
    if (p.is_zero()) continue;
    hi = any ? std::max(hi, p.max_exponent()) : p.max_exponent();
    any = true;
  }
  return hi;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

LaurentPoly determinant(const LaurentMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return LaurentPoly::constant(GaussianRational(1));
  LaurentMatrix m = in;
  LaurentPoly prev = LaurentPoly::constant(GaussianRational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace kindex
