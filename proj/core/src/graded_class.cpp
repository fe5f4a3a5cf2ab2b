#include <algorithm>
#include <map>

#include "kindex/cohomring/ring.hpp"
#include "kindex/error.hpp"
#include "kindex/exactalg/linalg.hpp"

namespace kindex {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw Error(ErrorCode::RingMismatch, "classes live in different rings ('" + (a ? a->name() : "?") +
                                             "' vs '" + (b ? b->name() : "?") + "')");
  }
}

std::string monomial_string(const RingPresentation& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.generators()[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorCode::InvalidArgument, "class without a ring");
}

GradedClass::GradedClass(RingPtr ring, const Terms& terms) : GradedClass(std::move(ring)) {
  for (const auto& [m, c] : terms) {
    if (m.size() != ring_->generator_count()) {
      throw Error(ErrorCode::InvalidArgument, "monomial arity does not match ring '" + ring_->name() + "'");
    }
  }
  terms_ = ring_->reduce(terms);
}

GradedClass GradedClass::constant(RingPtr ring, const Rational& c) {
  Terms t;
  t[ring->unit_monomial()] = c;
  return {std::move(ring), t};
}

GradedClass GradedClass::generator(RingPtr ring, std::string_view name, const Rational& coeff) {
  const auto idx = ring->generator_index(name);
  if (!idx) {
    throw Error(ErrorCode::InvalidArgument,
                "ring '" + ring->name() + "' has no generator '" + std::string(name) + "'");
  }
  Monomial m = ring->unit_monomial();
  m[*idx] = 1;
  return monomial(std::move(ring), m, coeff);
}

GradedClass GradedClass::monomial(RingPtr ring, const Monomial& m, const Rational& coeff) {
  Terms t;
  t[m] = coeff;
  return {std::move(ring), t};
}

Rational GradedClass::constant_term() const { return coefficient(ring_->unit_monomial()); }

Rational GradedClass::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::homogeneous_part(int degree) const {
  GradedClass out(ring_);
  for (const auto& [m, c] : terms_) {
    if (ring_->degree(m) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

bool GradedClass::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return ring_->degree(kv.first) == degree; });
}

std::optional<int> GradedClass::min_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int dm = ring_->degree(m);
    if (!d || dm < *d) d = dm;
  }
  return d;
}

std::optional<int> GradedClass::max_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int dm = ring_->degree(m);
    if (!d || dm > *d) d = dm;
  }
  return d;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot -= c;
    if (slot.is_zero()) terms_.erase(m);
  }
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GradedClass GradedClass::operator-() const {
  GradedClass out = *this;
  return out *= Rational(-1);
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a.ring_, b.ring_);
  const int top = a.ring_->top_degree();
  Terms product;
  for (const auto& [ma, ca] : a.terms_) {
    const int da = a.ring_->degree(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (da + a.ring_->degree(mb) > top) continue;
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      product[m] += ca * cb;
    }
  }
  return {a.ring_, product};
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string GradedClass::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    return ring_->precedes(x.first, y.first);
  });
  std::string out;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const auto& [m, c] = ordered[k];
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    const std::string mono = monomial_string(*ring_, m);
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (k == 0) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

GradedClass cup(const GradedClass& a, const GradedClass& b) { return a * b; }

GradedClass power(const GradedClass& a, unsigned k) {
  GradedClass result = GradedClass::constant(a.ring(), Rational(1));
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

Rational evaluate_fundamental(const GradedClass& a) {
  return a.coefficient(a.ring()->fundamental_monomial());
}

namespace {

// Solve b * e = a restricted to b-degrees in `b_basis` and a-degrees in `a_basis`.
// Appends the particular solution to `out`; throws on inconsistency or ambiguity.
void solve_block(const GradedClass& a, const GradedClass& e, const std::vector<Monomial>& b_basis,
                 const std::vector<Monomial>& a_basis, int determined_through, Terms& out) {
  const RingPtr& ring = a.ring();
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < a_basis.size(); ++i) row_of[a_basis[i]] = i;

  FieldMatrix<Rational> mat(a_basis.size(), b_basis.size());
  for (std::size_t j = 0; j < b_basis.size(); ++j) {
    const GradedClass col = GradedClass::monomial(ring, b_basis[j]) * e;
    for (const auto& [m, c] : col.terms()) {
      const auto it = row_of.find(m);
      if (it != row_of.end()) mat(it->second, j) = c;
    }
  }
  std::vector<Rational> rhs(a_basis.size(), Rational(0));
  for (std::size_t i = 0; i < a_basis.size(); ++i) rhs[i] = a.coefficient(a_basis[i]);

  const auto sol = solve_linear(mat, rhs);
  if (!sol) {
    throw Error(ErrorCode::NoSolution, a.to_string() + " is not divisible by " + e.to_string());
  }
  for (const auto& null : sol->nullspace) {
    for (std::size_t j = 0; j < b_basis.size(); ++j) {
      if (!null[j].is_zero() && ring->degree(b_basis[j]) <= determined_through) {
        throw Error(ErrorCode::AmbiguousTopTerm,
                    "quotient " + a.to_string() + " / " + e.to_string() +
                        " is not unique in degree " + std::to_string(ring->degree(b_basis[j])));
      }
    }
  }
  for (std::size_t j = 0; j < b_basis.size(); ++j) {
    if (!sol->particular[j].is_zero()) out[b_basis[j]] += sol->particular[j];
  }
}

}  // namespace

GradedClass divide_by(const GradedClass& a, const GradedClass& e, std::optional<int> determined_through) {
  require_same_ring(a.ring(), e.ring());
  const RingPtr& ring = a.ring();
  const int top = ring->top_degree();
  if (e.is_zero()) {
    if (!a.is_zero()) throw Error(ErrorCode::NoSolution, "division of a nonzero class by zero");
    throw Error(ErrorCode::AmbiguousTopTerm, "zero divided by zero is undetermined");
  }
  const int k = *e.min_degree();
  const int dt = determined_through.value_or(top - k);

  Terms out;
  if (e.is_homogeneous(k)) {
    // Degree-by-degree: b_d * e = a_{d+k}.  Parts of a below degree k must vanish.
    for (int d = 0; d < k; d += 2) {
      if (!a.homogeneous_part(d).is_zero()) {
        throw Error(ErrorCode::NoSolution, a.to_string() + " is not divisible by " + e.to_string());
      }
    }
    for (int d = 0; d <= top; d += 2) {
      const auto b_basis = ring->basis(d);
      if (d + k > top) {
        if (d <= dt && !b_basis.empty()) {
          throw Error(ErrorCode::AmbiguousTopTerm,
                      "quotient by " + e.to_string() + " is not unique in degree " + std::to_string(d));
        }
        continue;
      }
      solve_block(a, e, b_basis, ring->basis(d + k), dt, out);
    }
  } else {
    const auto basis = ring->full_basis();
    solve_block(a, e, basis, basis, dt, out);
  }
  return {ring, out};
}

GradedClass evaluate_series(const PowerSeries& series, const GradedClass& y) {
  if (!y.constant_term().is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "series substitution needs a class with zero constant term");
  }
  GradedClass result = GradedClass::constant(y.ring(), series[0]);
  GradedClass y_pow = GradedClass::constant(y.ring(), Rational(1));
  for (std::size_t k = 1; k <= series.order(); ++k) {
    y_pow = y_pow * y;
    if (y_pow.is_zero()) break;
    result += y_pow * series[k];
  }
  return result;
}

}  // namespace kindex
