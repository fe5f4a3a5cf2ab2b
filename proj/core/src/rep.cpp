#include "kindex/repring/rep.hpp"

#include "kindex/error.hpp"

namespace kindex {

namespace {

void require_same(const RepElement& x, const RepElement& y) {
  if (x.group() != y.group() && x.group()->name != y.group()->name) {
    throw Error(ErrorCode::GroupMismatch,
                "representations of '" + x.group()->name + "' and '" + y.group()->name + "' cannot be combined");
  }
}

void drop_zero_modes(std::map<long, long>& m) {
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
}

// Coordinates of a class function over the irreducibles of a finite group.
std::vector<long> expand(const GroupData& g, const std::vector<Cyclotomic>& chi) {
  std::vector<long> out(g.irrep_count(), 0);
  for (std::size_t a = 0; a < g.irrep_count(); ++a) {
    Cyclotomic s;
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
      s += chi[c] * g.table[a][c].conj() * Rational(g.classes[c].size, g.order);
    }
    if (!s.is_rational() || !s.to_rational().is_integer()) {
      throw Error(ErrorCode::NonIntegralExpansion,
                  "class function has coefficient " + s.to_string() + " on " + g.irreps[a] + " of " + g.name);
    }
    out[a] = s.to_rational().to_long();
  }
  return out;
}

// Character of x on each subgroup class, via the embedding.
std::vector<Cyclotomic> restricted_character(const SubgroupEmbedding& e, const RepElement& x) {
  const auto& sub = e.subgroup->classes;
  std::vector<Cyclotomic> chi(sub.size());
  for (std::size_t j = 0; j < sub.size(); ++j) {
    if (e.ambient->is_circle) {
      const auto d = static_cast<unsigned>(e.circle_denominator);
      for (const auto& [n, c] : x.modes()) chi[j] += Cyclotomic::root_power(d, n * e.rotation[j]) * Rational(c);
    } else {
      chi[j] = x.character(e.class_map[j]);
    }
  }
  return chi;
}

}  // namespace

RepElement::RepElement(GroupPtr g) : g_(std::move(g)) {
  if (!g_->is_circle) coords_.assign(g_->irrep_count(), 0);
}

RepElement::RepElement(GroupPtr g, std::vector<long> coords) : g_(std::move(g)), coords_(std::move(coords)) {
  if (g_->is_circle) throw Error(ErrorCode::InvalidArgument, "circle representations are given by modes");
  if (coords_.size() != g_->irrep_count()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(g_->irrep_count()) + " coordinates for " +
                                                g_->name + ", got " + std::to_string(coords_.size()));
  }
}

RepElement::RepElement(GroupPtr g, std::map<long, long> modes) : g_(std::move(g)), modes_(std::move(modes)) {
  if (!g_->is_circle) throw Error(ErrorCode::InvalidArgument, g_->name + " representations are given by coordinates");
  drop_zero_modes(modes_);
}

RepElement RepElement::irreducible(GroupPtr g, long alpha) {
  if (g->is_circle) return RepElement(g, std::map<long, long>{{alpha, 1}});
  if (alpha < 0 || static_cast<std::size_t>(alpha) >= g->irrep_count()) {
    throw Error(ErrorCode::InvalidArgument, "irreducible index " + std::to_string(alpha) + " out of range for " + g->name);
  }
  RepElement r(g);
  r.coords_[static_cast<std::size_t>(alpha)] = 1;
  return r;
}

long RepElement::coefficient(long alpha) const {
  if (g_->is_circle) {
    const auto it = modes_.find(alpha);
    return it == modes_.end() ? 0 : it->second;
  }
  return coords_.at(static_cast<std::size_t>(alpha));
}

bool RepElement::is_zero() const {
  for (long c : coords_) {
    if (c != 0) return false;
  }
  return modes_.empty();
}

long RepElement::dimension() const {
  long d = 0;
  if (g_->is_circle) {
    for (const auto& [n, c] : modes_) d += c;
  } else {
    for (std::size_t a = 0; a < coords_.size(); ++a) d += coords_[a] * g_->dimension(a);
  }
  return d;
}

Cyclotomic RepElement::character(std::size_t cls) const {
  if (g_->is_circle) throw Error(ErrorCode::InvalidArgument, "circle characters are not tabulated by class");
  Cyclotomic s;
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    if (coords_[a] != 0) s += g_->table[a].at(cls) * Rational(coords_[a]);
  }
  return s;
}

RepElement& RepElement::operator+=(const RepElement& o) {
  require_same(*this, o);
  for (std::size_t a = 0; a < coords_.size(); ++a) coords_[a] += o.coords_[a];
  for (const auto& [n, c] : o.modes_) modes_[n] += c;
  drop_zero_modes(modes_);
  return *this;
}

RepElement& RepElement::operator-=(const RepElement& o) { return *this += -1 * o; }

RepElement operator*(long s, RepElement a) {
  for (auto& c : a.coords_) c *= s;
  for (auto& [n, c] : a.modes_) c *= s;
  drop_zero_modes(a.modes_);
  return a;
}

bool operator==(const RepElement& a, const RepElement& b) {
  return a.g_->name == b.g_->name && a.coords_ == b.coords_ && a.modes_ == b.modes_;
}

std::string RepElement::to_string() const {
  std::string out;
  auto term = [&](long c, const std::string& name) {
    if (c == 0) return;
    const long mag = c < 0 ? -c : c;
    const std::string body = mag == 1 ? name : std::to_string(mag) + "*" + name;
    if (out.empty()) {
      out = c < 0 ? "-" + body : body;
    } else {
      out += c < 0 ? " - " : " + ";
      out += body;
    }
  };
  if (g_->is_circle) {
    for (const auto& [n, c] : modes_) term(c, n == 0 ? "1" : (n == 1 ? "z" : "z^" + std::to_string(n)));
  } else {
    for (std::size_t a = 0; a < coords_.size(); ++a) term(coords_[a], g_->irreps[a]);
  }
  return out.empty() ? "0" : out;
}

long inner_product(const RepElement& x, const RepElement& y) {
  require_same(x, y);
  const GroupData& g = *x.group();
  if (g.is_circle) {
    long s = 0;
    for (const auto& [n, c] : x.modes()) s += c * y.coefficient(n);
    return s;
  }
  Cyclotomic s;
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    s += x.character(c) * y.character(c).conj() * Rational(g.classes[c].size, g.order);
  }
  if (!s.is_rational() || !s.to_rational().is_integer()) {
    throw Error(ErrorCode::NonIntegralExpansion, "pairing on " + g.name + " gave " + s.to_string());
  }
  return s.to_rational().to_long();
}

RepElement multiply(const RepElement& x, const RepElement& y) {
  require_same(x, y);
  const GroupPtr& g = x.group();
  if (g->is_circle) {
    std::map<long, long> m;
    for (const auto& [a, c] : x.modes()) {
      for (const auto& [b, d] : y.modes()) m[a + b] += c * d;
    }
    return RepElement(g, std::move(m));
  }
  std::vector<Cyclotomic> chi;
  for (std::size_t c = 0; c < g->classes.size(); ++c) chi.push_back(x.character(c) * y.character(c));
  return RepElement(g, expand(*g, chi));
}

RepElement restrict_rep(const SubgroupEmbedding& e, const RepElement& x) {
  if (x.group()->name != e.ambient->name) {
    throw Error(ErrorCode::GroupMismatch, "cannot restrict a representation of '" + x.group()->name + "' along '" +
                                              e.name + "'");
  }
  return RepElement(e.subgroup, expand(*e.subgroup, restricted_character(e, x)));
}

RepElement induce(const SubgroupEmbedding& e, const RepElement& x, std::optional<long> mode_bound) {
  if (x.group()->name != e.subgroup->name) {
    throw Error(ErrorCode::GroupMismatch, "cannot induce a representation of '" + x.group()->name + "' along '" +
                                              e.name + "'");
  }
  if (e.ambient->is_circle) {
    if (x.is_zero()) return RepElement(e.ambient);
    if (!mode_bound) {
      throw Error(ErrorCode::InfiniteSupport, "induction to the circle has infinitely many modes; give a mode bound");
    }
    if (*mode_bound < 0) throw Error(ErrorCode::InvalidArgument, "mode bound must be nonnegative");
    std::map<long, long> m;
    for (long n = -*mode_bound; n <= *mode_bound; ++n) {
      m[n] = inner_product(restrict_rep(e, RepElement::irreducible(e.ambient, n)), x);
    }
    return RepElement(e.ambient, std::move(m));
  }
  std::vector<long> coords(e.ambient->irrep_count(), 0);
  for (std::size_t a = 0; a < coords.size(); ++a) {
    coords[a] = inner_product(restrict_rep(e, RepElement::irreducible(e.ambient, static_cast<long>(a))), x);
  }
  return RepElement(e.ambient, std::move(coords));
}

FrobeniusReport check_frobenius(const SubgroupEmbedding& e, std::optional<long> mode_bound) {
  FrobeniusReport rep;
  std::vector<long> ambient_irreps;
  if (e.ambient->is_circle) {
    const long b = mode_bound.value_or(static_cast<long>(e.circle_denominator));
    for (long n = -b; n <= b; ++n) ambient_irreps.push_back(n);
  } else {
    for (std::size_t a = 0; a < e.ambient->irrep_count(); ++a) ambient_irreps.push_back(static_cast<long>(a));
  }
  const long bound = ambient_irreps.empty() ? 0 : ambient_irreps.back();
  for (long a : ambient_irreps) {
    const RepElement wa = RepElement::irreducible(e.ambient, a);
    const RepElement res = restrict_rep(e, wa);
    for (std::size_t b = 0; b < e.subgroup->irrep_count(); ++b) {
      const RepElement wb = RepElement::irreducible(e.subgroup, static_cast<long>(b));
      FrobeniusPair p;
      p.ambient_irrep = a;
      p.subgroup_irrep = static_cast<long>(b);
      p.lhs = inner_product(wa, induce(e, wb, bound));
      p.rhs = inner_product(res, wb);
      p.pass = p.lhs == p.rhs;
      rep.all_pass = rep.all_pass && p.pass;
      rep.pairs.push_back(p);
    }
  }
  return rep;
}

}  // namespace kindex
