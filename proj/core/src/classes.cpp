#include "kindex/charclass/classes.hpp"

#include <map>

#include "kindex/error.hpp"

namespace kindex {

namespace {

std::size_t series_order(const RingPtr& ring) { return static_cast<std::size_t>(ring->top_degree() / 2); }

GradedClass one(const RingPtr& ring) { return GradedClass::constant(ring, Rational(1)); }

GradedClass product_of_series(const RootBundle& b, const PowerSeries& s) {
  GradedClass acc = one(b.ring());
  for (const auto& r : b.roots()) acc = acc * evaluate_series(s, r);
  return acc;
}

}  // namespace

GradedClass total_chern(const RootBundle& b) {
  GradedClass acc = one(b.ring());
  for (const auto& r : b.roots()) acc = acc * (one(b.ring()) + r);
  return acc;
}

GradedClass chern_class(const RootBundle& b, std::size_t k) {
  if (k == 0) return one(b.ring());
  const std::size_t cap = std::min(k, series_order(b.ring()));
  if (k > cap) return GradedClass(b.ring());
  // e[j] after processing a prefix of the roots.
  std::vector<GradedClass> e(cap + 1, GradedClass(b.ring()));
  e[0] = one(b.ring());
  for (const auto& r : b.roots()) {
    for (std::size_t j = cap; j >= 1; --j) e[j] += e[j - 1] * r;
  }
  return e[k];
}

GradedClass chern_character(const RootBundle& b) {
  GradedClass acc = GradedClass::constant(b.ring(), Rational(b.rank()));
  const std::size_t n = series_order(b.ring());
  std::vector<GradedClass> powers = b.roots();
  for (std::size_t k = 1; k <= n; ++k) {
    GradedClass pk(b.ring());
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (k > 1) powers[i] = powers[i] * b.roots()[i];
      pk += powers[i];
    }
    acc += pk * factorial(static_cast<unsigned>(k)).inverse();
  }
  return acc;
}

GradedClass todd(const RootBundle& b) { return product_of_series(b, todd_series(series_order(b.ring()))); }

GradedClass euler_top(const RootBundle& b) { return chern_class(b, static_cast<std::size_t>(b.rank())); }

GradedClass lambda_alternating_ch(const RootBundle& b) {
  if (b.rank_adjustment() < 0) {
    throw Error(ErrorCode::VirtualBundleUnsupported,
                "alternating exterior sum is undefined after removing a trivial summand");
  }
  if (b.rank_adjustment() > 0) return GradedClass(b.ring());
  const std::size_t n = series_order(b.ring());
  PowerSeries s = PowerSeries::constant(Rational(1), n) - PowerSeries::exp(n);
  return product_of_series(b, s);
}

GradedClass mu_class(const RootBundle& b) {
  GradedClass acc = product_of_series(b, mu_series(series_order(b.ring())));
  // Each trivial line contributes the constant -1, added or removed alike.
  if (b.rank_adjustment() % 2 != 0) acc = -acc;
  return acc;
}

RingPtr generic_root_ring(std::size_t rank, int top_degree) {
  std::vector<Generator> gens;
  gens.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) gens.push_back({"t" + std::to_string(i), 2});
  return RingPresentation::free_truncated("generic(" + std::to_string(rank) + "," + std::to_string(top_degree) + ")",
                                          std::move(gens), top_degree);
}

GradedClass substitute_elementary(const GradedClass& symmetric, const RingPtr& target,
                                  const std::vector<GradedClass>& values) {
  const RingPtr& g = symmetric.ring();
  const std::size_t r = g->generator_count();
  for (const auto& v : values) {
    if (!same_ring(v.ring(), target)) throw Error(ErrorCode::RingMismatch, "substituted class in wrong ring");
  }

  // e_j in the generic ring.
  std::vector<GradedClass> e;
  {
    std::vector<GradedClass> roots;
    for (std::size_t i = 0; i < r; ++i) roots.push_back(GradedClass::monomial(g, [&] {
      Monomial m(r, 0);
      m[i] = 1;
      return m;
    }()));
    RootBundle generic(g, roots);
    for (std::size_t j = 1; j <= r; ++j) e.push_back(chern_class(generic, j));
  }

  std::map<std::pair<std::size_t, int>, GradedClass> gen_pow;
  std::map<std::pair<std::size_t, int>, GradedClass> tgt_pow;
  auto gpow = [&](std::size_t j, int k) -> const GradedClass& {
    auto it = gen_pow.find({j, k});
    if (it == gen_pow.end()) it = gen_pow.emplace(std::make_pair(j, k), power(e[j], k)).first;
    return it->second;
  };
  auto tpow = [&](std::size_t j, int k) -> GradedClass {
    if (j >= values.size()) return k == 0 ? one(target) : GradedClass(target);
    auto it = tgt_pow.find({j, k});
    if (it == tgt_pow.end()) it = tgt_pow.emplace(std::make_pair(j, k), power(values[j], k)).first;
    return it->second;
  };

  GradedClass rest = symmetric;
  GradedClass out(target);
  while (!rest.is_zero()) {
    // Lex-leading monomial; for a symmetric class its exponents are non-increasing.
    const auto& [lead, coeff] = *rest.terms().rbegin();
    const Monomial a = lead;
    const Rational c = coeff;
    for (std::size_t i = 1; i < r; ++i) {
      if (a[i] > a[i - 1]) throw Error(ErrorCode::InvalidArgument, "class is not symmetric in the roots");
    }
    GradedClass gen_term = one(g);
    GradedClass tgt_term = one(target);
    for (std::size_t j = 0; j < r; ++j) {
      const int k = a[j] - (j + 1 < r ? a[j + 1] : 0);
      if (k == 0) continue;
      gen_term = gen_term * gpow(j, k);
      tgt_term = tgt_term * tpow(j, k);
    }
    rest -= gen_term * c;
    out += tgt_term * c;
  }
  return out;
}

GradedClass multiplicative_class_from_chern(const RingPtr& ring, const std::vector<GradedClass>& chern,
                                            const PowerSeries& series, std::size_t rank) {
  if (chern.size() > rank) {
    throw Error(ErrorCode::DegreeMismatch, "more Chern classes than the rank allows");
  }
  for (std::size_t j = 0; j < chern.size(); ++j) {
    if (!same_ring(chern[j].ring(), ring)) throw Error(ErrorCode::RingMismatch, "Chern class in wrong ring");
    if (!chern[j].is_homogeneous(static_cast<int>(2 * (j + 1)))) {
      throw Error(ErrorCode::DegreeMismatch,
                  "c_" + std::to_string(j + 1) + " must be homogeneous of degree " + std::to_string(2 * (j + 1)));
    }
  }
  const RingPtr g = generic_root_ring(rank, ring->top_degree());
  GradedClass prod = one(g);
  for (std::size_t i = 0; i < rank; ++i) {
    Monomial m(rank, 0);
    m[i] = 1;
    prod = prod * evaluate_series(series, GradedClass::monomial(g, m));
  }
  return substitute_elementary(prod, ring, chern);
}

}  // namespace kindex
