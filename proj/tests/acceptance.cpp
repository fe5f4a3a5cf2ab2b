// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
// Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kindex/ahss/cw_complex.hpp"
#include "kindex/ahss/spectral.hpp"
#include "kindex/charclass/classes.hpp"
#include "kindex/circleop/ks2.hpp"
#include "kindex/circleop/toeplitz.hpp"
#include "kindex/circleop/winding.hpp"
#include "kindex/error.hpp"
#include "kindex/indexthm/index.hpp"
#include "kindex/repring/homogeneous.hpp"
#include "kindex/repring/rep.hpp"
#include "kindex_cli/gallery.hpp"
#include "support/oracles.hpp"

namespace {

using namespace kindex;
namespace kt = kindex::testing;

// Collects the first few mismatches of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << count_ - failures_ << "/" << count_ << " checks";
    if (failures_ > 0) os << " [" << notes_.str() << "]";
    return os.str();
  }

 private:
  long count_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::string str(const Rational& r) { return r.to_string(); }

template <typename F>
bool raises(ErrorCode code, F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

CWComplex surface_cw(long g) {
  const auto k = static_cast<std::size_t>(2 * g);
  return make_cw("surface", {1, k, 1}, {IntMatrix::zero(k, 1), IntMatrix::zero(1, k)});
}

FinAbGroup sum_of(const std::vector<std::pair<int, FinAbGroup>>& graded) {
  FinAbGroup acc;
  for (const auto& [p, g] : graded) acc = direct_sum(acc, g);
  return acc;
}

LaurentPoly zpow(int n) { return LaurentPoly::monomial(n); }

void riemann_roch(Check& c) {
  for (long g = 0; g <= 5; ++g) {
    const Rational v = dolbeault_index(builtin_space("riemann_surface", g)).value;
    c.expect(v == Rational(1 - g), "g=" + std::to_string(g) + " gave " + str(v));
  }
}

void de_rham(Check& c) {
  for (long g = 0; g <= 5; ++g) {
    const Rational v = de_rham_index(builtin_space("riemann_surface", g)).value;
    c.expect(v == Rational(2 - 2 * g) && v == Rational(euler_characteristic(surface_cw(g))),
             "surface g=" + std::to_string(g) + " gave " + str(v));
  }
  for (long n = 1; n <= 4; ++n) {
    const Rational v = de_rham_index(builtin_space("cp", n)).value;
    c.expect(v == Rational(n + 1) && v == Rational(euler_characteristic(builtin_cw("cp", n))),
             "cp" + std::to_string(n) + " gave " + str(v));
  }
  for (long n = 1; n <= 3; ++n) {
    const Rational v = de_rham_index(builtin_space("sphere", 2 * n)).value;
    c.expect(v == Rational(2) && v == Rational(euler_characteristic(builtin_cw("sphere", 2 * n))),
             "sphere" + std::to_string(2 * n) + " gave " + str(v));
  }
}

void todd_genus(Check& c) {
  for (long n = 1; n <= 4; ++n) {
    const Space s = builtin_space("cp", n);
    const RootBundle t = RootBundle::from_tangent(s.ring, *s.complex_tangent);
    const GradedClass by_roots = todd(t);
    std::vector<GradedClass> chern;
    for (long j = 1; j <= n; ++j) chern.push_back(chern_class(t, static_cast<std::size_t>(j)));
    const GradedClass by_chern =
        multiplicative_class_from_chern(s.ring, chern, todd_series(static_cast<std::size_t>(n)), static_cast<std::size_t>(n));
    const Rational v = dolbeault_index(s).value;
    c.expect(by_roots == by_chern, "cp" + std::to_string(n) + " classes differ");
    c.expect(v == Rational(1) && evaluate_fundamental(by_chern) == Rational(1),
             "cp" + std::to_string(n) + " gave " + str(v));
  }
}

void mu_identity(Check& c) {
  std::mt19937 rng(20240601);
  const Space s = builtin_space("cp", 4);
  const GradedClass x = GradedClass::generator(s.ring, "x");
  const GradedClass one = GradedClass::constant(s.ring, Rational(1));
  for (int t = 0; t < 50; ++t) {
    const RootBundle b = kt::random_line_sum(s.ring, x, rng);
    const GradedClass mu = mu_class(b);
    c.expect(mu * euler_top(b) == lambda_alternating_ch(b), "mu*e failed on " + b.to_string());
    c.expect(mu * todd(conjugate(b)) == one * Rational(b.rank() % 2 == 0 ? 1 : -1),
             "mu*td(conj) failed on " + b.to_string());
  }
}

void wiener_hopf(Check& c) {
  for (int n = -5; n <= 5; ++n) {
    const LaurentMatrix f = LaurentMatrix::scalar(zpow(n));
    const long idx = wiener_hopf_index(f);
    const KerCoker explicit_dims = explicit_pn_dims(n);
    const KerCoker oracle = toeplitz_kernel_oracle(f, 2).dims;
    c.expect(idx == -n, "index(z^" + std::to_string(n) + ") = " + std::to_string(idx));
    c.expect(explicit_dims == oracle && explicit_dims.index() == idx, "dims disagree at n=" + std::to_string(n));
  }
  c.expect(wiener_hopf_index(LaurentMatrix::scalar(zpow(1))) == -1, "shift operator index");
}

void winding_soundness(Check& c) {
  std::mt19937 rng(20240602);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly q = kt::random_elliptic_laurent(rng, -4, 4);
    const long w = winding_number(q);
    const long oracle = kt::dense_grid_winding(q);
    c.expect(w == oracle, q.to_string() + ": " + std::to_string(w) + " vs " + std::to_string(oracle));
  }
  c.expect(raises(ErrorCode::SymbolVanishesOnCircle, [] { winding_number(parse_laurent("z - 1")); }),
           "z - 1 was not rejected");
}

void ks2_calculus(Check& c) {
  c.expect(alpha(bott_class()) == 1, "alpha(b)");
  c.expect(alpha(lambda_one()) == -1, "alpha(lambda1)");
  for (int n = -5; n <= 5; ++n) {
    c.expect(alpha(clutch_class(zpow(n))) == -n, "alpha(clutch z^" + std::to_string(n) + ")");
  }
  for (long k = -10; k <= 10; ++k) c.expect(alpha(beta(k)) == k, "alpha(beta(" + std::to_string(k) + "))");
  // T S^2: rank 1 with c_1[S^2] equal to the Euler number.
  const long c1 = evaluate_fundamental(builtin_space("sphere", 2).euler_class).to_long();
  const KS2Class t = clutch_class(parse_laurent("-z^-2"));
  c.expect(t == KS2Class{1, c1} && t == line_class(-2), "clutch(-z^-2) = " + t.to_string());
}

void ahss(Check& c) {
  for (long n = 1; n <= 6; ++n) {
    const KGroupsReport r = ahss_run(builtin_cw("sphere", n)).report;
    const bool even = n % 2 == 0;
    c.expect(sum_of(r.k0_graded) == FinAbGroup::free(even ? 2 : 1) &&
                 sum_of(r.k1_graded) == FinAbGroup::free(even ? 0 : 1) && !r.extension_ambiguous,
             "sphere " + std::to_string(n));
  }
  for (long n = 1; n <= 3; ++n) {
    const KGroupsReport r = ahss_run(builtin_cw("cp", n)).report;
    c.expect(sum_of(r.k0_graded) == FinAbGroup::free(static_cast<std::size_t>(n + 1)) &&
                 sum_of(r.k1_graded).is_trivial() && !r.extension_ambiguous,
             "cp " + std::to_string(n));
  }
  for (long n = 2; n <= 6; ++n) {
    const KGroupsReport r = ahss_run(builtin_cw("rp", n)).report;
    const std::vector<Integer> twos(static_cast<std::size_t>(n / 2), Integer(2));
    Integer order = 1;
    for (long i = 0; i < n / 2; ++i) order *= 2;
    const bool graded_ok = sum_of(r.k0_graded) == FinAbGroup::from_cyclic_orders(1, twos) &&
                           sum_of(r.k1_graded) == FinAbGroup::free(n % 2 == 1 ? 1 : 0);
    const bool known_ok = r.known_answer && r.known_answer->k0 == FinAbGroup::from_cyclic_orders(1, {order});
    c.expect(graded_ok, "rp " + std::to_string(n) + " graded pieces");
    c.expect(r.extension_ambiguous == (n >= 4), "rp " + std::to_string(n) + " ambiguity flag");
    c.expect(known_ok, "rp " + std::to_string(n) + " known answer");
  }
}

void representations(Check& c) {
  for (const char* name : {"z2_in_z4", "z3_in_s3", "trivial_in_z5"}) {
    const SubgroupEmbedding e = builtin_embedding(name);
    const FrobeniusReport r = check_frobenius(e);
    c.expect(r.all_pass && r.pairs.size() == e.ambient->irrep_count() * e.subgroup->irrep_count(),
             std::string("frobenius ") + name);
  }
  for (const char* name : {"trivial_in_z5", "trivial_in_s3", "trivial_in_z2xz3", "trivial_in_z4"}) {
    const SubgroupEmbedding e = builtin_embedding(name);
    const RepElement got = induce(e, RepElement::irreducible(e.subgroup, 0));
    std::vector<long> regular;
    for (std::size_t a = 0; a < e.ambient->irrep_count(); ++a) regular.push_back(e.ambient->dimension(a));
    c.expect(got.coords() == regular, std::string("regular rep ") + name + " gave " + got.to_string());
  }
}

void homogeneous(Check& c) {
  std::mt19937 rng(20240603);
  for (int t = 0; t < 20; ++t) {
    const LaurentMatrix p = kt::random_elliptic_symbol(rng, t % 2 == 1);
    const HomogeneousIndexResult r = circle_homogeneous_index(p, 3);
    c.expect(r.total.is_zero(), "case " + std::to_string(t) + " total " + r.total.to_string());
    std::map<long, ModeDims> reported;
    for (const auto& d : r.nonzero) reported[d.mode] = d;
    for (long m = -40; m <= 40; ++m) {
      const long want = kt::brute_kernel_dim(p, m);
      const auto it = reported.find(m);
      const long ker = it == reported.end() ? 0 : it->second.kernel;
      const long coker = it == reported.end() ? 0 : it->second.cokernel;
      c.expect(ker == want && coker == want,
               "case " + std::to_string(t) + " mode " + std::to_string(m) + ": " + std::to_string(ker) + " vs " +
                   std::to_string(want));
    }
  }
}

void property_suites(Check& c) {
  std::mt19937 rng(20240604);
  for (long n = 1; n <= 4; ++n) {
    const Space s = builtin_space("cp", n);
    const GradedClass x = GradedClass::generator(s.ring, "x");
    for (int t = 0; t < 10; ++t) {
      const RootBundle a = kt::random_line_sum(s.ring, x, rng, 3);
      const RootBundle b = kt::random_line_sum(s.ring, x, rng, 3);
      c.expect(chern_character(sum(a, b)) == chern_character(a) + chern_character(b), "ch additivity");
      c.expect(chern_character(tensor(a, b)) == chern_character(a) * chern_character(b), "ch multiplicativity");
      c.expect(todd(sum(a, b)) == todd(a) * todd(b), "td multiplicativity");
    }
  }
  for (int t = 0; t < 30; ++t) {
    const LaurentPoly a = kt::random_elliptic_laurent(rng, -3, 3);
    const LaurentPoly b = kt::random_elliptic_laurent(rng, -3, 3);
    c.expect(winding_number(a * b) == winding_number(a) + winding_number(b), "winding additivity");
  }
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m(1 + t % 4, 1 + (t / 4) % 4);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = d(rng);
    }
    const SmithForm f = smith_normal_form(m);
    c.expect(f.u * m * f.v == f.s, "snf identity");
  }
  const auto g = cli::run_gallery(std::nullopt);
  c.expect(g.at("all_pass").get<bool>(), "gallery " + g.at("value").get<std::string>());
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {"Riemann-Roch: Dolbeault index on genus-g surfaces is 1 - g", riemann_roch},
      {"de Rham index equals the Euler number and the cell count", de_rham},
      {"Todd genus of CP^n is 1 by roots and by Chern classes", todd_genus},
      {"mu identities on 50 random bundles over CP^4", mu_identity},
      {"Wiener-Hopf index of z^n with explicit and oracle dimensions", wiener_hopf},
      {"winding number against a dense-grid oracle, 100 random symbols", winding_soundness},
      {"K(S^2) calculus: alpha, beta, clutching, tangent bundle", ks2_calculus},
      {"AHSS graded groups for spheres, CP^n and RP^n", ahss},
      {"Frobenius reciprocity and the regular representation", representations},
      {"homogeneous circle operators against brute-force ranks", homogeneous},
      {"property suites and gallery", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string crash;
    try {
      criteria[i].body(c);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const bool pass = c.ok() && crash.empty();
    if (!pass) ++failed;
    std::printf("%s  %2zu  %s  (%s%s)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].title, c.summary().c_str(),
                crash.empty() ? "" : ("; threw: " + crash).c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
