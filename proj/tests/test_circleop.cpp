#include <gtest/gtest.h>

#include <random>

#include "kindex/circleop/ks2.hpp"
#include "kindex/circleop/laurent.hpp"
#include "kindex/circleop/toeplitz.hpp"
#include "kindex/circleop/winding.hpp"
#include "kindex/cohomring/space.hpp"
#include "kindex/error.hpp"
#include "support/oracles.hpp"

namespace kindex {
namespace {

using testing::dense_grid_winding;
using testing::random_elliptic_laurent;

LaurentPoly zpow(int n) { return LaurentPoly::monomial(n); }

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(Laurent, ParseAndPrint) {
  EXPECT_EQ(parse_laurent("2 + z").to_string(), "2 + z");
  EXPECT_EQ(parse_laurent("-z^-2").to_string(), "-z^-2");
  EXPECT_EQ(parse_laurent("(z - 1)^2"), zpow(2) - zpow(1) * GaussianRational(2) + zpow(0));
  EXPECT_EQ(parse_laurent("3i z").coefficient(1), GaussianRational(Rational(0), Rational(3)));
  expect_code(ErrorCode::ParseError, [] { parse_laurent("z +"); });
  expect_code(ErrorCode::ParseError, [] { parse_laurent("w"); });
}

TEST(Laurent, ExactDivisionAndDeterminant) {
  const LaurentPoly p = parse_laurent("z^2 - 1");
  EXPECT_EQ(exact_divide(p, parse_laurent("z - 1")), parse_laurent("z + 1"));
  expect_code(ErrorCode::InvalidArgument, [&] { exact_divide(p, parse_laurent("z - 2")); });
  const LaurentMatrix m({{zpow(1), parse_laurent("3")}, {parse_laurent("z^-1"), zpow(-2)}});
  EXPECT_EQ(determinant(m), zpow(-1) - parse_laurent("3z^-1"));
}

TEST(Winding, Examples) {
  EXPECT_EQ(winding_number(zpow(3)), 3);
  EXPECT_EQ(winding_number(zpow(-1)), -1);
  EXPECT_EQ(winding_number(parse_laurent("2 + z")), 0);
  EXPECT_EQ(winding_number(parse_laurent("1/2 + z")), 1);
  EXPECT_EQ(winding_number(parse_laurent("(z - 1/3)(z - 3)z^-2")), -1);
}

TEST(Winding, VanishingSymbolRaises) {
  expect_code(ErrorCode::SymbolVanishesOnCircle, [] { winding_number(parse_laurent("z - 1")); });
  expect_code(ErrorCode::SymbolVanishesOnCircle, [] { winding_number(parse_laurent("z^2 + 1")); });
  expect_code(ErrorCode::ZeroPolynomial, [] { winding_number(LaurentPoly()); });
}

TEST(Winding, AgreesWithDenseGridOracle) {
  std::mt19937 rng(107);
  for (int t = 0; t < 150; ++t) {
    const LaurentPoly q = random_elliptic_laurent(rng, -4, 4);
    EXPECT_EQ(winding_number(q), dense_grid_winding(q)) << q.to_string();
  }
}

TEST(Winding, IsAdditiveUnderProducts) {
  std::mt19937 rng(109);
  for (int t = 0; t < 60; ++t) {
    const LaurentPoly a = random_elliptic_laurent(rng, -3, 3);
    const LaurentPoly b = random_elliptic_laurent(rng, -3, 3);
    EXPECT_EQ(winding_number(a * b), winding_number(a) + winding_number(b)) << a.to_string() << " ; " << b.to_string();
  }
}

TEST(Winding, NearlyVanishingSymbolNeedsDepth) {
  // Root at radius 1 + 1/1000: elliptic but close to the circle.
  const LaurentPoly q = parse_laurent("z - 1001/1000");
  EXPECT_EQ(winding_number(q), 0);
  EXPECT_EQ(winding_number(parse_laurent("z - 999/1000")), 1);
  WindingOptions shallow;
  shallow.max_depth = 1;
  // Exhausted refinement is reported as a non-elliptic symbol.
  expect_code(ErrorCode::SymbolVanishesOnCircle, [&] { winding_number(q, shallow); });
  EXPECT_GT(winding_details(q).depth_reached, 1);
}

TEST(WienerHopf, MonomialIndex) {
  for (int n = -5; n <= 5; ++n) EXPECT_EQ(wiener_hopf_index(LaurentMatrix::scalar(zpow(n))), -n);
}

TEST(WienerHopf, MatrixExamples) {
  EXPECT_EQ(wiener_hopf_index(LaurentMatrix::identity(3)), 0);
  EXPECT_EQ(wiener_hopf_index(LaurentMatrix::diagonal({zpow(1), zpow(-2)})), 1);
}

TEST(WienerHopf, ExplicitDims) {
  EXPECT_EQ(explicit_pn_dims(2), (KerCoker{0, 2}));
  EXPECT_EQ(explicit_pn_dims(0), (KerCoker{0, 0}));
  EXPECT_EQ(explicit_pn_dims(-3), (KerCoker{3, 0}));
}

TEST(WienerHopf, ToeplitzOracleAgreesOnMonomials) {
  for (int n = -5; n <= 5; ++n) {
    const ToeplitzOracleResult r = toeplitz_kernel_oracle(LaurentMatrix::scalar(zpow(n)), 4);
    EXPECT_EQ(r.dims, explicit_pn_dims(n)) << n;
  }
}

TEST(WienerHopf, ToeplitzOracleMatchesIndexOnDiagonalCorpus) {
  // Entries c z^k, 2 + z or 3 - z^-1 keep every kernel polynomial, which is
  // what a truncation oracle can see.
  std::mt19937 rng(113);
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<int> c(1, 5);
  const std::vector<LaurentPoly> units{LaurentPoly::constant(GaussianRational(1)), parse_laurent("2 + z"),
                                       parse_laurent("3 - z^-1")};
  for (int t = 0; t < 24; ++t) {
    const LaurentPoly a = zpow(e(rng)) * LaurentPoly::constant(GaussianRational(Rational(c(rng)), Rational(t % 2)));
    const LaurentPoly b = t % 3 == 0 ? units[static_cast<std::size_t>(t / 3 % 3)]
                                     : zpow(e(rng)) * LaurentPoly::constant(GaussianRational(c(rng)));
    const LaurentMatrix f = LaurentMatrix::diagonal({a, b});
    const ToeplitzOracleResult r = toeplitz_kernel_oracle(f, 4);
    EXPECT_EQ(r.dims.index(), wiener_hopf_index(f)) << a.to_string() << ", " << b.to_string();
  }
  for (int n = -5; n <= 5; ++n) {
    const LaurentMatrix f = LaurentMatrix::scalar(zpow(n) * LaurentPoly::constant(GaussianRational(3)));
    EXPECT_EQ(toeplitz_kernel_oracle(f, 4).dims.index(), -n);
  }
  EXPECT_EQ(toeplitz_kernel_oracle(LaurentMatrix::scalar(parse_laurent("2 + z")), 10).dims, (KerCoker{0, 0}));
  EXPECT_EQ(toeplitz_kernel_oracle(LaurentMatrix::identity(2), 4).dims, (KerCoker{0, 0}));
}

TEST(ConstCoeff, DerivativeOperator) {
  const ConstCoeffResult r = const_coeff_index(parse_laurent("i xi", "xi"));
  EXPECT_EQ(r.dims, (KerCoker{1, 1}));
  EXPECT_EQ(r.kernel_modes, std::vector<long>{0});
}

TEST(ConstCoeff, Examples) {
  EXPECT_EQ(const_coeff_index(parse_laurent("1", "xi")).dims, (KerCoker{0, 0}));
  const ConstCoeffResult r = const_coeff_index(parse_laurent("(xi - 2)(xi + 5)", "xi"));
  EXPECT_EQ(r.dims, (KerCoker{2, 2}));
  EXPECT_EQ(r.kernel_modes, (std::vector<long>{-5, 2}));
  expect_code(ErrorCode::ZeroPolynomial, [] { const_coeff_index(LaurentPoly()); });
}

TEST(ConstCoeff, CauchyBoundContainsAllIntegerRoots) {
  std::mt19937 rng(127);
  std::uniform_int_distribution<long> root(-30, 30);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly p = LaurentPoly::constant(GaussianRational(1 + t % 4));
    std::vector<long> roots;
    for (int i = 0; i < 1 + t % 3; ++i) {
      roots.push_back(root(rng));
      p = p * (LaurentPoly::monomial(1) - LaurentPoly::constant(GaussianRational(roots.back())));
    }
    const long b = cauchy_bound(p);
    for (long r : roots) {
      EXPECT_LE(std::abs(r), b);
      EXPECT_TRUE(evaluate_at_integer(p, r).is_zero());
    }
  }
}

TEST(KS2, AlphaOnGenerators) {
  EXPECT_EQ(alpha(bott_class()), 1);
  EXPECT_EQ(alpha(lambda_one()), -1);
  for (long k = -10; k <= 10; ++k) EXPECT_EQ(alpha(beta(k)), k);
}

TEST(KS2, ClutchingLineBundles) {
  for (int n = -5; n <= 5; ++n) {
    const KS2Class c = clutch_class(zpow(n));
    EXPECT_EQ(c, line_class(n));
    EXPECT_EQ(alpha(c), -n);
    // The Toeplitz operator with the same symbol has index alpha(c) = -n.
    EXPECT_EQ(wiener_hopf_index(LaurentMatrix::scalar(zpow(n))), alpha(c));
  }
  EXPECT_EQ(clutch_class(parse_laurent("1")), (KS2Class{1, 0}));
  EXPECT_EQ(clutch_class(zpow(1)), (KS2Class{1, -1}));
}

TEST(KS2, TangentBundleOfTheSphere) {
  // T S^2 has rank 1 and c_1[S^2] = chi(S^2) = 2, so its class is 1 + 2b.
  const Space s2 = builtin_space("sphere", 2);
  const long c1 = evaluate_fundamental(s2.euler_class).to_long();
  EXPECT_EQ(clutch_class(parse_laurent("-z^-2")), (KS2Class{1, c1}));
  EXPECT_EQ(ks2_chern_character(clutch_class(parse_laurent("-z^-2"))), GradedClass::constant(s2.ring, Rational(1)) + s2.euler_class);
}

TEST(KS2, ClutchingIsMultiplicative) {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      EXPECT_EQ(clutch_class(zpow(a) * zpow(b)), ks2_mul(clutch_class(zpow(a)), clutch_class(zpow(b))));
    }
  }
  std::mt19937 rng(131);
  for (int t = 0; t < 20; ++t) {
    const LaurentPoly f = random_elliptic_laurent(rng, -3, 3);
    const LaurentPoly g = random_elliptic_laurent(rng, -3, 3);
    EXPECT_EQ(clutch_class(f * g), ks2_mul(clutch_class(f), clutch_class(g)));
  }
}

TEST(KS2, RingLaws) {
  const KS2Class b = bott_class();
  EXPECT_EQ(ks2_mul(b, b), (KS2Class{0, 0}));
  EXPECT_EQ(ks2_add(line_class(2), line_class(-1)), (KS2Class{2, -1}));
  EXPECT_EQ(alpha(ks2_add(beta(3), beta(-5))), -2);
  EXPECT_EQ(ks2_sub(line_class(0), line_class(1)), b);
}

TEST(KS2, MatrixClutching) {
  const LaurentMatrix f = LaurentMatrix::diagonal({zpow(1), zpow(2)});
  EXPECT_EQ(clutch_class(f), (KS2Class{2, -3}));
}

}  // namespace
}  // namespace kindex
