#include <gtest/gtest.h>

#include <random>

#include "kindex/circleop/laurent.hpp"
#include "kindex/error.hpp"
#include "kindex/exactalg/linalg.hpp"
#include "kindex/repring/cyclotomic.hpp"
#include "kindex/repring/group.hpp"
#include "kindex/repring/homogeneous.hpp"
#include "kindex/repring/rep.hpp"
#include "support/oracles.hpp"

namespace kindex {
namespace {

using testing::finite_embedding_names;
using testing::induce_by_cosets;
using testing::random_rep;

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

RepElement rep(const GroupPtr& g, std::vector<long> c) { return {g, std::move(c)}; }

TEST(Cyclotomic, RootsOfUnity) {
  for (unsigned m : {1u, 2u, 3u, 4u, 6u, 12u}) {
    Cyclotomic acc = Cyclotomic::rational(Rational(1));
    const Cyclotomic z = Cyclotomic::root_power(m, 1);
    for (unsigned k = 0; k < m; ++k) acc *= z;
    EXPECT_EQ(acc, Cyclotomic::rational(Rational(1))) << m;
    EXPECT_EQ(z * z.conj(), Cyclotomic::rational(Rational(1)));
  }
  // 1 + zeta + zeta^2 = 0 for a primitive cube root.
  EXPECT_TRUE((Cyclotomic::root_power(3, 0) + Cyclotomic::root_power(3, 1) + Cyclotomic::root_power(3, 2)).is_zero());
  EXPECT_EQ(Cyclotomic::root_power(4, 1) * Cyclotomic::root_power(6, 1), Cyclotomic::root_power(12, 5));
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Integer>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12).size(), 5u);
}

TEST(Group, BuiltinTablesValidate) {
  for (const char* name : {"trivial", "z2", "z5", "z12", "z2xz3", "z4xz2", "s3"}) {
    const GroupPtr g = builtin_group(name);
    EXPECT_NO_THROW(validate_group(*g)) << name;
    long dims = 0;
    for (std::size_t a = 0; a < g->irrep_count(); ++a) dims += g->dimension(a) * g->dimension(a);
    EXPECT_EQ(dims, g->order) << name;
  }
  expect_code(ErrorCode::UnknownGroup, [] { builtin_group("a5"); });
  expect_code(ErrorCode::UnknownGroup, [] { builtin_embedding("z3_in_z4"); });
}

TEST(Group, BrokenTableIsRejected) {
  GroupData g = *builtin_group("s3");
  g.table[2][2] = Cyclotomic::rational(Rational(1));
  expect_code(ErrorCode::InvalidArgument, [&] { validate_group(g); });
}

TEST(Rep, SchurOrthonormality) {
  for (const char* name : {"z4", "z6", "z3xz3", "s3"}) {
    const GroupPtr g = builtin_group(name);
    for (std::size_t a = 0; a < g->irrep_count(); ++a) {
      for (std::size_t b = 0; b < g->irrep_count(); ++b) {
        EXPECT_EQ(inner_product(RepElement::irreducible(g, static_cast<long>(a)),
                                RepElement::irreducible(g, static_cast<long>(b))),
                  a == b ? 1 : 0);
      }
    }
  }
}

TEST(Rep, RestrictionExamples) {
  const SubgroupEmbedding z2z4 = builtin_embedding("z2_in_z4");
  EXPECT_EQ(restrict_rep(z2z4, RepElement::irreducible(z2z4.ambient, 1)), RepElement::irreducible(z2z4.subgroup, 1));
  const SubgroupEmbedding z3s3 = builtin_embedding("z3_in_s3");
  EXPECT_EQ(restrict_rep(z3s3, RepElement::irreducible(z3s3.ambient, 2)), rep(z3s3.subgroup, {0, 1, 1}));
}

TEST(Rep, InductionExamples) {
  const SubgroupEmbedding z2z4 = builtin_embedding("z2_in_z4");
  EXPECT_EQ(induce(z2z4, RepElement::irreducible(z2z4.subgroup, 0)), rep(z2z4.ambient, {1, 0, 1, 0}));
  EXPECT_TRUE(induce(z2z4, RepElement(z2z4.subgroup)).is_zero());
  for (const char* name : {"trivial_in_z5", "trivial_in_s3", "trivial_in_z2xz3", "trivial_in_trivial"}) {
    const SubgroupEmbedding e = builtin_embedding(name);
    const RepElement regular = induce(e, RepElement::irreducible(e.subgroup, 0));
    for (std::size_t a = 0; a < e.ambient->irrep_count(); ++a) {
      EXPECT_EQ(regular.coefficient(static_cast<long>(a)), e.ambient->dimension(a)) << name;
    }
  }
}

TEST(Rep, InductionMatchesCosetFormula) {
  std::mt19937 rng(139);
  for (const auto& name : finite_embedding_names()) {
    const SubgroupEmbedding e = builtin_embedding(name);
    for (std::size_t b = 0; b < e.subgroup->irrep_count(); ++b) {
      const RepElement x = RepElement::irreducible(e.subgroup, static_cast<long>(b));
      EXPECT_EQ(induce(e, x).coords(), induce_by_cosets(e, x)) << name << " irrep " << b;
    }
    for (int t = 0; t < 5; ++t) {
      const RepElement x = random_rep(e.subgroup, rng);
      EXPECT_EQ(induce(e, x).coords(), induce_by_cosets(e, x)) << name;
    }
  }
}

TEST(Rep, AdjointnessOnRandomElements) {
  std::mt19937 rng(149);
  for (const auto& name : finite_embedding_names()) {
    const SubgroupEmbedding e = builtin_embedding(name);
    for (int t = 0; t < 20; ++t) {
      const RepElement x = random_rep(e.subgroup, rng);
      const RepElement y = random_rep(e.ambient, rng);
      EXPECT_EQ(inner_product(y, induce(e, x)), inner_product(restrict_rep(e, y), x)) << name;
    }
  }
}

TEST(Rep, AdjointnessIntoTheCircle) {
  std::mt19937 rng(151);
  std::uniform_int_distribution<long> mode(-6, 6);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (const char* name : {"z2_in_circle", "z3_in_circle", "z5_in_circle"}) {
    const SubgroupEmbedding e = builtin_embedding(name);
    for (int t = 0; t < 10; ++t) {
      const RepElement x = random_rep(e.subgroup, rng);
      std::map<long, long> modes;
      for (int i = 0; i < 3; ++i) modes[mode(rng)] += coef(rng);
      const RepElement y(e.ambient, modes);
      EXPECT_EQ(inner_product(y, induce(e, x, 6)), inner_product(restrict_rep(e, y), x)) << name;
    }
  }
}

TEST(Rep, RestrictionIsARingHomomorphism) {
  std::mt19937 rng(157);
  for (const auto& name : finite_embedding_names()) {
    const SubgroupEmbedding e = builtin_embedding(name);
    for (int t = 0; t < 10; ++t) {
      const RepElement x = random_rep(e.ambient, rng, -2, 2);
      const RepElement y = random_rep(e.ambient, rng, -2, 2);
      EXPECT_EQ(restrict_rep(e, multiply(x, y)), multiply(restrict_rep(e, x), restrict_rep(e, y))) << name;
      EXPECT_EQ(restrict_rep(e, x + y), restrict_rep(e, x) + restrict_rep(e, y));
    }
  }
}

TEST(Rep, TensorProductsInS3) {
  const GroupPtr s3 = builtin_group("s3");
  const RepElement std2 = RepElement::irreducible(s3, 2);
  EXPECT_EQ(multiply(std2, std2), rep(s3, {1, 1, 1}));
  EXPECT_EQ(multiply(RepElement::irreducible(s3, 1), std2), std2);
}

TEST(Rep, FrobeniusReports) {
  for (const char* name : {"z2_in_z4", "z3_in_s3", "trivial_in_z5", "z2_in_s3", "z4_in_z12"}) {
    const FrobeniusReport r = check_frobenius(builtin_embedding(name));
    EXPECT_TRUE(r.all_pass) << name;
    const SubgroupEmbedding e = builtin_embedding(name);
    EXPECT_EQ(r.pairs.size(), e.ambient->irrep_count() * e.subgroup->irrep_count());
  }
  EXPECT_TRUE(check_frobenius(builtin_embedding("z3_in_circle")).all_pass);
}

TEST(Rep, CircleInductionNeedsABound) {
  const SubgroupEmbedding e = builtin_embedding("z3_in_circle");
  const RepElement x = RepElement::irreducible(e.subgroup, 1);
  expect_code(ErrorCode::InfiniteSupport, [&] { induce(e, x); });
  // Characters z^n with n = 1 mod 3.
  EXPECT_EQ(induce(e, x, 5), RepElement(e.ambient, std::map<long, long>{{-5, 1}, {-2, 1}, {1, 1}, {4, 1}}));
  EXPECT_TRUE(induce(e, RepElement(e.subgroup)).is_zero());
}

TEST(Rep, GroupMismatch) {
  const SubgroupEmbedding e = builtin_embedding("z2_in_z4");
  expect_code(ErrorCode::GroupMismatch, [&] { restrict_rep(e, RepElement::irreducible(e.subgroup, 0)); });
  expect_code(ErrorCode::GroupMismatch,
              [&] { inner_product(RepElement::irreducible(e.subgroup, 0), RepElement::irreducible(e.ambient, 0)); });
}

TEST(Homogeneous, DerivativeOperator) {
  const HomogeneousIndexResult r =
      circle_homogeneous_index(LaurentMatrix::scalar(parse_laurent("i xi", "xi")), 0);
  EXPECT_TRUE(r.total.is_zero());
  ASSERT_EQ(r.nonzero.size(), 1u);
  EXPECT_EQ(r.nonzero[0].mode, 0);
  EXPECT_EQ(r.nonzero[0].kernel, 1);
  EXPECT_EQ(r.nonzero[0].cokernel, 1);
}

TEST(Homogeneous, IntegerRoots) {
  const HomogeneousIndexResult r =
      circle_homogeneous_index(LaurentMatrix::scalar(parse_laurent("(xi - 2)(xi + 5)", "xi")), 0);
  EXPECT_TRUE(r.total.is_zero());
  ASSERT_EQ(r.nonzero.size(), 2u);
  EXPECT_EQ(r.nonzero[0].mode, -5);
  EXPECT_EQ(r.nonzero[1].mode, 2);
  EXPECT_GE(r.scanned_bound, 5);
}

TEST(Homogeneous, ConstantInvertibleMatrix) {
  const LaurentMatrix m({{parse_laurent("2"), parse_laurent("1")}, {parse_laurent("1"), parse_laurent("1")}});
  const HomogeneousIndexResult r = circle_homogeneous_index(m, 4);
  EXPECT_TRUE(r.nonzero.empty());
  EXPECT_TRUE(r.total.is_zero());
}

TEST(Homogeneous, NonEllipticIsRejected) {
  // Top coefficient matrix [[1, 0], [0, 0]] is singular.
  const LaurentMatrix m({{parse_laurent("xi", "xi"), parse_laurent("0")}, {parse_laurent("0"), parse_laurent("1")}});
  expect_code(ErrorCode::NotElliptic, [&] { circle_homogeneous_index(m, 3); });
  expect_code(ErrorCode::InvalidArgument,
              [] { circle_homogeneous_index(LaurentMatrix::scalar(parse_laurent("xi^-1", "xi")), 3); });
}

TEST(Homogeneous, BottDifferenceOfInductions) {
  const SubgroupEmbedding e = builtin_embedding("z2_in_z4");
  const RepElement m = RepElement::irreducible(e.subgroup, 0);
  const RepElement n = RepElement::irreducible(e.subgroup, 1);
  EXPECT_EQ(bott_homogeneous_index(e, m, n), rep(e.ambient, {1, -1, 1, -1}));
  EXPECT_TRUE(bott_homogeneous_index(e, m, m).is_zero());
  const SubgroupEmbedding t = builtin_embedding("trivial_in_z3");
  EXPECT_EQ(bott_homogeneous_index(t, RepElement::irreducible(t.subgroup, 0), RepElement(t.subgroup)),
            rep(t.ambient, {1, 1, 1}));
}

TEST(Homogeneous, RandomSymbolsMatchBruteForceRanks) {
  std::mt19937 rng(163);
  for (int t = 0; t < 40; ++t) {
    const LaurentMatrix p = testing::random_elliptic_symbol(rng, t % 2 == 1);
    const HomogeneousIndexResult r = circle_homogeneous_index(p, 3);
    EXPECT_TRUE(r.total.is_zero());
    std::map<long, long> reported;
    for (const auto& d : r.nonzero) {
      EXPECT_EQ(d.kernel, d.cokernel);
      reported[d.mode] = d.kernel;
    }
    // Scan well past every root, independently of the reported bound.
    for (long m = -40; m <= 40; ++m) {
      const long want = testing::brute_kernel_dim(p, m);
      const auto it = reported.find(m);
      EXPECT_EQ(it == reported.end() ? 0 : it->second, want) << "mode " << m;
    }
  }
}

}  // namespace
}  // namespace kindex
