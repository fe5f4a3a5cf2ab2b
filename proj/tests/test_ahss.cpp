#include <gtest/gtest.h>

#include <random>

#include "kindex/ahss/cw_complex.hpp"
#include "kindex/ahss/spectral.hpp"
#include "kindex/error.hpp"
#include "kindex/exactalg/int_matrix.hpp"
#include "support/oracles.hpp"

namespace kindex {
namespace {

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<CWComplex> corpus() {
  std::vector<CWComplex> xs{builtin_cw("point")};
  for (long n = 1; n <= 6; ++n) xs.push_back(builtin_cw("sphere", n));
  for (long n = 1; n <= 4; ++n) xs.push_back(builtin_cw("cp", n));
  for (long n = 1; n <= 7; ++n) xs.push_back(builtin_cw("rp", n));
  return xs;
}

FinAbGroup sum_of(const std::vector<std::pair<int, FinAbGroup>>& graded) {
  FinAbGroup acc;
  for (const auto& [p, g] : graded) acc = direct_sum(acc, g);
  return acc;
}

TEST(Cw, CohomologyExamples) {
  const CWComplex rp3 = builtin_cw("rp", 3);
  EXPECT_EQ(integral_cohomology(rp3, 2).to_string(), "Z/2");
  EXPECT_EQ(integral_cohomology(rp3, 3).to_string(), "Z");
  EXPECT_EQ(integral_cohomology(rp3, 1).to_string(), "0");
  EXPECT_EQ(integral_cohomology(builtin_cw("sphere", 4), 4).to_string(), "Z");
  EXPECT_EQ(integral_cohomology(builtin_cw("sphere", 4), 2).to_string(), "0");
}

TEST(Cw, ProjectiveSpaceCohomologyPattern) {
  for (long n = 1; n <= 8; ++n) {
    const CWComplex x = builtin_cw("rp", n);
    EXPECT_EQ(integral_cohomology(x, 0), FinAbGroup::free(1));
    for (long p = 1; p <= n; ++p) {
      FinAbGroup want;
      if (p == n && n % 2 == 1) {
        want = FinAbGroup::free(1);
      } else if (p % 2 == 0) {
        want = FinAbGroup::cyclic(2);
      }
      EXPECT_EQ(integral_cohomology(x, static_cast<int>(p)), want) << "n=" << n << " p=" << p;
    }
  }
}

TEST(Cw, EulerCharacteristicMatchesCohomologyRanks) {
  for (const CWComplex& x : corpus()) {
    long alt = 0;
    for (int p = 0; p <= x.dim(); ++p) {
      const auto r = static_cast<long>(integral_cohomology(x, p).free_rank());
      alt += p % 2 == 0 ? r : -r;
    }
    EXPECT_EQ(alt, euler_characteristic(x)) << x.name;
  }
}

TEST(Cw, CohomologyInvariantUnderUnimodularChangeOfBasis) {
  std::mt19937 rng(137);
  std::uniform_int_distribution<long> d(-2, 2);
  auto random_unimodular = [&](std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    for (int s = 0; s < 6 && n > 1; ++s) {
      const std::size_t a = rng() % n;
      const std::size_t b = (a + 1 + rng() % (n - 1)) % n;
      u.add_row_multiple(a, b, d(rng));
    }
    return u;
  };
  auto inverse_of = [](const IntMatrix& u) {
    return solve_full_column_rank(u, IntMatrix::identity(u.rows()));
  };
  for (int t = 0; t < 20; ++t) {
    // Z^2 -d_in-> Z^3 -d_out-> Z^2 with d_out d_in = 0.
    const IntMatrix d_out{{1, 2, 0}, {0, 2, 4}};
    const IntMatrix ker = integer_kernel(d_out);
    const IntMatrix d_in = ker * IntMatrix{{2, 0}};
    const FinAbGroup base = cochain_cohomology(d_in, d_out);
    const IntMatrix a = random_unimodular(2);
    const IntMatrix b = random_unimodular(3);
    const IntMatrix c = random_unimodular(2);
    // Change bases on every chain group: d_in -> b d_in a^-1, d_out -> c d_out b^-1.
    const IntMatrix b_inv = inverse_of(b);
    EXPECT_EQ(cochain_cohomology(b * d_in * inverse_of(a), c * d_out * b_inv), base);
  }
}

TEST(Cw, Validation) {
  expect_code(ErrorCode::CompositionNonzero,
              [] { make_cw("bad", {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}}); });
  expect_code(ErrorCode::InvalidArgument, [] { make_cw("bad", {1, 2}, {IntMatrix{{1}}}); });
  expect_code(ErrorCode::UnknownComplex, [] { builtin_cw("klein_bottle"); });
}

TEST(Ahss, E2Pages) {
  const SpectralTable cp2 = ahss_e2(builtin_cw("cp", 2));
  for (int p = 0; p <= 4; ++p) {
    EXPECT_EQ(cp2.at(p, 0), p % 2 == 0 ? FinAbGroup::free(1) : FinAbGroup()) << p;
    EXPECT_TRUE(cp2.at(p, 1).is_trivial());
  }
  EXPECT_EQ(ahss_e2(builtin_cw("point")).at(0, 0), FinAbGroup::free(1));
  const SpectralTable rp5 = ahss_e2(builtin_cw("rp", 5));
  EXPECT_EQ(rp5.at(0, 0).to_string(), "Z");
  EXPECT_EQ(rp5.at(2, 0).to_string(), "Z/2");
  EXPECT_EQ(rp5.at(4, 0).to_string(), "Z/2");
  EXPECT_EQ(rp5.at(5, 0).to_string(), "Z");
}

TEST(Ahss, ProjectiveAndSphereGroups) {
  for (long n = 1; n <= 4; ++n) {
    const KGroupsReport r = ahss_run(builtin_cw("cp", n)).report;
    EXPECT_EQ(sum_of(r.k0_graded), FinAbGroup::free(static_cast<std::size_t>(n + 1)));
    EXPECT_TRUE(sum_of(r.k1_graded).is_trivial());
    EXPECT_FALSE(r.extension_ambiguous);
  }
  for (long n = 1; n <= 6; ++n) {
    const KGroupsReport r = ahss_run(builtin_cw("sphere", n)).report;
    EXPECT_EQ(sum_of(r.k0_graded), FinAbGroup::free(n % 2 == 0 ? 2 : 1));
    EXPECT_EQ(sum_of(r.k1_graded), FinAbGroup::free(n % 2 == 0 ? 0 : 1));
    EXPECT_FALSE(r.extension_ambiguous);
  }
}

TEST(Ahss, RealProjectiveSpaces) {
  for (long n = 1; n <= 8; ++n) {
    const KGroupsReport r = ahss_run(builtin_cw("rp", n)).report;
    const std::vector<Integer> twos(static_cast<std::size_t>(n / 2), Integer(2));
    EXPECT_EQ(sum_of(r.k0_graded), FinAbGroup::from_cyclic_orders(1, twos)) << n;
    EXPECT_EQ(sum_of(r.k1_graded), FinAbGroup::free(n % 2 == 1 ? 1 : 0)) << n;
    EXPECT_EQ(r.extension_ambiguous, n >= 4) << n;
    ASSERT_TRUE(r.known_answer.has_value());
    Integer order = 1;
    for (long i = 0; i < n / 2; ++i) order *= 2;
    EXPECT_EQ(r.known_answer->k0, FinAbGroup::from_cyclic_orders(1, {order})) << n;
  }
}

TEST(Ahss, EvenCellShortcutAgrees) {
  for (const CWComplex& x : corpus()) {
    bool even = true;
    for (std::size_t p = 1; p < x.cells.size(); p += 2) even = even && x.cells[p] == 0;
    if (!even) {
      expect_code(ErrorCode::OddCellsPresent, [&] { k_groups_even_cell(x); });
      continue;
    }
    EXPECT_EQ(ahss_run(x).report, k_groups_even_cell(x)) << x.name;
  }
}

TEST(Ahss, CollapseIsIdempotentAndPreservesEntries) {
  for (const CWComplex& x : corpus()) {
    const AhssResult a = ahss_run(x);
    EXPECT_EQ(a.e_infinity.entries, ahss_run(x).e_infinity.entries) << x.name;
    EXPECT_EQ(a.report, ahss_run(x).report);
    EXPECT_EQ(a.e_infinity.entries, ahss_e2(x).entries) << x.name;
  }
}

TEST(Ahss, HigherDifferentialKillsClasses) {
  // Cells in dimensions 0 and 3 with a d_3 of multiplier 2.
  const CWComplex x = make_cw("two_cells", {1, 0, 0, 1}, {IntMatrix(0, 1), IntMatrix(0, 0), IntMatrix(1, 0)});
  const AhssResult r = ahss_run(x, {{3, 0, IntMatrix{{2}}}});
  EXPECT_EQ(sum_of(r.report.k0_graded), FinAbGroup());
  EXPECT_EQ(sum_of(r.report.k1_graded).to_string(), "Z/2");
}

TEST(Ahss, InvalidDifferentials) {
  const CWComplex s3 = builtin_cw("sphere", 3);
  expect_code(ErrorCode::InvalidDifferential, [&] { ahss_run(s3, {{2, 0, IntMatrix{{1}}}}); });
  expect_code(ErrorCode::InvalidDifferential, [&] { ahss_run(s3, {{3, 0, IntMatrix{{1, 1}}}}); });
}

TEST(Ahss, ExtensionAmbiguityRule) {
  EXPECT_FALSE(extension_ambiguous({{0, FinAbGroup::free(1)}, {2, FinAbGroup::cyclic(2)}}));
  EXPECT_TRUE(extension_ambiguous({{0, FinAbGroup::free(1)}, {2, FinAbGroup::cyclic(2)}, {4, FinAbGroup::cyclic(2)}}));
  EXPECT_FALSE(extension_ambiguous({{0, FinAbGroup::free(1)}, {2, FinAbGroup::cyclic(3)}, {4, FinAbGroup::cyclic(2)}}));
}

}  // namespace
}  // namespace kindex
