#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hlineq/errors.hpp"
#include "hlineq/opnorm.hpp"
#include "oracles.hpp"

namespace hlineq {
namespace {

ExponentVector iso(int m, double p) { return ExponentVector(static_cast<std::size_t>(m), Exponent(p)); }

const MultilinearForm kE11(2, 2, {1, 0, 0, 0});
const MultilinearForm kDiag(2, 2, {1, 0, 0, 1});
const MultilinearForm kHadamard(2, 2, {1, 1, 1, -1});
const MultilinearForm kOnes(2, 2, {1, 1, 1, 1});

TEST(AscentTest, RankOneUnitCoefficient) {
  const NormEstimate e = alternating_ascent(kE11, iso(2, 4.0));
  EXPECT_NEAR(e.value, 1.0, 1e-12);
  EXPECT_EQ(e.status, NormStatus::HeuristicLowerBound);
  EXPECT_FALSE(e.has_upper_bound());
}

TEST(AscentTest, DiagonalMatchesClosedFormAndGrid) {
  const double closed = oracle::diagonal_norm(2, 4.0);
  EXPECT_NEAR(closed, std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(oracle::grid_norm_2x2(kDiag, 4.0, 4.0, 720), closed, 1e-4);
  EXPECT_NEAR(alternating_ascent(kDiag, iso(2, 4.0)).value, closed, 1e-6);
}

TEST(AscentTest, DiagonalLargerDimensions) {
  for (int n : {3, 4, 5}) {
    std::vector<double> c(static_cast<std::size_t>(n * n), 0.0);
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j * n + j)] = 1.0;
    const MultilinearForm d(2, n, c);
    for (double p : {2.5, 4.0, 6.0}) {
      EXPECT_NEAR(alternating_ascent(d, iso(2, p)).value, oracle::diagonal_norm(n, p), 1e-6) << n << " " << p;
    }
  }
}

TEST(AscentTest, RankOneClosedForm) {
  const Vector u{0.3, -1.2, 0.7};
  const Vector v{2.0, 0.5, -0.25};
  std::vector<double> c;
  for (double a : u) {
    for (double b : v) c.push_back(a * b);
  }
  const MultilinearForm t(2, 3, c);
  for (auto [p1, p2] : {std::pair{3.0, 1.5}, std::pair{2.0, 5.0}, std::pair{4.0, 4.0}}) {
    const ExponentVector p{Exponent(p1), Exponent(p2)};
    const double expected = pnorm(u, conjugate_value(p1)) * pnorm(v, conjugate_value(p2));
    EXPECT_NEAR(alternating_ascent(t, p).value, expected, 1e-9);
  }
}

TEST(AscentTest, ZeroFormThrows) {
  EXPECT_THROW(alternating_ascent(MultilinearForm::zeros(2, 3), iso(2, 3.0)), DegenerateInputError);
}

TEST(AscentTest, ExponentCountMismatchThrows) {
  EXPECT_THROW(alternating_ascent(kDiag, iso(3, 3.0)), ArgumentError);
}

TEST(AscentTest, ZeroPartialRestartsSlot) {
  Rng rng(1);
  const std::vector<Vector> start{{0, 1}, {0, 1}};  // T(., e2) = 0 for T = e1 (x) e1
  const AscentRun run = ascend_from(kE11, iso(2, 3.0), start, AscentOptions{}, rng);
  EXPECT_NEAR(run.value, 1.0, 1e-12);
}

TEST(AscentTest, StartsIncludeBasisTuples) {
  const MultilinearForm t = random_form(3, 3, Distribution::RademacherSigns, 4);
  AscentOptions opts;
  opts.starts = 5;
  EXPECT_EQ(alternating_ascent(t, iso(3, 4.0), opts).starts_used, 27 + 5);
}

TEST(AscentProperty, MonotoneSweeps) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 2 + static_cast<int>(seed % 3);
    const MultilinearForm t = random_form(m, 3, Distribution::Gaussian, seed);
    Rng rng(seed);
    const ExponentVector p = iso(m, 1.5 + static_cast<double>(seed % 5));
    std::vector<Vector> start;
    for (int k = 0; k < m; ++k) start.push_back(random_unit_vector(3, p[k], rng));
    const AscentRun run = ascend_from(t, p, start, AscentOptions{}, rng);
    for (std::size_t i = 1; i < run.objective.size(); ++i) {
      EXPECT_GE(run.objective[i], run.objective[i - 1] - 1e-12 * std::max(1.0, run.objective[i - 1]));
    }
  }
}

TEST(AscentProperty, BasisDomination) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int m = 2 + static_cast<int>(seed % 2);
    const int n = 2 + static_cast<int>(seed % 3);
    const MultilinearForm t = random_form(m, n, Distribution::Gaussian, 500 + seed);
    AscentOptions opts;
    opts.starts = 0;
    opts.seed = seed;
    EXPECT_GE(alternating_ascent(t, iso(m, 2.0 + static_cast<double>(seed % 4)), opts).value, t.max_abs());
  }
}

TEST(AscentProperty, ScalingEquivariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MultilinearForm t = random_form(3, 3, Distribution::Gaussian, 900 + seed);
    const ExponentVector p{Exponent(3.0), Exponent(4.5), Exponent(2.5)};
    AscentOptions opts;
    opts.seed = seed;
    const double base = alternating_ascent(t, p, opts).value;
    for (double alpha : {-3.0, 0.125, 7.25}) {
      EXPECT_NEAR(alternating_ascent(t.scaled(alpha), p, opts).value, std::abs(alpha) * base,
                  1e-12 * std::abs(alpha) * base);
    }
  }
}

TEST(AscentProperty, PermutationInvariance) {
  const std::vector<int> perm{2, 0, 1};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MultilinearForm t = random_form(3, 3, Distribution::Gaussian, 1300 + seed);
    const ExponentVector p{Exponent(3.0), Exponent(4.5), Exponent(2.5)};
    const ExponentVector pp{p[2], p[0], p[1]};
    AscentOptions opts;
    opts.seed = seed;
    EXPECT_NEAR(alternating_ascent(t.permuted(perm), pp, opts).value, alternating_ascent(t, p, opts).value, 1e-9);
  }
}

TEST(ExactInfinityTest, Examples) {
  EXPECT_EQ(opnorm_infinity_exact(kHadamard).value, 2.0);
  EXPECT_EQ(oracle::brute_sign_norm(kHadamard), 2.0);
  EXPECT_EQ(opnorm_infinity_exact(kOnes).value, 4.0);
  EXPECT_EQ(opnorm_infinity_exact(kE11).value, 1.0);
  EXPECT_EQ(opnorm_infinity_exact(kE11).status, NormStatus::ExactEnumeration);
}

TEST(ExactInfinityTest, MatchesFullEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int m = 1 + static_cast<int>(seed % 3);
    const int n = 2 + static_cast<int>(seed % 3);
    const MultilinearForm t = random_form(m, n, Distribution::Gaussian, 40 + seed);
    const NormEstimate e = opnorm_infinity_exact(t);
    EXPECT_NEAR(e.value, oracle::brute_sign_norm(t), 1e-12 * e.value);
    EXPECT_NEAR(std::abs(evaluate(t, e.argmax)), e.value, 1e-12 * e.value);
  }
}

TEST(ExactInfinityTest, BudgetExceeded) {
  const MultilinearForm t = random_form(5, 5, Distribution::Gaussian, 1);
  try {
    opnorm_infinity_exact(t);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("2^25"), std::string::npos);
  }
  EXPECT_THROW(opnorm_infinity_exact(kHadamard, 8), CapacityError);
}

TEST(GridBracketTest, DiagonalBracketIsTight) {
  const NormEstimate e = opnorm_grid_bracket(kDiag, iso(2, 4.0), 4096);
  EXPECT_EQ(e.status, NormStatus::GridBracket);
  EXPECT_LE(e.lo, std::numbers::sqrt2);
  EXPECT_GE(e.hi, std::numbers::sqrt2);
  EXPECT_LT(e.hi - e.lo, 1e-2);
}

TEST(GridBracketTest, RankOneContainsOne) {
  const NormEstimate e = opnorm_grid_bracket(kE11, iso(2, 2.0), 512);
  EXPECT_LE(e.lo, 1.0 + 1e-15);
  EXPECT_GE(e.hi, 1.0);
}

TEST(GridBracketTest, Trilinear) {
  const MultilinearForm t = random_form(3, 2, Distribution::Gaussian, 8);
  const ExponentVector p{Exponent(3.0), Exponent(4.0), Exponent(5.0)};
  const NormEstimate e = opnorm_grid_bracket(t, p, 512);
  const double a = alternating_ascent(t, p).value;
  EXPECT_LE(a, e.hi + 1e-9);
  EXPECT_GE(a, e.lo - 1e-9);
}

TEST(GridBracketTest, CapacityErrors) {
  EXPECT_THROW(opnorm_grid_bracket(random_form(2, 3, Distribution::Gaussian, 1), iso(2, 3.0), 64), CapacityError);
  EXPECT_THROW(opnorm_grid_bracket(random_form(4, 2, Distribution::Gaussian, 1), iso(4, 5.0), 64), CapacityError);
  EXPECT_THROW(opnorm_grid_bracket(kDiag, ExponentVector{Exponent::infinity(), Exponent(3.0)}, 64), CapacityError);
}

TEST(GridBracketProperty, ContainsAscentValue) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MultilinearForm t = random_form(2, 2, Distribution::Gaussian, 7000 + seed);
    const ExponentVector p = iso(2, seed % 2 ? 2.5 : 4.0);
    const NormEstimate bracket = opnorm_grid_bracket(t, p, 4096);
    const double a = alternating_ascent(t, p).value;
    EXPECT_LE(a, bracket.hi + 1e-9);
    EXPECT_GE(a, bracket.lo - 1e-9);
  }
}

TEST(LinearTest, ClosedForm) {
  const MultilinearForm t(1, 3, {3, -4, 0});
  const NormEstimate e = opnorm_linear(t, Exponent(2.0));
  EXPECT_EQ(e.status, NormStatus::ExactClosedForm);
  EXPECT_NEAR(e.value, 5.0, 1e-14);
}

}  // namespace
}  // namespace hlineq
