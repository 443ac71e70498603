#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hlineq/errors.hpp"
#include "hlineq/json_io.hpp"
#include "hlineq/search.hpp"

namespace hlineq {
namespace {

ExponentVector iso(int m, double p) { return ExponentVector(static_cast<std::size_t>(m), Exponent(p)); }
ExponentVector inf(int m) { return ExponentVector(static_cast<std::size_t>(m), Exponent::infinity()); }

const MultilinearForm kHadamard(2, 2, {1, 1, 1, -1});

TEST(RatioTest, DiagonalNewIsotropic) {
  const RatioReport r = ratio(MultilinearForm(2, 2, {1, 0, 0, 1}), {RegimeKind::NewIsotropic, iso(2, 4.0)});
  EXPECT_NEAR(r.mixed_value, std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(r.norm.value, std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(r.ratio, 1.0, 1e-9);
  EXPECT_NEAR(r.bound, std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(r.margin, r.bound - r.ratio, 0.0);
}

TEST(RatioTest, SingleCoefficientIsOne) {
  const MultilinearForm e11(2, 2, {1, 0, 0, 0});
  for (RegimeKind k : {RegimeKind::NewIsotropic, RegimeKind::DimantSevillaPeris, RegimeKind::PracianoPereira}) {
    EXPECT_NEAR(ratio(e11, {k, iso(2, 4.0)}).ratio, 1.0, 1e-12) << to_string(k);
  }
}

TEST(RatioTest, LittlewoodWitness) {
  const RatioReport r = ratio(kHadamard, {RegimeKind::BohnenblustHille, inf(2)});
  EXPECT_EQ(r.norm.status, NormStatus::ExactEnumeration);
  EXPECT_EQ(r.norm.value, 2.0);
  EXPECT_NEAR(r.mixed_value, std::pow(4.0, 0.75), 1e-14);
  EXPECT_NEAR(r.ratio, std::numbers::sqrt2, 1e-12);
  ASSERT_TRUE(r.certified_lower.has_value());
  EXPECT_EQ(*r.certified_lower, r.ratio);
}

TEST(RatioTest, BracketDenominatorGivesCertifiedLower) {
  RatioOptions opts;
  opts.use_bracket = true;
  const RatioReport r = ratio(random_form(2, 2, Distribution::Gaussian, 3), {RegimeKind::NewIsotropic, iso(2, 4.0)}, opts);
  EXPECT_EQ(r.norm.status, NormStatus::GridBracket);
  ASSERT_TRUE(r.certified_lower.has_value());
  EXPECT_LE(*r.certified_lower, r.ratio);
}

TEST(RatioTest, Errors) {
  EXPECT_THROW(ratio(kHadamard, {RegimeKind::NewIsotropic, iso(2, 2.0)}), RegimeError);
  EXPECT_THROW(ratio(MultilinearForm::zeros(2, 2), {RegimeKind::NewIsotropic, iso(2, 4.0)}), DegenerateInputError);
}

TEST(RatioProperty, ScaleInvariance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MultilinearForm t = random_form(3, 3, Distribution::Gaussian, 2000 + seed);
    const Regime reg{RegimeKind::Anisotropic2mMinus2, iso(3, 4.0)};
    RatioOptions opts;
    opts.ascent.seed = seed;
    const double base = ratio(t, reg, opts).ratio;
    for (double alpha : {-1.5, 0.01, 40.0}) EXPECT_NEAR(ratio(t.scaled(alpha), reg, opts).ratio, base, 1e-9);
  }
}

TEST(SearchTest, BudgetOneIsSingleDraw) {
  SearchOptions opts;
  opts.climb.budget = 1;
  opts.climb.seed = 9;
  const Regime reg{RegimeKind::NewIsotropic, iso(2, 4.0)};
  const SearchReport s = search_lower_bound(2, reg, opts);
  EXPECT_EQ(s.evaluations, 1);
  ASSERT_EQ(s.trace.size(), 1U);

  Rng rng(derive_seed(9, 0));
  const MultilinearForm draw = random_form(2, 2, Distribution::Gaussian, rng());
  RatioOptions r;
  r.ascent.seed = derive_seed(9, kStreamNorm);
  EXPECT_NEAR(s.best.ratio, ratio(draw, reg, r).ratio, 1e-12);
}

TEST(SearchTest, LittlewoodExtremalIsReached) {
  SearchOptions opts;
  opts.climb.budget = 10000;
  opts.climb.seed = 1;
  const SearchReport s = search_lower_bound(2, {RegimeKind::BohnenblustHille, inf(2)}, opts);
  EXPECT_GE(s.best.ratio, std::numbers::sqrt2 - 1e-3);
  EXPECT_LE(s.best.ratio, std::numbers::sqrt2 + 1e-12);
  EXPECT_TRUE(s.certified);
}

TEST(SearchTest, NewIsotropicWithinBound) {
  SearchOptions opts;
  opts.climb.budget = 2000;
  opts.climb.seed = 2;
  const SearchReport s = search_lower_bound(2, {RegimeKind::NewIsotropic, iso(2, 4.0)}, opts);
  EXPECT_GE(s.best.ratio, 1.0 - 1e-9);
  EXPECT_LE(s.best.ratio, std::numbers::sqrt2 + 1e-9);
  EXPECT_TRUE(s.certified);
  ASSERT_TRUE(s.certified_ratio.has_value());
  EXPECT_LE(*s.certified_ratio, s.best.ratio + 1e-12);
}

TEST(SearchProperty, TraceMonotoneAndEndsAtBest) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    SearchOptions opts;
    opts.climb.budget = 500;
    opts.climb.seed = seed;
    const SearchReport s = search_lower_bound(3, {RegimeKind::NewIsotropic, iso(2, 3.0)}, opts);
    ASSERT_FALSE(s.trace.empty());
    for (std::size_t i = 1; i < s.trace.size(); ++i) {
      EXPECT_GT(s.trace[i].first, s.trace[i - 1].first);
      EXPECT_GE(s.trace[i].second, s.trace[i - 1].second);
    }
    EXPECT_EQ(s.trace.back().second, s.best.ratio);
  }
}

TEST(SearchProperty, Reproducible) {
  SearchOptions opts;
  opts.climb.budget = 300;
  opts.climb.seed = 77;
  opts.certify_resolution = 256;
  const Regime reg{RegimeKind::Anisotropic2mMinus2, iso(3, 4.0)};
  EXPECT_EQ(to_json(search_lower_bound(2, reg, opts)).dump(), to_json(search_lower_bound(2, reg, opts)).dump());
}

TEST(HillClimbTest, RejectsBadOptions) {
  HillClimbOptions o;
  o.budget = 0;
  EXPECT_THROW(hill_climb(2, 2, [](const MultilinearForm&) { return 0.0; }, o), ArgumentError);
}

TEST(HillClimbTest, RestartsWhenStepVanishes) {
  HillClimbOptions o;
  o.budget = 2000;
  o.initial_step = 1e-5;
  o.patience = 1;
  o.decay = 0.5;
  const HillClimbResult r = hill_climb(2, 2, [](const MultilinearForm&) { return 1.0; }, o);
  EXPECT_GT(r.restarts, 1);
  EXPECT_EQ(r.evaluations, 2000);
}

SweepOptions small_sweep(int samples, long long budget) {
  SweepOptions o;
  o.samples = samples;
  o.search_budget = budget;
  o.seed = 5;
  return o;
}

TEST(SweepTest, NewIsotropicCellPasses) {
  const auto res = sweep_verify({{3, {RegimeKind::NewIsotropic, iso(2, 4.0)}}}, small_sweep(200, 500));
  ASSERT_EQ(res.size(), 1U);
  EXPECT_TRUE(res[0].pass);
  EXPECT_LE(res[0].max_ratio, std::numbers::sqrt2 + 1e-9);
  EXPECT_EQ(res[0].samples, 200);
  ASSERT_TRUE(res[0].search.has_value());
}

TEST(SweepTest, AnisotropicCellPasses) {
  const auto res = sweep_verify({{2, {RegimeKind::Anisotropic2mMinus2, iso(3, 4.0)}}}, small_sweep(100, 200));
  EXPECT_TRUE(res[0].pass);
  EXPECT_NEAR(res[0].bound, 2.0, 1e-12);
}

TEST(SweepTest, DegenerateRatioAtMostOne) {
  const auto res = sweep_verify({{3, {RegimeKind::Degenerate, iso(3, 3.0)}}}, small_sweep(100, 200));
  EXPECT_TRUE(res[0].pass);
  EXPECT_LE(res[0].max_ratio, 1.0 + 1e-12);
}

TEST(SweepTest, ThreadCountDoesNotChangeResults) {
  const std::vector<SweepCell> cells{{2, {RegimeKind::NewIsotropic, iso(2, 3.0)}},
                                     {3, {RegimeKind::NewIsotropic, iso(2, 2.5)}},
                                     {2, {RegimeKind::Degenerate, iso(2, 2.0)}}};
  SweepOptions one = small_sweep(20, 100);
  SweepOptions many = one;
  many.threads = 3;
  const auto a = sweep_verify(cells, one);
  const auto b = sweep_verify(cells, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
}

TEST(SweepTest, ErrorsIdentifyCell) {
  const std::vector<SweepCell> cells{{2, {RegimeKind::NewIsotropic, iso(2, 4.0)}},
                                     {2, {RegimeKind::NewIsotropic, iso(2, 2.0)}}};
  try {
    sweep_verify(cells, small_sweep(2, 0));
    FAIL() << "expected RegimeError";
  } catch (const RegimeError& e) {
    EXPECT_NE(std::string(e.what()).find("sweep cell 1"), std::string::npos) << e.what();
  }
}

TEST(LadderCheckTest, ReferenceConfigurationPasses) {
  LadderCheckOptions o;
  o.samples = 100;
  o.constant_search_budget = 1000;
  const LadderCheckReport r = ladder_empirical_check(iso(2, 4.0), inf(2), 4.0 / 3.0, 4.0, o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs_outer, 4.0);
  EXPECT_TRUE(r.rhs_certified);
  EXPECT_GT(r.estimated_rhs_constant, 0.0);
}

TEST(LadderCheckTest, LastSlotVariant) {
  LadderCheckOptions o;
  o.samples = 30;
  o.constant_search_budget = 300;
  o.variant = LadderVariant::LastSlot;
  const LadderCheckReport r = ladder_empirical_check(iso(2, 4.0), inf(2), 4.0 / 3.0, 2.0, o);
  EXPECT_EQ(r.lhs_outer, 2.0);
  EXPECT_TRUE(r.pass);
}

TEST(LadderCheckTest, Errors) {
  LadderCheckOptions o;
  EXPECT_THROW(ladder_empirical_check(iso(2, 4.0), iso(2, 4.0), 4.0 / 3.0, 4.0, o), ArgumentError);
  EXPECT_THROW(ladder_empirical_check(iso(2, 2.0), inf(2), 4.0 / 3.0, 4.0, o), RegimeError);
  try {
    ladder_empirical_check(iso(2, 4.0), inf(2), 4.0 / 3.0, 3.0, o);
    FAIL() << "expected RegimeError";
  } catch (const RegimeError& e) {
    EXPECT_NE(std::string(e.what()).find("s >= eta1"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace hlineq
