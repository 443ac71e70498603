#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hlineq/errors.hpp"
#include "hlineq/mixed.hpp"
#include "hlineq/search.hpp"

namespace hlineq {

namespace {

// Rescales to unit rms; false for the zero vector.
bool normalize_rms(std::vector<double>& c) {
  double sum = 0.0;
  for (double x : c) sum += x * x;
  if (sum == 0.0) return false;
  const double inv = 1.0 / std::sqrt(sum / static_cast<double>(c.size()));
  for (double& x : c) x *= inv;
  return true;
}

}  // namespace

HillClimbResult hill_climb(int m, int n, const FormObjective& objective, const HillClimbOptions& options) {
  if (options.budget < 1) throw ArgumentError("search budget must be >= 1");
  if (!(options.decay > 0.0 && options.decay < 1.0) || options.patience < 1 || !(options.initial_step > 0.0)) {
    throw ArgumentError("hill-climb options need 0 < decay < 1, patience >= 1, initial_step > 0");
  }

  HillClimbResult out;
  out.best_value = -std::numeric_limits<double>::infinity();
  auto record = [&](const MultilinearForm& form, double value) {
    if (!out.best || value > out.best_value) {
      out.best = form;
      out.best_value = value;
      out.trace.emplace_back(out.evaluations, value);
    }
  };

  while (out.evaluations < options.budget) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(out.restarts)));
    ++out.restarts;
    MultilinearForm current = random_form(m, n, options.init, rng());
    {
      std::vector<double> c(current.coeffs().begin(), current.coeffs().end());
      if (!normalize_rms(c)) continue;
      current = current.with_coeffs(std::move(c));
    }
    double value = objective(current);
    ++out.evaluations;
    record(current, value);

    std::normal_distribution<double> noise(0.0, 1.0);
    double step = options.initial_step;  // coefficients have unit rms
    int rejections = 0;
    while (out.evaluations < options.budget && step >= options.min_step) {
      std::vector<double> c(current.coeffs().begin(), current.coeffs().end());
      for (double& x : c) x += step * noise(rng);
      double candidate_value = -std::numeric_limits<double>::infinity();
      std::optional<MultilinearForm> candidate;
      if (normalize_rms(c)) {
        candidate = current.with_coeffs(std::move(c));
        candidate_value = objective(*candidate);
      }
      ++out.evaluations;
      if (candidate && candidate_value > value) {
        current = std::move(*candidate);
        value = candidate_value;
        rejections = 0;
        record(current, value);
      } else if (++rejections >= options.patience) {
        step *= options.decay;
        rejections = 0;
      }
    }
  }
  return out;
}

SearchReport search_lower_bound(int n, const Regime& regime, const SearchOptions& options) {
  require_applicable(regime);
  if (n < 1) throw ArgumentError("search dimension n must be >= 1");
  const int m = regime.order();

  RatioOptions ratio_options = options.ratio;
  ratio_options.ascent.seed = derive_seed(options.climb.seed, kStreamNorm);

  const FormObjective objective = [&](const MultilinearForm& form) {
    if (form.is_zero()) return -std::numeric_limits<double>::infinity();
    return ratio(form, regime, ratio_options).ratio;
  };
  HillClimbResult climb = hill_climb(m, n, objective, options.climb);
  if (!climb.best) throw DegenerateInputError("search produced no evaluable form");

  SearchReport out;
  out.best = ratio(*climb.best, regime, ratio_options);
  out.trace = std::move(climb.trace);
  out.restarts = climb.restarts;
  out.evaluations = climb.evaluations;
  out.seed = options.climb.seed;
  out.best_form = climb.best;

  if (out.best.certified_lower) {
    out.certified = true;
    out.certified_ratio = out.best.certified_lower;
  } else if (options.certify && n == 2 && m <= 3 &&
             std::none_of(regime.p.begin(), regime.p.end(), [](const Exponent& e) { return e.is_infinite(); })) {
    const NormEstimate bracket = opnorm_grid_bracket(*climb.best, regime.p, options.certify_resolution);
    out.certified = true;
    out.certified_ratio = out.best.mixed_value / bracket.hi;
  }
  return out;
}

namespace {

double ladder_rhs_mixed(const MultilinearForm& form, double s, double lambda0) {
  double best = 0.0;
  for (int i = 0; i < form.order(); ++i) best = std::max(best, partial_mixed_sum(form, {i, s, lambda0}));
  return best;
}

}  // namespace

LadderCheckReport ladder_empirical_check(std::span<const Exponent> p, std::span<const Exponent> q, double lambda0,
                                         double s, const LadderCheckOptions& options) {
  LadderCheckReport out;
  out.ladder = ladder_exponents(p, q, lambda0);
  out.s = s;
  if (!out.ladder.admissible) {
    throw RegimeError("ladder not admissible: sum_k (1/p_k - 1/q_k) < 1/lambda0 violated (sum = " +
                      format_exponent(out.ladder.gap) + ", 1/lambda0 = " + format_exponent(1.0 / lambda0) + ")");
  }
  const bool all_slots = options.variant == LadderVariant::AllSlots;
  out.lhs_outer = all_slots ? out.ladder.eta1 : out.ladder.eta2;
  if (std::isnan(s) || s < 1.0) throw ArgumentError("s must be >= 1, got " + format_exponent(s));
  if (s < out.lhs_outer - kExponentTolerance) {
    throw RegimeError(all_slots ? "s >= eta1 = [1/lambda0 - sum_{j=1..m} (1/p_j - 1/q_j)]^(-1) violated: s = " +
                                      format_exponent(s) + ", eta1 = " + format_exponent(out.lhs_outer)
                                : "s >= eta2 = [1/lambda0 - sum_{j=1..m-1} (1/p_j - 1/q_j)]^(-1) violated: s = " +
                                      format_exponent(s) + ", eta2 = " + format_exponent(out.lhs_outer));
  }
  if (options.samples < 1 || options.n < 1) throw ArgumentError("ladder check needs n >= 1 and samples >= 1");
  const int m = static_cast<int>(p.size());

  // Right-hand constant on the q side.
  RatioOptions q_options = options.ratio;
  q_options.ascent.seed = derive_seed(options.seed, kStreamNorm);
  const FormObjective rhs = [&](const MultilinearForm& form) {
    if (form.is_zero()) return -std::numeric_limits<double>::infinity();
    return ladder_rhs_mixed(form, s, lambda0) / estimate_norm(form, q, q_options).value;
  };
  HillClimbOptions climb;
  climb.budget = options.constant_search_budget;
  climb.seed = derive_seed(options.seed, kStreamSearch);
  const HillClimbResult constant = hill_climb(m, options.n, rhs, climb);
  out.estimated_rhs_constant = constant.best_value;
  out.rhs_certified = constant.best && estimate_norm(*constant.best, q, q_options).is_exact();

  // Left-hand ratios on the p side.
  const std::uint64_t sample_seed = derive_seed(options.seed, kStreamSamples);
  out.max_lhs_ratio = -1.0;
  for (int i = 0; i < options.samples; ++i) {
    const MultilinearForm form = random_form(m, options.n, Distribution::Gaussian, derive_seed(sample_seed, i));
    if (form.is_zero()) continue;
    RatioOptions p_options = options.ratio;
    p_options.ascent.seed = derive_seed(q_options.ascent.seed, static_cast<std::uint64_t>(i) + 1);
    double lhs = 0.0;
    if (all_slots) {
      for (int slot = 0; slot < m; ++slot) lhs = std::max(lhs, partial_mixed_sum(form, {slot, s, out.lhs_outer}));
    } else {
      lhs = partial_mixed_sum(form, {m - 1, s, out.lhs_outer});
    }
    const double value = lhs / estimate_norm(form, p, p_options).value;
    if (value > out.max_lhs_ratio) {
      out.max_lhs_ratio = value;
      out.worst_digest = form_digest(form);
    }
  }
  out.pass = out.max_lhs_ratio <= out.estimated_rhs_constant * (1.0 + options.tolerance);
  return out;
}

}  // namespace hlineq
