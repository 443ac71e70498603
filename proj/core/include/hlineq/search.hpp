#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlineq/form.hpp"
#include "hlineq/ladder.hpp"
#include "hlineq/lp.hpp"
#include "hlineq/opnorm.hpp"
#include "hlineq/regime.hpp"

namespace hlineq {

struct RatioOptions {
  AscentOptions ascent;
  /// Use the n = 2 grid bracket as the denominator when it applies.
  bool use_bracket = false;
  int bracket_resolution = 4096;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

/// mixed_value / ||T|| for one form and regime.
///
/// `ratio` divides by norm.value. That value is exact, the bracket lo, or a
/// heuristic lower bound, so `ratio` is never below the true ratio: it is the
/// conservative quantity for checking upper bounds. `certified_lower` divides
/// by a proven upper bound on ||T|| (exact value or bracket hi) and is only
/// present when one is available.
struct RatioReport {
  Regime regime;
  int n = 0;
  double mixed_value = 0.0;
  NormEstimate norm;
  double ratio = 0.0;
  std::optional<double> certified_lower;
  double bound = 0.0;
  double margin = 0.0;  ///< bound - ratio
  std::string form_digest;
  std::uint64_t seed = 0;  ///< ascent seed
};

/// Norm used as the denominator: exact enumeration when every p_k is inf and
/// 2^(nm) fits the budget, closed form for m = 1, the grid bracket when
/// requested and n = 2, m <= 3 with finite p, alternating ascent otherwise.
NormEstimate estimate_norm(const MultilinearForm& form, std::span<const Exponent> p, const RatioOptions& options);

/// Throws RegimeError when the regime does not apply and DegenerateInputError for the zero form.
RatioReport ratio(const MultilinearForm& form, const Regime& regime, const RatioOptions& options = {});

struct HillClimbOptions {
  long long budget = 10000;  ///< objective evaluations
  std::uint64_t seed = 0;
  double initial_step = 0.5;  ///< times rms(coeffs)
  double decay = 0.9;
  int patience = 20;  ///< consecutive rejections before decaying the step
  double min_step = 1e-6;  ///< restart below this step
  Distribution init = Distribution::Gaussian;
};

/// Derivative-free multistart hill climbing over coefficient tensors.
/// Each restart draws a random form from derive_seed(seed, restart), then
/// perturbs every coordinate by N(0, step^2), accepts strict improvements and
/// rescales the coefficients to unit rms (objectives must be scale invariant).
struct HillClimbResult {
  std::optional<MultilinearForm> best;
  double best_value = 0.0;
  std::vector<std::pair<long long, double>> trace;  ///< (evaluation index, new best), nondecreasing
  int restarts = 0;
  long long evaluations = 0;
};

/// Returns -inf from the objective to reject a candidate (e.g. a zero form).
using FormObjective = std::function<double(const MultilinearForm&)>;

HillClimbResult hill_climb(int m, int n, const FormObjective& objective, const HillClimbOptions& options);

struct SearchOptions {
  HillClimbOptions climb;
  RatioOptions ratio;
  /// Re-evaluate the best form against a certified denominator when possible.
  bool certify = true;
  int certify_resolution = 4096;
};

struct SearchReport {
  RatioReport best;
  std::vector<std::pair<long long, double>> trace;
  int restarts = 0;
  long long evaluations = 0;
  std::uint64_t seed = 0;
  /// True when certified_ratio is a proven lower bound on the optimal constant.
  bool certified = false;
  std::optional<double> certified_ratio;
  std::optional<MultilinearForm> best_form;
};

/// Empirical lower bound on the optimal constant of `regime` at dimension n.
SearchReport search_lower_bound(int n, const Regime& regime, const SearchOptions& options);

struct SweepCell {
  int n = 2;
  Regime regime;
};

struct SweepOptions {
  int samples = 200;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::Gaussian;
  long long search_budget = 10000;  ///< 0 disables the per-cell search
  SearchOptions search;             ///< budget and seed are overridden per cell
  RatioOptions ratio;
  double margin_tolerance = 1e-9;
  int threads = 1;
};

struct CellResult {
  SweepCell cell;
  RatioReport worst;  ///< instance with the largest ratio
  double max_ratio = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
  int samples = 0;
  std::optional<SearchReport> search;
};

/// Per cell: the largest conservative ratio over `samples` random forms and
/// one search run. PASS iff margin >= -margin_tolerance. Cell i uses master
/// seed derive_seed(seed, i); results do not depend on the thread count.
/// Errors are rethrown with the cell identified.
std::vector<CellResult> sweep_verify(const std::vector<SweepCell>& cells, const SweepOptions& options);

/// Which transfer inequality of the exponent ladder to check.
enum class LadderVariant {
  AllSlots,  ///< (s, eta1) for every excluded slot
  LastSlot,  ///< (s, eta2) for the last slot only
};

struct LadderCheckOptions {
  int n = 2;
  int samples = 100;
  std::uint64_t seed = 0;
  LadderVariant variant = LadderVariant::AllSlots;
  long long constant_search_budget = 2000;
  double tolerance = 1e-6;
  RatioOptions ratio;
};

struct LadderCheckReport {
  LadderResult ladder;
  double s = 0.0;
  double lhs_outer = 0.0;  ///< eta1 or eta2
  double estimated_rhs_constant = 0.0;
  bool rhs_certified = false;  ///< rhs constant computed against exact norms
  double max_lhs_ratio = 0.0;
  std::string worst_digest;
  bool pass = false;
};

/// Estimates the q-side constant max_i partial_mixed(i, s, lambda0) / ||T||_q
/// by hill climbing, then checks that sampled p-side forms satisfy
/// lhs_mixed / ||T||_p <= constant * (1 + tolerance).
/// Throws RegimeError when the ladder is not admissible or s is below eta1 (eta2).
LadderCheckReport ladder_empirical_check(std::span<const Exponent> p, std::span<const Exponent> q, double lambda0,
                                         double s, const LadderCheckOptions& options);

}  // namespace hlineq
