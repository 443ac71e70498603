#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hlineq/form.hpp"
#include "hlineq/lp.hpp"

namespace hlineq {

enum class NormStatus {
  ExactEnumeration,     ///< p = inf everywhere, all sign vertices enumerated
  ExactClosedForm,      ///< m = 1: ||c||_{p*}
  HeuristicLowerBound,  ///< multistart alternating ascent
  GridBracket,          ///< n = 2: certified [lo, hi]
};

std::string_view to_string(NormStatus s);

/// ||T|| = sup |T(x1..xm)| over the product of unit balls of l_{p_k}^n.
struct NormEstimate {
  double value = 0.0;  ///< attained value; for GridBracket this is lo
  NormStatus status = NormStatus::HeuristicLowerBound;
  double lo = 0.0;
  double hi = 0.0;  ///< equals value for exact statuses, +inf for heuristic
  int starts_used = 0;
  long long iterations = 0;
  std::vector<Vector> argmax;

  bool is_exact() const noexcept {
    return status == NormStatus::ExactEnumeration || status == NormStatus::ExactClosedForm;
  }
  /// True when hi is a proven upper bound on ||T||.
  bool has_upper_bound() const noexcept { return is_exact() || status == NormStatus::GridBracket; }
};

struct AscentOptions {
  int starts = 32;  ///< random starts, in addition to the basis starts
  double tol = 1e-10;
  int max_iter = 500;
  std::uint64_t seed = 0;
};

/// Outcome of one ascent start.
struct AscentRun {
  double value = 0.0;  ///< max of |T| at the initial point and the final point
  std::vector<Vector> point;
  int sweeps = 0;
  std::vector<double> objective;  ///< per sweep, starting with |T(initial)|
};

/// Runs alternating exact maximization from `start` (m unit vectors). Each
/// slot update replaces x^(k) by the l_{p_k} dual maximizer of its partial
/// coefficients. Throws InvariantError if the sweep objective decreases by
/// more than 1e-12 relative.
AscentRun ascend_from(const MultilinearForm& form, std::span<const Exponent> p, std::vector<Vector> start,
                      const AscentOptions& options, Rng& rng);

/// Multistart alternating ascent. Starts are every basis tuple (e_{j1}, ..., e_{jm})
/// whose coefficient has maximal modulus, then options.starts random unit tuples;
/// start i draws from derive_seed(options.seed, i). The result is a lower bound on ||T||.
/// Throws DegenerateInputError for the zero form.
NormEstimate alternating_ascent(const MultilinearForm& form, std::span<const Exponent> p,
                                const AscentOptions& options = {});

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// Exact norm for p = inf in every slot: max of |T| over sign vectors. The
/// last slot is maximized in closed form, so 2^(n(m-1))/2 tuples are visited,
/// but the capacity check is on 2^(nm). Throws CapacityError above budget.
NormEstimate opnorm_infinity_exact(const MultilinearForm& form,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Certified bracket for n = 2, m <= 3, finite p. Each sphere of l_{p_k}^2
/// is sampled at `resolution` angles on [0, pi) (antipodes give the same |T|);
/// the last slot is maximized exactly. hi adds a Lipschitz term computed from
/// sum |coeffs| and the angular spacing.
NormEstimate opnorm_grid_bracket(const MultilinearForm& form, std::span<const Exponent> p, int resolution);

/// ||c||_{p*} for a linear functional (m = 1).
NormEstimate opnorm_linear(const MultilinearForm& form, Exponent p);

}  // namespace hlineq
