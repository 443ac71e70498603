#include <string>

#include "hlineq/errors.hpp"
#include "hlineq/search.hpp"

namespace hlineq {

NormEstimate estimate_norm(const MultilinearForm& form, std::span<const Exponent> p, const RatioOptions& options) {
  const int m = form.order();
  const int n = form.dim();
  if (static_cast<int>(p.size()) != m) {
    throw ArgumentError("exponent vector has " + std::to_string(p.size()) + " entries, form order is " +
                        std::to_string(m));
  }
  if (m == 1) return opnorm_linear(form, p[0]);

  bool all_infinite = true;
  bool all_finite = true;
  for (const Exponent& e : p) {
    all_infinite = all_infinite && e.is_infinite();
    all_finite = all_finite && !e.is_infinite();
  }
  const long long bits = static_cast<long long>(n) * m;
  if (all_infinite && bits < 63 && (std::uint64_t{1} << bits) <= options.enumeration_budget) {
    return opnorm_infinity_exact(form, options.enumeration_budget);
  }
  if (options.use_bracket && n == 2 && m <= 3 && all_finite) {
    return opnorm_grid_bracket(form, p, options.bracket_resolution);
  }
  return alternating_ascent(form, p, options.ascent);
}

RatioReport ratio(const MultilinearForm& form, const Regime& regime, const RatioOptions& options) {
  require_applicable(regime);
  if (form.order() != regime.order()) {
    throw ArgumentError("regime has " + std::to_string(regime.order()) + " exponents, form order is " +
                        std::to_string(form.order()));
  }
  if (form.is_zero()) throw DegenerateInputError("ratio of the zero form is undefined (||T|| = 0)");

  RatioReport r;
  r.regime = regime;
  r.n = form.dim();
  r.mixed_value = regime_mixed_value(form, regime);
  r.norm = estimate_norm(form, regime.p, options);
  r.ratio = r.mixed_value / r.norm.value;
  if (r.norm.has_upper_bound()) r.certified_lower = r.mixed_value / r.norm.hi;
  r.bound = regime_constant(regime);
  r.margin = r.bound - r.ratio;
  r.form_digest = form_digest(form);
  r.seed = options.ascent.seed;
  return r;
}

}  // namespace hlineq
