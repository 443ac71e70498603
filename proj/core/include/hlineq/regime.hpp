#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hlineq/form.hpp"
#include "hlineq/lp.hpp"
#include "hlineq/mixed.hpp"

namespace hlineq {

/// Families of Hardy–Littlewood-type inequalities
///
///   mixed_norm(coefficients of T) <= constant * ||T||
///
/// on l_{p_1}^n x ... x l_{p_m}^n, real scalars.
enum class RegimeKind {
  BohnenblustHille,         ///< all p_k = inf; rho = 2m/(m+1); constant (sqrt 2)^(m-1)
  PracianoPereira,          ///< isotropic p >= 2m; rho = 2mp/(mp+p-2m); constant (sqrt 2)^(m-1)
  DimantSevillaPeris,       ///< 1/2 <= sum 1/p_k < 1; rho = 1/(1 - sum); constant (sqrt 2)^(m-1)
  NewIsotropic,             ///< same hypotheses and rho; constant 2^((m-1)(1 - sum))
  Anisotropic2mMinus2,      ///< isotropic m < p <= 2m-2; (p/(p-m+1), p/(p-m)) for every slot
  AnisotropicBilinearHead,  ///< m >= 3, 1/2 <= 1/p_1+1/p_2 < 1, sum < 1; slot m singled out
  Degenerate,               ///< isotropic p = m; rho = inf; constant 1
};

std::string_view to_string(RegimeKind kind);
/// Accepts the kebab-case CLI names ("new-isotropic", ...) and the enum spellings.
RegimeKind parse_regime_kind(std::string_view name);
const std::vector<RegimeKind>& all_regime_kinds();

struct Regime {
  RegimeKind kind = RegimeKind::NewIsotropic;
  ExponentVector p;  ///< one exponent per slot; m = p.size()

  int order() const noexcept { return static_cast<int>(p.size()); }
};

/// Exponents of the left-hand side. Isotropic regimes use `rho` over all
/// coefficients. Anisotropic regimes use (inner, outer) with the maximum over
/// `excluded_slots` (0-based) of the partial mixed sums.
struct RegimeExponents {
  bool isotropic = true;
  double rho = 1.0;
  double inner = 1.0;
  double outer = 1.0;
  std::vector<int> excluded_slots;
};

/// Empty when every hypothesis holds; otherwise the first violated inequality,
/// written out with the offending values.
std::string hypothesis_violation(const Regime& regime);
bool is_applicable(const Regime& regime);
/// Throws RegimeError naming the violated inequality.
void require_applicable(const Regime& regime);

/// Throws RegimeError when the hypotheses fail. Computed exponents at or above
/// kInfinityThreshold are reported as inf.
RegimeExponents regime_exponents(const Regime& regime);
/// The constant of the regime's inequality. Throws RegimeError when inapplicable.
double regime_constant(const Regime& regime);

/// Every regime whose hypotheses hold for (m, p). Boundaries follow the
/// printed inequalities: sum 1/p_k in [1/2, 1), m < p strict, p <= 2m-2 closed.
std::vector<RegimeKind> applicable_regimes(std::span<const Exponent> p);

/// Left-hand side of the regime's inequality for `form`.
double regime_mixed_value(const MultilinearForm& form, const Regime& regime);

/// Human-readable statement, e.g. "p >= 2m" or "1/2 <= sum 1/p_k < 1".
std::string_view hypothesis_text(RegimeKind kind);

}  // namespace hlineq
