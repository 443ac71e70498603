#include "hlineq/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hlineq/errors.hpp"
#include "hlineq/lp.hpp"

namespace hlineq {

namespace {

void check_exponent(double e, const char* name) {
  if (std::isnan(e) || e < 1.0) {
    throw ArgumentError(std::string(name) + " exponent must be >= 1 (or inf), got " + format_exponent(e));
  }
}

}  // namespace

double isotropic_mixed_sum(const MultilinearForm& form, double rho) {
  check_exponent(rho, "mixed-sum");
  return pnorm(form.coeffs(), rho);
}

double partial_mixed_sum(const MultilinearForm& form, const MixedNormSpec& spec) {
  const int m = form.order();
  const int n = form.dim();
  if (spec.excluded_slot < 0 || spec.excluded_slot >= m) {
    throw ArgumentError("excluded slot " + std::to_string(spec.excluded_slot + 1) + " out of range 1.." +
                        std::to_string(m));
  }
  check_exponent(spec.inner, "inner");
  check_exponent(spec.outer, "outer");

  const double scale = form.max_abs();
  if (scale == 0.0) return 0.0;

  // Offsets of slot i split as (left, j_i, right) with right of size n^(m-1-i).
  std::size_t right = 1;
  for (int k = spec.excluded_slot + 1; k < m; ++k) right *= static_cast<std::size_t>(n);
  const std::size_t left = form.size() / (right * static_cast<std::size_t>(n));
  const auto coeffs = form.coeffs();
  const bool inner_inf = spec.inner == kInfinity;
  const bool outer_inf = spec.outer == kInfinity;

  // Per j_i: sum |a/scale|^s (finite s) or max |a/scale| (s = inf).
  std::vector<double> inner(static_cast<std::size_t>(n), 0.0);
  for (std::size_t l = 0; l < left; ++l) {
    for (int j = 0; j < n; ++j) {
      const double* row = coeffs.data() + (l * n + j) * right;
      double& acc = inner[static_cast<std::size_t>(j)];
      for (std::size_t r = 0; r < right; ++r) {
        const double a = std::abs(row[r]) / scale;
        acc = inner_inf ? std::max(acc, a) : acc + std::pow(a, spec.inner);
      }
    }
  }

  double total = 0.0;
  for (double acc : inner) {
    if (outer_inf) {
      total = std::max(total, inner_inf ? acc : std::pow(acc, 1.0 / spec.inner));
    } else if (inner_inf) {
      total += std::pow(acc, spec.outer);
    } else {
      // (sum |a|^s)^(alpha/s) in one power so s = alpha collapses exactly.
      total += spec.outer == spec.inner ? acc : std::pow(acc, spec.outer / spec.inner);
    }
  }
  return scale * (outer_inf ? total : std::pow(total, 1.0 / spec.outer));
}

}  // namespace hlineq
