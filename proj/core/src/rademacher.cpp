#include "hlineq/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hlineq/errors.hpp"
#include "hlineq/lp.hpp"

namespace hlineq {

namespace {

void check_budget(const MultilinearForm& a, std::uint64_t budget) {
  const long long bits = static_cast<long long>(a.dim()) * a.order();
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw CapacityError("Rademacher enumeration needs 2^(n*d) = 2^" + std::to_string(bits) +
                        " sign patterns, above the budget of " + std::to_string(budget));
  }
}

void apply_signs(Vector& v, std::uint64_t mask) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((mask >> j) & 1U) ? -1.0 : 1.0;
}

SignAverageReport make_report(const MultilinearForm& a, std::uint64_t budget) {
  SignAverageReport r;
  r.d = a.order();
  r.n = a.dim();
  r.l1_average = multiple_rademacher_l1(a, budget);
  r.max_abs = a.max_abs();
  r.l2_norm = pnorm(a.coeffs(), 2.0);
  r.khinchin_constant = std::ldexp(r.d % 2 == 1 ? std::numbers::sqrt2 : 1.0, r.d / 2);
  return r;
}

// Rounding allowance for the exact inequalities below.
double slack(double scale) { return 1e-12 * std::max(1.0, scale); }

}  // namespace

double multiple_rademacher_l1(const MultilinearForm& a, std::uint64_t budget) {
  check_budget(a, budget);
  const int d = a.order();
  const int n = a.dim();
  const std::uint64_t per_slot = std::uint64_t{1} << n;

  std::vector<Vector> args(static_cast<std::size_t>(d), Vector(static_cast<std::size_t>(n), 1.0));
  Vector eps(static_cast<std::size_t>(n));
  const std::uint64_t outer = std::uint64_t{1} << (n * (d - 1));

  // Outer loop fixes the signs of slots 1..d-1 (mask bits n*k .. n*k+n-1 for slot k),
  // the inner loop runs the last slot against the reduced coefficient vector.
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < outer; ++mask) {
    for (int k = 0; k + 1 < d; ++k) apply_signs(args[static_cast<std::size_t>(k)], (mask >> (n * k)) & (per_slot - 1));
    const Vector c = partial_coefficients_all(a, d - 1, args);
    double block = 0.0;
    for (std::uint64_t last = 0; last < per_slot; ++last) {
      apply_signs(eps, last);
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += c[static_cast<std::size_t>(j)] * eps[static_cast<std::size_t>(j)];
      block += std::abs(s);
    }
    total += block;
  }
  return std::ldexp(total, -(n * d));
}

SignAverageReport contraction_check(const MultilinearForm& a, std::uint64_t budget) {
  SignAverageReport r = make_report(a, budget);
  if (r.max_abs > r.l1_average + slack(r.l1_average)) {
    throw InvariantError("contraction bound max|a| <= R(a) failed: max|a| = " + std::to_string(r.max_abs) +
                         ", R(a) = " + std::to_string(r.l1_average));
  }
  return r;
}

SignAverageReport khinchin_multiple_check(const MultilinearForm& a, std::uint64_t budget) {
  SignAverageReport r = make_report(a, budget);
  const double rhs = r.khinchin_constant * r.l1_average;
  if (r.l2_norm > rhs + slack(rhs)) {
    throw InvariantError("multiple Khinchin bound ||a||_2 <= (sqrt 2)^d R(a) failed: ||a||_2 = " +
                         std::to_string(r.l2_norm) + ", (sqrt 2)^d R(a) = " + std::to_string(rhs));
  }
  return r;
}

}  // namespace hlineq
