#include "hlineq/opnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hlineq/errors.hpp"

namespace hlineq {

std::string_view to_string(NormStatus s) {
  switch (s) {
    case NormStatus::ExactEnumeration: return "exact_enumeration";
    case NormStatus::ExactClosedForm: return "exact_closed_form";
    case NormStatus::HeuristicLowerBound: return "heuristic_lower_bound";
    case NormStatus::GridBracket: return "grid_bracket";
  }
  return "unknown";
}

namespace {

void check_exponents(const MultilinearForm& form, std::span<const Exponent> p) {
  if (static_cast<int>(p.size()) != form.order()) {
    throw ArgumentError("exponent vector has " + std::to_string(p.size()) + " entries, form order is " +
                        std::to_string(form.order()));
  }
}

Vector basis_vector(int n, int j) {
  Vector e(static_cast<std::size_t>(n), 0.0);
  e[static_cast<std::size_t>(j)] = 1.0;
  return e;
}

}  // namespace

AscentRun ascend_from(const MultilinearForm& form, std::span<const Exponent> p, std::vector<Vector> start,
                      const AscentOptions& options, Rng& rng) {
  check_exponents(form, p);
  const int m = form.order();
  const int n = form.dim();
  if (static_cast<int>(start.size()) != m) throw ArgumentError("ascent start must have one vector per slot");

  AscentRun run;
  run.point = start;
  const double initial = std::abs(evaluate(form, run.point));
  run.objective.push_back(initial);

  double current = initial;
  for (int sweep = 0; sweep < options.max_iter; ++sweep) {
    const double before = current;
    for (int k = 0; k < m; ++k) {
      const Vector c = partial_coefficients_all(form, k, run.point);
      auto& xk = run.point[static_cast<std::size_t>(k)];
      double value = 0.0;
      if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) {
        xk = random_unit_vector(n, p[static_cast<std::size_t>(k)], rng);
      } else {
        DualMaximizer dm = dual_maximizer(c, p[static_cast<std::size_t>(k)]);
        xk = std::move(dm.y);
        value = dm.value;
      }
      if (value < current - 1e-12 * std::max(1.0, current)) {
        throw InvariantError("alternating ascent objective decreased from " + std::to_string(current) + " to " +
                             std::to_string(value));
      }
      current = value;
    }
    run.objective.push_back(current);
    ++run.sweeps;
    if (current - before <= options.tol * current) break;
  }

  const double final_value = std::abs(evaluate(form, run.point));
  run.value = final_value;
  if (initial > final_value) {
    // Only reachable through rounding; keep the better witness.
    run.value = initial;
    run.point = std::move(start);
  }
  return run;
}

NormEstimate alternating_ascent(const MultilinearForm& form, std::span<const Exponent> p,
                                const AscentOptions& options) {
  check_exponents(form, p);
  if (form.is_zero()) throw DegenerateInputError("operator norm estimate of the zero form: nothing to maximize");
  if (options.starts < 0 || options.max_iter < 1 || !(options.tol >= 0.0)) {
    throw ArgumentError("ascent options require starts >= 0, max_iter >= 1, tol >= 0");
  }
  const int m = form.order();
  const int n = form.dim();

  std::vector<std::vector<Vector>> starts;
  const double top = form.max_abs();
  for (std::size_t off = 0; off < form.size(); ++off) {
    if (std::abs(form.coeffs()[off]) != top) continue;
    const std::vector<int> idx = form.multi_index(off);
    std::vector<Vector> tuple;
    tuple.reserve(static_cast<std::size_t>(m));
    for (int j : idx) tuple.push_back(basis_vector(n, j));
    starts.push_back(std::move(tuple));
  }
  const std::size_t basis_count = starts.size();

  NormEstimate best;
  best.status = NormStatus::HeuristicLowerBound;
  best.hi = kInfinity;
  const std::size_t total = basis_count + static_cast<std::size_t>(options.starts);
  for (std::size_t i = 0; i < total; ++i) {
    Rng rng(derive_seed(options.seed, i));
    std::vector<Vector> start;
    if (i < basis_count) {
      start = std::move(starts[i]);
    } else {
      for (int k = 0; k < m; ++k) start.push_back(random_unit_vector(n, p[static_cast<std::size_t>(k)], rng));
    }
    AscentRun run = ascend_from(form, p, std::move(start), options, rng);
    best.iterations += run.sweeps;
    if (i == 0 || run.value > best.value) {
      best.value = run.value;
      best.argmax = std::move(run.point);
    }
  }
  best.starts_used = static_cast<int>(total);
  best.lo = best.value;
  return best;
}

NormEstimate opnorm_linear(const MultilinearForm& form, Exponent p) {
  if (form.order() != 1) throw ArgumentError("closed-form norm applies to linear functionals (m = 1) only");
  NormEstimate out;
  out.status = NormStatus::ExactClosedForm;
  out.starts_used = 0;
  if (form.is_zero()) {
    out.argmax = {Vector(static_cast<std::size_t>(form.dim()), 0.0)};
    out.argmax[0][0] = 1.0;
    return out;
  }
  DualMaximizer dm = dual_maximizer(form.coeffs(), p);
  out.value = out.lo = out.hi = dm.value;
  out.argmax = {std::move(dm.y)};
  return out;
}

NormEstimate opnorm_infinity_exact(const MultilinearForm& form, std::uint64_t budget) {
  const int m = form.order();
  const int n = form.dim();
  const long long bits = static_cast<long long>(n) * m;
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw CapacityError("exact sign enumeration needs 2^(n*m) = 2^" + std::to_string(bits) +
                        " sign patterns, above the budget of " + std::to_string(budget));
  }

  NormEstimate out;
  out.status = NormStatus::ExactEnumeration;
  std::vector<Vector> args(static_cast<std::size_t>(m), Vector(static_cast<std::size_t>(n), 1.0));

  // Signs on slots 0..m-2; the first sign of slot 0 stays +1 since T is odd in each slot.
  const int free_bits = m >= 2 ? n * (m - 1) - 1 : 0;
  const std::uint64_t patterns = std::uint64_t{1} << free_bits;
  bool first = true;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    for (int b = 0; b < n * (m - 1); ++b) {
      const int slot = b / n;
      const int j = b % n;
      const bool negative = b == 0 ? false : ((mask >> (b - 1)) & 1U) != 0;
      args[static_cast<std::size_t>(slot)][static_cast<std::size_t>(j)] = negative ? -1.0 : 1.0;
    }
    const Vector c = partial_coefficients_all(form, m - 1, args);
    double value = 0.0;
    for (double x : c) value += std::abs(x);
    if (first || value > out.value) {
      first = false;
      out.value = value;
      out.argmax = args;
      for (std::size_t j = 0; j < c.size(); ++j) out.argmax.back()[j] = c[j] < 0.0 ? -1.0 : 1.0;
    }
  }
  out.lo = out.hi = out.value;
  out.starts_used = static_cast<int>(std::min<std::uint64_t>(patterns, 1U << 30));
  out.iterations = static_cast<long long>(patterns);
  return out;
}

namespace {

// Point on the unit sphere of l_p^2 at angle theta.
Vector sphere_point(double theta, double p) {
  Vector w{std::cos(theta), std::sin(theta)};
  const double norm = pnorm(w, p);
  w[0] /= norm;
  w[1] /= norm;
  return w;
}

// Sup-norm Lipschitz constant of theta -> (cos, sin)/||(cos, sin)||_p.
// With N(theta) = ||(cos, sin)||_p one has |N'| <= |cos| + |sin| <= sqrt(2),
// so each component moves at rate at most 1/N + sqrt(2)/N^2, and
// N >= 1 for p <= 2, N >= 2^(1/p - 1/2) for p >= 2.
double sphere_lipschitz(double p) {
  const double nmin = p <= 2.0 ? 1.0 : std::pow(2.0, 1.0 / p - 0.5);
  return 1.0 / nmin + std::numbers::sqrt2 / (nmin * nmin);
}

}  // namespace

NormEstimate opnorm_grid_bracket(const MultilinearForm& form, std::span<const Exponent> p, int resolution) {
  check_exponents(form, p);
  const int m = form.order();
  if (form.dim() != 2 || m > 3) {
    throw CapacityError("grid bracket requires n = 2 and m <= 3 (got n = " + std::to_string(form.dim()) +
                        ", m = " + std::to_string(m) + ")");
  }
  for (const Exponent& e : p) {
    if (e.is_infinite()) throw CapacityError("grid bracket requires finite exponents; use exact enumeration for p = inf");
  }
  if (resolution < 1) throw ArgumentError("grid resolution must be >= 1");
  const long long cells = m == 3 ? static_cast<long long>(resolution) * resolution : resolution;
  if (cells > (1LL << 28)) {
    throw CapacityError("grid bracket needs " + std::to_string(cells) + " samples, above the budget of 2^28");
  }

  const double pi = std::numbers::pi;
  const int gridded = m - 1;
  std::vector<std::vector<Vector>> samples(static_cast<std::size_t>(gridded));
  for (int k = 0; k < gridded; ++k) {
    auto& pts = samples[static_cast<std::size_t>(k)];
    pts.reserve(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
      pts.push_back(sphere_point(pi * i / resolution, p[static_cast<std::size_t>(k)].value()));
    }
  }

  NormEstimate out;
  out.status = NormStatus::GridBracket;
  const Exponent last = p.back();
  std::vector<Vector> args(static_cast<std::size_t>(m), Vector(2, 0.0));
  bool first = true;
  auto visit = [&]() {
    const Vector c = partial_coefficients_all(form, m - 1, args);
    if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) {
      if (first) {
        first = false;
        out.value = 0.0;
        out.argmax = args;
        out.argmax.back() = Vector{1.0, 0.0};
      }
      return;
    }
    DualMaximizer dm = dual_maximizer(c, last);
    if (first || dm.value > out.value) {
      first = false;
      out.value = dm.value;
      out.argmax = args;
      out.argmax.back() = std::move(dm.y);
    }
  };

  const int outer = gridded >= 1 ? resolution : 1;
  const int inner = gridded >= 2 ? resolution : 1;
  for (int a = 0; a < outer; ++a) {
    if (gridded >= 1) args[0] = samples[0][static_cast<std::size_t>(a)];
    for (int b = 0; b < inner; ++b) {
      if (gridded >= 2) args[1] = samples[1][static_cast<std::size_t>(b)];
      visit();
    }
  }

  double coeff_l1 = 0.0;
  for (double c : form.coeffs()) coeff_l1 += std::abs(c);
  const double delta = pi / (2.0 * resolution);  // distance to the nearest sample, mod pi
  double lipschitz = 0.0;
  for (int k = 0; k < gridded; ++k) lipschitz += sphere_lipschitz(p[static_cast<std::size_t>(k)].value());

  out.lo = out.value;
  out.hi = out.lo + coeff_l1 * lipschitz * delta;
  out.hi += 1e-12 * out.hi;  // rounding slack on the certified side
  out.starts_used = static_cast<int>(cells);
  out.iterations = cells;
  return out;
}

}  // namespace hlineq
