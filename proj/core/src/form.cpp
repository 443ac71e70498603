#include "hlineq/form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hlineq/errors.hpp"
#include "hlineq/rng.hpp"

namespace hlineq {

namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 31;

std::size_t checked_power(int base, int exponent) {
  std::size_t result = 1;
  for (int k = 0; k < exponent; ++k) {
    if (result > kMaxEntries / static_cast<std::size_t>(base)) {
      throw ArgumentError("form too large: " + std::to_string(base) + "^" + std::to_string(exponent) +
                          " coefficients");
    }
    result *= static_cast<std::size_t>(base);
  }
  return result;
}

// Row-major outer product of args[first..last).
Vector outer_product(std::span<const Vector> args, int first, int last, int n) {
  Vector w{1.0};
  for (int k = first; k < last; ++k) {
    Vector next(w.size() * static_cast<std::size_t>(n));
    const Vector& x = args[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (int j = 0; j < n; ++j) next[i * n + j] = w[i] * x[j];
    }
    w = std::move(next);
  }
  return w;
}

void check_vector(const Vector& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n) {
    throw ArgumentError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                        " where the form dimension is " + std::to_string(n));
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw ArgumentError(std::string(what) + ": non-finite vector entry");
  }
}

}  // namespace

MultilinearForm::MultilinearForm(int order, int dim, std::vector<double> coeffs)
    : order_(order), dim_(dim), coeffs_(std::move(coeffs)) {
  if (order < 1) throw ArgumentError("form order must be >= 1, got " + std::to_string(order));
  if (dim < 1) throw ArgumentError("form dimension must be >= 1, got " + std::to_string(dim));
  const std::size_t expected = checked_power(dim, order);
  if (coeffs_.size() != expected) {
    throw ArgumentError("coefficient count " + std::to_string(coeffs_.size()) + " does not equal n^m = " +
                        std::to_string(expected));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i])) {
      throw ArgumentError("coefficient at offset " + std::to_string(i) + " is not finite");
    }
  }
}

MultilinearForm MultilinearForm::zeros(int order, int dim) {
  if (order < 1 || dim < 1) throw ArgumentError("form order and dimension must be >= 1");
  return MultilinearForm(order, dim, std::vector<double>(checked_power(dim, order), 0.0));
}

std::size_t MultilinearForm::offset(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != order_) {
    throw ArgumentError("multi-index has " + std::to_string(index.size()) + " entries, form order is " +
                        std::to_string(order_));
  }
  std::size_t off = 0;
  for (int j : index) {
    if (j < 0 || j >= dim_) throw ArgumentError("multi-index entry " + std::to_string(j) + " out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }
  return off;
}

double MultilinearForm::at(std::span<const int> index) const { return coeffs_[offset(index)]; }

std::vector<int> MultilinearForm::multi_index(std::size_t off) const {
  std::vector<int> index(static_cast<std::size_t>(order_));
  for (int k = order_ - 1; k >= 0; --k) {
    index[static_cast<std::size_t>(k)] = static_cast<int>(off % static_cast<std::size_t>(dim_));
    off /= static_cast<std::size_t>(dim_);
  }
  return index;
}

double MultilinearForm::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool MultilinearForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

MultilinearForm MultilinearForm::scaled(double alpha) const {
  std::vector<double> c(coeffs_);
  for (double& x : c) x *= alpha;
  return MultilinearForm(order_, dim_, std::move(c));
}

MultilinearForm MultilinearForm::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw ArgumentError("permutation length must equal the form order");
  std::vector<int> seen(static_cast<std::size_t>(order_), 0);
  for (int p : perm) {
    if (p < 0 || p >= order_ || seen[static_cast<std::size_t>(p)]++) {
      throw ArgumentError("slot permutation is not a permutation of 0..m-1");
    }
  }
  std::vector<double> out(coeffs_.size());
  std::vector<int> src(static_cast<std::size_t>(order_));
  for (std::size_t off = 0; off < out.size(); ++off) {
    const std::vector<int> dst = multi_index(off);
    for (int k = 0; k < order_; ++k) src[static_cast<std::size_t>(perm[k])] = dst[static_cast<std::size_t>(k)];
    out[off] = coeffs_[offset(src)];
  }
  return MultilinearForm(order_, dim_, std::move(out));
}

MultilinearForm MultilinearForm::with_coeffs(std::vector<double> coeffs) const {
  return MultilinearForm(order_, dim_, std::move(coeffs));
}

Vector partial_coefficients_all(const MultilinearForm& form, int slot, std::span<const Vector> args) {
  const int m = form.order();
  const int n = form.dim();
  if (slot < 0 || slot >= m) {
    throw ArgumentError("slot " + std::to_string(slot + 1) + " out of range 1.." + std::to_string(m));
  }
  if (static_cast<int>(args.size()) != m) {
    throw ArgumentError("expected " + std::to_string(m) + " arguments, got " + std::to_string(args.size()));
  }
  for (int k = 0; k < m; ++k) {
    if (k != slot) check_vector(args[static_cast<std::size_t>(k)], n, "partial_coefficients");
  }

  const Vector left = outer_product(args, 0, slot, n);
  const Vector right = outer_product(args, slot + 1, m, n);
  const std::size_t rsize = right.size();
  const auto coeffs = form.coeffs();

  Vector c(static_cast<std::size_t>(n), 0.0);
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (left[l] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double* row = coeffs.data() + (l * n + j) * rsize;
      double acc = 0.0;
      for (std::size_t r = 0; r < rsize; ++r) acc += row[r] * right[r];
      c[j] += left[l] * acc;
    }
  }
  return c;
}

Vector partial_coefficients(const MultilinearForm& form, int slot, std::span<const Vector> fixed) {
  const int m = form.order();
  if (static_cast<int>(fixed.size()) != m - 1) {
    throw ArgumentError("expected " + std::to_string(m - 1) + " fixed vectors, got " + std::to_string(fixed.size()));
  }
  if (slot < 0 || slot >= m) {
    throw ArgumentError("slot " + std::to_string(slot + 1) + " out of range 1.." + std::to_string(m));
  }
  std::vector<Vector> args;
  args.reserve(static_cast<std::size_t>(m));
  for (int k = 0, f = 0; k < m; ++k) {
    if (k == slot) {
      args.emplace_back();
    } else {
      args.push_back(fixed[static_cast<std::size_t>(f++)]);
    }
  }
  return partial_coefficients_all(form, slot, args);
}

double evaluate(const MultilinearForm& form, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != form.order()) {
    throw ArgumentError("expected " + std::to_string(form.order()) + " arguments, got " +
                        std::to_string(args.size()));
  }
  check_vector(args[0], form.dim(), "evaluate");
  const Vector c = partial_coefficients_all(form, 0, args);
  double value = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) value += c[j] * args[0][j];
  return value;
}

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::Gaussian: return "gaussian";
    case Distribution::RademacherSigns: return "rademacher_signs";
    case Distribution::Uniform: return "uniform";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "gaussian") return Distribution::Gaussian;
  if (name == "rademacher_signs" || name == "rademacher" || name == "signs") return Distribution::RademacherSigns;
  if (name == "uniform") return Distribution::Uniform;
  throw ArgumentError("unknown distribution '" + std::string(name) + "' (expected gaussian, rademacher_signs, uniform)");
}

MultilinearForm random_form(int m, int n, Distribution distribution, std::uint64_t seed) {
  if (m < 1 || n < 1) throw ArgumentError("random_form requires m >= 1 and n >= 1");
  std::vector<double> c(checked_power(n, m));
  Rng rng(seed);
  switch (distribution) {
    case Distribution::Gaussian: {
      std::normal_distribution<double> dist(0.0, 1.0);
      for (double& x : c) x = dist(rng);
      break;
    }
    case Distribution::RademacherSigns: {
      std::bernoulli_distribution coin(0.5);
      for (double& x : c) x = coin(rng) ? 1.0 : -1.0;
      break;
    }
    case Distribution::Uniform: {
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      for (double& x : c) x = dist(rng);
      break;
    }
  }
  return MultilinearForm(m, n, std::move(c));
}

std::string form_digest(const MultilinearForm& form) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(form.order()));
  mix(static_cast<std::uint64_t>(form.dim()));
  for (double c : form.coeffs()) mix(std::bit_cast<std::uint64_t>(c));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hlineq
