#include "hlineq/lp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "hlineq/errors.hpp"

namespace hlineq {

Exponent::Exponent(double p) : value_(p) {
  if (std::isnan(p) || !(p > 1.0)) {
    throw ArgumentError("exponent must satisfy p > 1 (or be inf), got " + format_exponent(p));
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ArgumentError("cannot parse number '" + std::string(text) + "'");
  return value;
}

}  // namespace

Exponent parse_exponent(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "Infinity" || text == "INF") return Exponent::infinity();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_real(trim(text.substr(0, slash)));
    const double den = parse_real(trim(text.substr(slash + 1)));
    if (den == 0.0) throw ArgumentError("zero denominator in exponent '" + std::string(text) + "'");
    return Exponent(num / den);
  }
  return Exponent(parse_real(text));
}

ExponentVector parse_exponent_list(std::string_view text) {
  ExponentVector out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_exponent(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_exponent(double p) {
  if (p == kInfinity) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

bool exponents_equal(double a, double b) noexcept {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= kExponentTolerance;
}

double reciprocal_sum(std::span<const Exponent> p) noexcept {
  double s = 0.0;
  for (const Exponent& e : p) s += e.reciprocal();
  return s;
}

double pnorm(std::span<const double> v, double p) {
  if (std::isnan(p) || p < 1.0) throw ArgumentError("pnorm requires p >= 1, got " + format_exponent(p));
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || p == kInfinity) return scale;
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

Exponent conjugate(Exponent p) {
  if (p.is_infinite()) {
    throw DomainError("conjugate of p = inf is 1, which is not admissible as a ball exponent (need p > 1)");
  }
  return Exponent(p.value() / (p.value() - 1.0));
}

double conjugate_value(double p) {
  if (std::isnan(p) || p < 1.0) throw ArgumentError("conjugate requires p >= 1, got " + format_exponent(p));
  if (p == kInfinity) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

DualMaximizer dual_maximizer(std::span<const double> c, Exponent p) {
  double scale = 0.0;
  for (double x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) throw DegenerateInputError("dual maximizer of the zero functional is undefined");

  DualMaximizer out{Vector(c.size()), 0.0};
  if (p.acts_as_infinity()) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      out.y[j] = c[j] < 0.0 ? -1.0 : 1.0;
      out.value += std::abs(c[j]);
    }
    return out;
  }

  // y_j = sign(c_j) |c_j|^(q-1) / ||c||_q^(q-1), q = p*. Work with c / max|c| so
  // the powers stay in [0, 1].
  const double q = p.value() / (p.value() - 1.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double t = std::pow(std::abs(c[j]) / scale, q - 1.0);
    out.y[j] = std::copysign(t, c[j]);
    sum += t * (std::abs(c[j]) / scale);
  }
  const double norm_q = std::pow(sum, 1.0 / q);  // ||c / scale||_q
  const double denom = std::pow(norm_q, q - 1.0);
  for (double& y : out.y) y /= denom;
  out.value = scale * norm_q;
  return out;
}

Vector random_unit_vector(int n, Exponent p, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(static_cast<std::size_t>(n));
  double norm = 0.0;
  while (norm == 0.0) {
    for (double& x : v) x = dist(rng);
    norm = pnorm(v, p);
  }
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace hlineq
