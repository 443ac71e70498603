#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlineq/form.hpp"
#include "hlineq/rng.hpp"

namespace hlineq {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exponents compare equal within this absolute tolerance.
inline constexpr double kExponentTolerance = 1e-12;

/// Finite exponents at or above this value behave as infinity inside ball
/// maximizers, and computed exponents at or above it are reported as infinity.
inline constexpr double kInfinityThreshold = 1e6;

/// An l_p exponent p in (1, inf]. p = 1 is not an Exponent.
class Exponent {
 public:
  /// Throws ArgumentError unless p > 1 (p may be +inf).
  explicit Exponent(double p);
  static Exponent infinity() { return Exponent(kInfinity); }

  double value() const noexcept { return value_; }
  bool is_infinite() const noexcept { return value_ == kInfinity; }
  /// True for infinity and for finite p >= kInfinityThreshold.
  bool acts_as_infinity() const noexcept { return value_ >= kInfinityThreshold; }
  /// 1/p, with 1/inf = 0.
  double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  double value_;
};

using ExponentVector = std::vector<Exponent>;

/// Accepts a decimal number, a fraction "a/b", or "inf"/"infinity".
Exponent parse_exponent(std::string_view text);
/// Comma-separated exponent list.
ExponentVector parse_exponent_list(std::string_view text);
/// "inf" for infinity, shortest round-trip decimal otherwise.
std::string format_exponent(double p);

bool exponents_equal(double a, double b) noexcept;

/// Sum of 1/p_k.
double reciprocal_sum(std::span<const Exponent> p) noexcept;

/// (sum |v_j|^p)^(1/p) for p in [1, inf); max |v_j| for p = inf; 0 for the zero vector.
double pnorm(std::span<const double> v, double p);
inline double pnorm(std::span<const double> v, Exponent p) { return pnorm(v, p.value()); }

/// p/(p-1). Throws DomainError for infinity: its conjugate is 1, which is not a ball exponent.
Exponent conjugate(Exponent p);
/// Conjugate as a norm exponent: p/(p-1) for finite p, 1 for infinity, infinity for 1.
double conjugate_value(double p);

struct DualMaximizer {
  Vector y;      ///< unit vector in l_p with <c, y> = value
  double value;  ///< ||c||_{p*}
};

/// Maximizer of <c, y> over the unit ball of l_p (the equality case of Hoelder).
/// sign(0) is taken as +1 when p acts as infinity. Throws DegenerateInputError for c = 0.
DualMaximizer dual_maximizer(std::span<const double> c, Exponent p);

/// Standard Gaussian direction rescaled to unit l_p norm.
Vector random_unit_vector(int n, Exponent p, Rng& rng);

}  // namespace hlineq
