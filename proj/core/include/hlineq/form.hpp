#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlineq {

/// Dense real m-linear form on R^n x ... x R^n.
///
/// Coefficients T(e_{j1}, ..., e_{jm}) are stored row-major with j1 varying
/// slowest, i.e. the flat offset of the 0-based multi-index (j1, ..., jm) is
/// sum_k j_k * n^(m-1-k). Documentation and the CLI use 1-based indices; this
/// class is 0-based. Values are immutable after construction.
class MultilinearForm {
 public:
  /// Throws ArgumentError unless order >= 1, dim >= 1, coeffs.size() == dim^order
  /// and every coefficient is finite.
  MultilinearForm(int order, int dim, std::vector<double> coeffs);

  static MultilinearForm zeros(int order, int dim);

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// Coefficient at a 0-based multi-index of length order().
  double at(std::span<const int> index) const;
  std::size_t offset(std::span<const int> index) const;
  /// Inverse of offset().
  std::vector<int> multi_index(std::size_t offset) const;

  double max_abs() const noexcept;
  bool is_zero() const noexcept;

  MultilinearForm scaled(double alpha) const;
  /// Slot k of the result is slot perm[k] of *this.
  MultilinearForm permuted(std::span<const int> perm) const;
  MultilinearForm with_coeffs(std::vector<double> coeffs) const;

  friend bool operator==(const MultilinearForm&, const MultilinearForm&) = default;

 private:
  int order_;
  int dim_;
  std::vector<double> coeffs_;
};

using Vector = std::vector<double>;

/// T(x^(1), ..., x^(m)) = sum_j coeffs(j) x^(1)_{j1} ... x^(m)_{jm}.
double evaluate(const MultilinearForm& form, std::span<const Vector> args);

/// The coefficient vector of the linear functional x -> T(..., x, ...) with
/// x in slot `slot` (0-based) and the other m-1 arguments fixed in order.
Vector partial_coefficients(const MultilinearForm& form, int slot, std::span<const Vector> fixed);

/// Same as partial_coefficients but takes all m arguments and ignores args[slot].
Vector partial_coefficients_all(const MultilinearForm& form, int slot, std::span<const Vector> args);

enum class Distribution { Gaussian, RademacherSigns, Uniform };

std::string_view to_string(Distribution d);
Distribution parse_distribution(std::string_view name);

/// i.i.d. coefficients: standard normal, uniform {-1,+1}, or uniform on [-1, 1].
/// Deterministic in (m, n, distribution, seed).
MultilinearForm random_form(int m, int n, Distribution distribution, std::uint64_t seed);

/// 64-bit FNV-1a over (order, dim, coefficient bit patterns), as 16 hex digits.
std::string form_digest(const MultilinearForm& form);

}  // namespace hlineq
