#pragma once

#include <cstdint>

#include "hlineq/form.hpp"

namespace hlineq {

/// Exact multiple Rademacher averages of an order-d array a (stored as a
/// MultilinearForm of order d):
///
///   R(a) = 2^(-nd) sum over eps^(1..d) in {+-1}^n of | sum_j a_j eps^(1)_{j1} ... eps^(d)_{jd} |
struct SignAverageReport {
  int d = 0;
  int n = 0;
  double l1_average = 0.0;         ///< R(a)
  double max_abs = 0.0;            ///< max |a_j|
  double l2_norm = 0.0;            ///< (sum |a_j|^2)^(1/2)
  double khinchin_constant = 1.0;  ///< (sqrt 2)^d
};

inline constexpr std::uint64_t kDefaultSignBudget = std::uint64_t{1} << 24;

/// Throws CapacityError when 2^(nd) exceeds `budget`.
double multiple_rademacher_l1(const MultilinearForm& a, std::uint64_t budget = kDefaultSignBudget);

/// Contraction bound max |a_j| <= R(a). Throws InvariantError if it fails beyond rounding.
SignAverageReport contraction_check(const MultilinearForm& a, std::uint64_t budget = kDefaultSignBudget);

/// Multiple Khinchin bound (sum |a|^2)^(1/2) <= (sqrt 2)^d R(a), real scalars.
/// Throws InvariantError if it fails beyond rounding.
SignAverageReport khinchin_multiple_check(const MultilinearForm& a, std::uint64_t budget = kDefaultSignBudget);

}  // namespace hlineq
