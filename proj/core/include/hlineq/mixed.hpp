#pragma once

#include "hlineq/form.hpp"

namespace hlineq {

/// Outer l_alpha aggregation over index j_i of inner l_s aggregation over all
/// other indices of |T(e_{j1}, ..., e_{jm})|:
///
///   ( sum_{j_i} ( sum_{other j} |T(e_j)|^s )^(alpha/s) )^(1/alpha)
///
/// Exponents may be +inf (maxima). excluded_slot is 0-based.
struct MixedNormSpec {
  int excluded_slot = 0;
  double inner = 1.0;  ///< s >= 1
  double outer = 1.0;  ///< alpha >= 1
};

/// (sum over all multi-indices |coeff|^rho)^(1/rho); max |coeff| for rho = inf.
/// Throws ArgumentError for rho < 1.
double isotropic_mixed_sum(const MultilinearForm& form, double rho);

/// Throws ArgumentError for an out-of-range slot or an exponent below 1.
double partial_mixed_sum(const MultilinearForm& form, const MixedNormSpec& spec);

}  // namespace hlineq
