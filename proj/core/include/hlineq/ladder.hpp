#pragma once

#include <span>
#include <vector>

#include "hlineq/lp.hpp"

namespace hlineq {

/// Interpolation exponents that transfer a mixed (s, lambda0) inequality on
/// l_{q_1} x ... x l_{q_m} to l_{p_1} x ... x l_{p_m} with p_k < q_k:
///
///   lambda_j = [1/lambda0 - sum_{i <= j} (1/p_i - 1/q_i)]^(-1),  j = 0..m
///   eta1 = lambda_m,  eta2 = lambda_{m-1}
///
/// The chain exists iff sum_k (1/p_k - 1/q_k) < 1/lambda0 (strict).
struct LadderResult {
  std::vector<double> lambda;  ///< lambda_0 .. lambda_m; empty when not admissible
  double eta1 = kInfinity;
  double eta2 = kInfinity;
  double gap = 0.0;  ///< sum_k (1/p_k - 1/q_k)
  bool admissible = false;
};

/// Throws ArgumentError if the lengths differ, lambda0 < 1, or p_k >= q_k for some k.
LadderResult ladder_exponents(std::span<const Exponent> p, std::span<const Exponent> q, double lambda0);

/// [q p / (lambda_prev (q - p))]^*, the conjugate of the Hoelder exponent used
/// when stepping from lambda_{j-1} to lambda_j. Equals lambda_j / lambda_{j-1}
/// on an admissible ladder.
double ladder_step_conjugate(Exponent p, Exponent q, double lambda_prev);

}  // namespace hlineq
