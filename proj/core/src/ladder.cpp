#include "hlineq/ladder.hpp"

#include <cmath>
#include <string>

#include "hlineq/errors.hpp"

namespace hlineq {

LadderResult ladder_exponents(std::span<const Exponent> p, std::span<const Exponent> q, double lambda0) {
  if (p.size() != q.size() || p.empty()) {
    throw ArgumentError("ladder needs p and q of the same nonzero length (got " + std::to_string(p.size()) + " and " +
                        std::to_string(q.size()) + ")");
  }
  if (std::isnan(lambda0) || lambda0 < 1.0) throw ArgumentError("lambda0 must be >= 1, got " + format_exponent(lambda0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!(p[k].value() < q[k].value())) {
      throw ArgumentError("p_k < q_k violated at k = " + std::to_string(k + 1) + ": p_k = " +
                          format_exponent(p[k].value()) + ", q_k = " + format_exponent(q[k].value()));
    }
  }

  LadderResult out;
  for (std::size_t k = 0; k < p.size(); ++k) out.gap += p[k].reciprocal() - q[k].reciprocal();
  const double base = lambda0 == kInfinity ? 0.0 : 1.0 / lambda0;
  out.admissible = out.gap < base;
  if (!out.admissible) return out;

  out.lambda.push_back(lambda0);
  double partial = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    partial += p[k].reciprocal() - q[k].reciprocal();
    out.lambda.push_back(1.0 / (base - partial));
  }
  out.eta1 = out.lambda.back();
  out.eta2 = out.lambda[out.lambda.size() - 2];
  return out;
}

double ladder_step_conjugate(Exponent p, Exponent q, double lambda_prev) {
  // x = qp / (lambda (q - p)) has 1/x = lambda (1/p - 1/q); x* = 1 / (1 - 1/x).
  const double inv = lambda_prev * (p.reciprocal() - q.reciprocal());
  return 1.0 / (1.0 - inv);
}

}  // namespace hlineq
