#include "hlineq/regime.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hlineq/errors.hpp"

namespace hlineq {

std::string_view to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::BohnenblustHille: return "bohnenblust-hille";
    case RegimeKind::PracianoPereira: return "praciano-pereira";
    case RegimeKind::DimantSevillaPeris: return "dimant-sevilla-peris";
    case RegimeKind::NewIsotropic: return "new-isotropic";
    case RegimeKind::Anisotropic2mMinus2: return "anisotropic-2m-minus-2";
    case RegimeKind::AnisotropicBilinearHead: return "anisotropic-bilinear-head";
    case RegimeKind::Degenerate: return "degenerate";
  }
  return "unknown";
}

const std::vector<RegimeKind>& all_regime_kinds() {
  static const std::vector<RegimeKind> kinds{
      RegimeKind::BohnenblustHille,    RegimeKind::PracianoPereira,         RegimeKind::DimantSevillaPeris,
      RegimeKind::NewIsotropic,        RegimeKind::Anisotropic2mMinus2,     RegimeKind::AnisotropicBilinearHead,
      RegimeKind::Degenerate,
  };
  return kinds;
}

RegimeKind parse_regime_kind(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
    return c == '_' ? '-' : static_cast<char>(std::tolower(c));
  });
  for (RegimeKind kind : all_regime_kinds()) {
    if (key == to_string(kind)) return kind;
  }
  if (key == "bohnenblusthille" || key == "littlewood") return RegimeKind::BohnenblustHille;
  if (key == "pracianopereira") return RegimeKind::PracianoPereira;
  if (key == "dimantsevillaperis") return RegimeKind::DimantSevillaPeris;
  if (key == "newisotropic") return RegimeKind::NewIsotropic;
  if (key == "anisotropic2mminus2") return RegimeKind::Anisotropic2mMinus2;
  if (key == "anisotropicbilinearhead") return RegimeKind::AnisotropicBilinearHead;
  throw ArgumentError("unknown regime '" + std::string(name) +
                      "' (expected one of bohnenblust-hille, praciano-pereira, dimant-sevilla-peris, "
                      "new-isotropic, anisotropic-2m-minus-2, anisotropic-bilinear-head, degenerate)");
}

std::string_view hypothesis_text(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::BohnenblustHille: return "p_k = inf for every k";
    case RegimeKind::PracianoPereira: return "p_1 = ... = p_m = p with p >= 2m";
    case RegimeKind::DimantSevillaPeris:
    case RegimeKind::NewIsotropic: return "m >= 2 and 1/2 <= 1/p_1 + ... + 1/p_m < 1";
    case RegimeKind::Anisotropic2mMinus2: return "p_1 = ... = p_m = p with m < p <= 2m - 2";
    case RegimeKind::AnisotropicBilinearHead:
      return "m >= 3, 1/2 <= 1/p_1 + 1/p_2 < 1 and 1/p_1 + ... + 1/p_m < 1";
    case RegimeKind::Degenerate: return "p_1 = ... = p_m = m";
  }
  return "";
}

namespace {

constexpr double kTol = kExponentTolerance;

bool strictly_less(double a, double b) { return a < b - kTol; }
bool at_most(double a, double b) { return a <= b + kTol; }

bool isotropic(std::span<const Exponent> p) {
  return std::all_of(p.begin(), p.end(), [&](const Exponent& e) { return exponents_equal(e.value(), p[0].value()); });
}

std::string num(double x) { return format_exponent(x); }

double report_exponent(double e) { return e >= kInfinityThreshold ? kInfinity : e; }

std::string check_isotropic(std::span<const Exponent> p) {
  if (!isotropic(p)) return "isotropic exponents p_1 = ... = p_m required";
  return {};
}

}  // namespace

std::string hypothesis_violation(const Regime& regime) {
  const int m = regime.order();
  const auto& p = regime.p;
  if (m < 1) return "m >= 1 violated (empty exponent vector)";
  const double sum = reciprocal_sum(p);
  const std::string sum_text = "sum 1/p_k = " + num(sum);

  switch (regime.kind) {
    case RegimeKind::BohnenblustHille:
      for (const Exponent& e : p) {
        if (!e.is_infinite()) return "p_k = inf violated: p_k = " + num(e.value());
      }
      return {};
    case RegimeKind::PracianoPereira: {
      if (auto v = check_isotropic(p); !v.empty()) return v;
      if (!at_most(2.0 * m, p[0].value())) return "p >= 2m violated: p = " + num(p[0].value()) + ", 2m = " + num(2.0 * m);
      return {};
    }
    case RegimeKind::DimantSevillaPeris:
    case RegimeKind::NewIsotropic:
      if (m < 2) return "m >= 2 violated: m = " + std::to_string(m);
      if (!at_most(0.5, sum)) return "1/2 <= sum 1/p_k violated: " + sum_text;
      if (!strictly_less(sum, 1.0)) return "sum 1/p_k < 1 violated: " + sum_text;
      return {};
    case RegimeKind::Anisotropic2mMinus2: {
      if (m < 2) return "m >= 2 violated: m = " + std::to_string(m);
      if (auto v = check_isotropic(p); !v.empty()) return v;
      const double q = p[0].value();
      if (!strictly_less(m, q)) return "m < p violated: p = " + num(q) + ", m = " + std::to_string(m);
      if (!at_most(q, 2.0 * m - 2.0)) return "p <= 2m - 2 violated: p = " + num(q) + ", 2m - 2 = " + num(2.0 * m - 2.0);
      return {};
    }
    case RegimeKind::AnisotropicBilinearHead: {
      if (m < 3) return "m >= 3 violated: m = " + std::to_string(m);
      const double head = p[0].reciprocal() + p[1].reciprocal();
      const std::string head_text = "1/p_1 + 1/p_2 = " + num(head);
      if (!at_most(0.5, head)) return "1/2 <= 1/p_1 + 1/p_2 violated: " + head_text;
      if (!strictly_less(head, 1.0)) return "1/p_1 + 1/p_2 < 1 violated: " + head_text;
      if (!strictly_less(sum, 1.0)) return "1/p_1 + ... + 1/p_m < 1 violated: " + sum_text;
      return {};
    }
    case RegimeKind::Degenerate: {
      if (auto v = check_isotropic(p); !v.empty()) return v;
      if (!exponents_equal(p[0].value(), m)) return "p = m violated: p = " + num(p[0].value()) + ", m = " + std::to_string(m);
      return {};
    }
  }
  return "unknown regime";
}

bool is_applicable(const Regime& regime) { return hypothesis_violation(regime).empty(); }

void require_applicable(const Regime& regime) {
  if (std::string v = hypothesis_violation(regime); !v.empty()) {
    throw RegimeError(std::string(to_string(regime.kind)) + " not applicable: " + v + " (requires " +
                      std::string(hypothesis_text(regime.kind)) + ")");
  }
}

std::vector<RegimeKind> applicable_regimes(std::span<const Exponent> p) {
  std::vector<RegimeKind> out;
  const Regime probe{RegimeKind::Degenerate, ExponentVector(p.begin(), p.end())};
  for (RegimeKind kind : all_regime_kinds()) {
    Regime r = probe;
    r.kind = kind;
    if (is_applicable(r)) out.push_back(kind);
  }
  return out;
}

RegimeExponents regime_exponents(const Regime& regime) {
  require_applicable(regime);
  const int m = regime.order();
  const auto& p = regime.p;
  const double sum = reciprocal_sum(p);
  RegimeExponents out;

  switch (regime.kind) {
    case RegimeKind::BohnenblustHille:
      out.rho = 2.0 * m / (m + 1.0);
      break;
    case RegimeKind::PracianoPereira: {
      const double q = p[0].value();
      out.rho = p[0].is_infinite() ? 2.0 * m / (m + 1.0) : 2.0 * m * q / (m * q + q - 2.0 * m);
      break;
    }
    case RegimeKind::DimantSevillaPeris:
    case RegimeKind::NewIsotropic:
      out.rho = report_exponent(1.0 / (1.0 - sum));
      break;
    case RegimeKind::Anisotropic2mMinus2: {
      const double q = p[0].value();
      out.isotropic = false;
      out.inner = report_exponent(q / (q - (m - 1.0)));
      out.outer = report_exponent(q / (q - m));
      for (int i = 0; i < m; ++i) out.excluded_slots.push_back(i);
      break;
    }
    case RegimeKind::AnisotropicBilinearHead: {
      const double head_sum = sum - p.back().reciprocal();
      out.isotropic = false;
      out.inner = report_exponent(1.0 / (1.0 - head_sum));
      out.outer = report_exponent(1.0 / (1.0 - sum));
      out.excluded_slots.push_back(m - 1);
      break;
    }
    case RegimeKind::Degenerate:
      out.rho = kInfinity;
      break;
  }
  return out;
}

double regime_constant(const Regime& regime) {
  require_applicable(regime);
  const int m = regime.order();
  const auto& p = regime.p;
  switch (regime.kind) {
    case RegimeKind::BohnenblustHille:
    case RegimeKind::PracianoPereira:
    case RegimeKind::DimantSevillaPeris:
      return std::pow(2.0, (m - 1.0) / 2.0);
    case RegimeKind::NewIsotropic:
      return std::pow(2.0, (m - 1.0) * (1.0 - reciprocal_sum(p)));
    case RegimeKind::Anisotropic2mMinus2: {
      const double q = p[0].value();
      return std::pow(2.0, (m - 1.0) * (q - m + 1.0) / q);
    }
    case RegimeKind::AnisotropicBilinearHead:
      return std::pow(2.0, 1.0 - (p[0].reciprocal() + p[1].reciprocal()));
    case RegimeKind::Degenerate:
      return 1.0;
  }
  return kInfinity;
}

double regime_mixed_value(const MultilinearForm& form, const Regime& regime) {
  if (form.order() != regime.order()) {
    throw ArgumentError("regime has " + std::to_string(regime.order()) + " exponents, form order is " +
                        std::to_string(form.order()));
  }
  const RegimeExponents e = regime_exponents(regime);
  if (e.isotropic) return isotropic_mixed_sum(form, e.rho);
  double best = 0.0;
  for (int slot : e.excluded_slots) {
    best = std::max(best, partial_mixed_sum(form, MixedNormSpec{slot, e.inner, e.outer}));
  }
  return best;
}

}  // namespace hlineq
