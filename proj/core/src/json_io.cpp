#include "hlineq/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "hlineq/errors.hpp"

namespace hlineq {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_exponent_list(std::span<const Exponent> p) {
  std::string out;
  for (const Exponent& e : p) out += (out.empty() ? "" : ":") + format_exponent(e.value());
  return out;
}

Json real_to_json(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json exponents_to_json(std::span<const Exponent> p) {
  Json arr = Json::array();
  for (const Exponent& e : p) arr.push_back(real_to_json(e.value()));
  return arr;
}

Exponent exponent_from_json(const Json& j) {
  if (j.is_string()) return parse_exponent(j.get<std::string>());
  if (j.is_number()) return Exponent(j.get<double>());
  throw ArgumentError("exponent must be a number or \"inf\"");
}

Json form_to_json(const MultilinearForm& form) {
  Json j;
  j["m"] = form.order();
  j["n"] = form.dim();
  j["coeffs"] = Json::array();
  for (double c : form.coeffs()) j["coeffs"].push_back(c);
  return j;
}

MultilinearForm form_from_json(const Json& j) {
  if (!j.is_object()) throw ArgumentError("form JSON must be an object with fields m, n, coeffs");
  for (const char* key : {"m", "n", "coeffs"}) {
    if (!j.contains(key)) throw ArgumentError(std::string("form JSON is missing field '") + key + "'");
  }
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer()) {
    throw ArgumentError("form JSON fields m and n must be integers");
  }
  if (!j["coeffs"].is_array()) throw ArgumentError("form JSON field coeffs must be an array");
  std::vector<double> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const auto& c : j["coeffs"]) {
    if (!c.is_number()) throw ArgumentError("form coefficients must be numbers");
    coeffs.push_back(c.get<double>());
  }
  return MultilinearForm(j["m"].get<int>(), j["n"].get<int>(), std::move(coeffs));
}

MultilinearForm read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open form file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("form file '" + path + "' is not valid JSON: " + e.what());
  }
  return form_from_json(j);
}

void write_form_file(const std::string& path, const MultilinearForm& form) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write form file '" + path + "'");
  out << form_to_json(form).dump() << '\n';
}

Json to_json(const NormEstimate& e) {
  Json j;
  j["value"] = real_to_json(e.value);
  j["status"] = std::string(to_string(e.status));
  j["starts"] = e.starts_used;
  j["iterations"] = e.iterations;
  if (e.has_upper_bound()) {
    j["lo"] = real_to_json(e.lo);
    j["hi"] = real_to_json(e.hi);
  }
  return j;
}

Json to_json(const RegimeExponents& e) {
  Json j;
  j["isotropic"] = e.isotropic;
  if (e.isotropic) {
    j["rho"] = real_to_json(e.rho);
  } else {
    j["inner"] = real_to_json(e.inner);
    j["outer"] = real_to_json(e.outer);
    Json slots = Json::array();
    for (int s : e.excluded_slots) slots.push_back(s + 1);
    j["excluded_slots"] = slots;
  }
  return j;
}

Json to_json(const RatioReport& r) {
  Json j;
  j["regime"] = std::string(to_string(r.regime.kind));
  j["m"] = r.regime.order();
  j["n"] = r.n;
  j["p"] = exponents_to_json(r.regime.p);
  j["mixed_value"] = real_to_json(r.mixed_value);
  j["norm"] = to_json(r.norm);
  j["ratio"] = real_to_json(r.ratio);
  j["certified_lower"] = r.certified_lower ? real_to_json(*r.certified_lower) : Json(nullptr);
  j["bound"] = real_to_json(r.bound);
  j["margin"] = real_to_json(r.margin);
  j["form_digest"] = r.form_digest;
  j["seed"] = r.seed;
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["best"] = to_json(r.best);
  Json trace = Json::array();
  for (const auto& [step, value] : r.trace) trace.push_back(Json::array({step, real_to_json(value)}));
  j["trace"] = trace;
  j["restarts"] = r.restarts;
  j["evaluations"] = r.evaluations;
  j["seed"] = r.seed;
  j["certified"] = r.certified;
  j["certified_ratio"] = r.certified_ratio ? real_to_json(*r.certified_ratio) : Json(nullptr);
  if (r.best_form) j["best_form"] = form_to_json(*r.best_form);
  return j;
}

Json to_json(const CellResult& c) {
  Json j;
  j["regime"] = std::string(to_string(c.cell.regime.kind));
  j["m"] = c.cell.regime.order();
  j["n"] = c.cell.n;
  j["p"] = exponents_to_json(c.cell.regime.p);
  j["samples"] = c.samples;
  j["max_ratio"] = real_to_json(c.max_ratio);
  j["bound"] = real_to_json(c.bound);
  j["margin"] = real_to_json(c.margin);
  j["pass"] = c.pass;
  j["worst"] = to_json(c.worst);
  if (c.search) {
    j["search_best_ratio"] = real_to_json(c.search->best.ratio);
    j["search_evaluations"] = c.search->evaluations;
    j["search_restarts"] = c.search->restarts;
  }
  return j;
}

Json to_json(const SignAverageReport& r) {
  Json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["l1_average"] = real_to_json(r.l1_average);
  j["max_abs"] = real_to_json(r.max_abs);
  j["l2_norm"] = real_to_json(r.l2_norm);
  j["khinchin_constant"] = real_to_json(r.khinchin_constant);
  return j;
}

Json to_json(const LadderResult& r) {
  Json j;
  j["admissible"] = r.admissible;
  j["gap"] = real_to_json(r.gap);
  if (r.admissible) {
    Json chain = Json::array();
    for (double l : r.lambda) chain.push_back(real_to_json(l));
    j["lambda"] = chain;
    j["eta1"] = real_to_json(r.eta1);
    j["eta2"] = real_to_json(r.eta2);
  }
  return j;
}

Json to_json(const LadderCheckReport& r) {
  Json j;
  j["ladder"] = to_json(r.ladder);
  j["s"] = real_to_json(r.s);
  j["lhs_outer"] = real_to_json(r.lhs_outer);
  j["estimated_rhs_constant"] = real_to_json(r.estimated_rhs_constant);
  j["rhs_certified"] = r.rhs_certified;
  j["max_lhs_ratio"] = real_to_json(r.max_lhs_ratio);
  j["worst_digest"] = r.worst_digest;
  j["pass"] = r.pass;
  return j;
}

void write_sweep_csv(std::ostream& os, const std::vector<CellResult>& cells) {
  os << kSweepCsvHeader << '\n';
  for (const CellResult& c : cells) {
    os << to_string(c.cell.regime.kind) << ',' << c.cell.regime.order() << ',' << c.cell.n << ','
       << format_exponent_list(c.cell.regime.p) << ',' << format_real(c.max_ratio) << ',' << format_real(c.bound)
       << ',' << format_real(c.margin) << ',' << (c.pass ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace hlineq
