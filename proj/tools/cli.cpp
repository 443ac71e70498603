#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

#include "hlineq/hlineq.hpp"

namespace hlineq::cli {

namespace {

enum class Format { Json, Csv, Pretty };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json config = Json::object();
  Json result;
  std::optional<Table> table;
  bool json_lines = false;  // result is an array, one element per line
  bool passed = true;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// "4" broadcasts to every slot; "4:4:5" gives one exponent per slot.
ExponentVector parse_p_entry(std::string_view text, int m) {
  ExponentVector p;
  for (const auto& part : split(text, ':')) p.push_back(parse_exponent(part));
  if (p.size() == 1) return ExponentVector(static_cast<std::size_t>(m), p[0]);
  if (static_cast<int>(p.size()) != m) {
    throw ArgumentError("p entry '" + std::string(text) + "' has " + std::to_string(p.size()) +
                        " exponents, expected 1 or m = " + std::to_string(m));
  }
  return p;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v < 1) {
      throw ArgumentError(std::string(what) + " must be a comma-separated list of positive integers, got '" +
                          std::string(text) + "'");
    }
    out.push_back(v);
  }
  return out;
}

int default_threads(const Environment& env) {
  if (!env.threads) return 1;
  int v = 0;
  const auto& t = *env.threads;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || v < 1) {
    throw ArgumentError("HLINEQ_THREADS must be a positive integer, got '" + t + "'");
  }
  return v;
}

std::string json_scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_real(v.get<double>());
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_array()) {
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : ":") + json_scalar_text(e);
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, json_scalar_text(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i + 1 < r.size()) {
        out << std::left << std::setw(static_cast<int>(width[i] + 2)) << r[i];
      } else {
        out << r[i];
      }
    }
    out << '\n';
  }
}

void emit(std::ostream& out, const std::string& command, const Report& report, Format format) {
  switch (format) {
    case Format::Json: {
      if (report.json_lines) {
        Json head;
        head["command"] = command;
        head["config"] = report.config;
        out << head.dump() << '\n';
        for (const auto& e : report.result) out << e.dump() << '\n';
      } else {
        Json j;
        j["command"] = command;
        j["config"] = report.config;
        j["result"] = report.result;
        out << j.dump() << '\n';
      }
      return;
    }
    case Format::Csv: {
      if (report.table) {
        auto line = [&](const std::vector<std::string>& r) {
          for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
          out << '\n';
        };
        line(report.table->header);
        for (const auto& r : report.table->rows) line(r);
      } else {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(report.result, "", kv);
        out << "key,value\n";
        for (const auto& [k, v] : kv) out << csv_field(k) << ',' << csv_field(v) << '\n';
      }
      return;
    }
    case Format::Pretty: {
      std::vector<std::pair<std::string, std::string>> cfg;
      flatten(report.config, "", cfg);
      out << command << '\n';
      std::vector<std::vector<std::string>> cfg_rows;
      for (const auto& [k, v] : cfg) cfg_rows.push_back({"  " + k, v});
      print_aligned(out, cfg_rows);
      out << '\n';
      if (report.table) {
        std::vector<std::vector<std::string>> rows{report.table->header};
        rows.insert(rows.end(), report.table->rows.begin(), report.table->rows.end());
        print_aligned(out, rows);
      } else {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(report.result, "", kv);
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : kv) rows.push_back({k, v});
        print_aligned(out, rows);
      }
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Shared option groups

struct FormInput {
  std::string file;
  int m = 0;
  int n = 0;
  std::string dist = "gaussian";
  std::uint64_t seed = 0;
  CLI::Option* file_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* dist_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* app) {
    file_opt = app->add_option("--form", file, "JSON form file {\"m\",\"n\",\"coeffs\"}");
    m_opt = app->add_option("--m", m, "generator: order m");
    n_opt = app->add_option("--n", n, "generator: dimension n");
    dist_opt = app->add_option("--dist", dist, "generator: gaussian | rademacher | uniform");
    seed_opt = app->add_option("--seed", seed, "generator and ascent seed");
  }

  MultilinearForm load(Json& config) const {
    if (file_opt->count() > 0) {
      if (m_opt->count() + n_opt->count() + dist_opt->count() > 0) {
        throw ArgumentError("--form and a generator (--m/--n/--dist) are mutually exclusive");
      }
      MultilinearForm form = read_form_file(file);
      config["source"] = "file";
      config["form"] = file;
      config["seed"] = seed;
      config["form_digest"] = form_digest(form);
      return form;
    }
    if (m_opt->count() == 0 || n_opt->count() == 0 || seed_opt->count() == 0) {
      throw ArgumentError("need exactly one input: --form FILE, or the generator --m M --n N --seed S [--dist D]");
    }
    MultilinearForm form = random_form(m, n, parse_distribution(dist), seed);
    config["source"] = "generator";
    config["m"] = m;
    config["n"] = n;
    config["dist"] = std::string(to_string(parse_distribution(dist)));
    config["seed"] = seed;
    config["form_digest"] = form_digest(form);
    return form;
  }
};

struct AscentFlags {
  AscentOptions options;

  void attach(CLI::App* app) {
    app->add_option("--starts", options.starts, "random ascent starts (basis starts are added)")
        ->capture_default_str();
    app->add_option("--tol", options.tol, "relative improvement tolerance")->capture_default_str();
    app->add_option("--max-iter", options.max_iter, "sweeps per start")->capture_default_str();
  }

  void describe(Json& config) const {
    config["starts"] = options.starts;
    config["tol"] = real_to_json(options.tol);
    config["max_iter"] = options.max_iter;
  }
};

Json regime_row_json(const Regime& regime) {
  Json j;
  j["regime"] = std::string(to_string(regime.kind));
  j["m"] = regime.order();
  j["p"] = exponents_to_json(regime.p);
  j["hypothesis"] = std::string(hypothesis_text(regime.kind));
  const std::string violation = hypothesis_violation(regime);
  j["applicable"] = violation.empty();
  if (violation.empty()) {
    j["exponents"] = to_json(regime_exponents(regime));
    j["constant"] = real_to_json(regime_constant(regime));
  } else {
    j["violated"] = violation;
  }
  return j;
}

std::vector<std::string> regime_row_cells(const Regime& regime) {
  const std::string violation = hypothesis_violation(regime);
  std::vector<std::string> row{std::string(to_string(regime.kind)), std::to_string(regime.order()),
                               format_exponent_list(regime.p), violation.empty() ? "yes" : "no"};
  if (!violation.empty()) {
    row.insert(row.end(), {"", "", "", "", "", violation});
    return row;
  }
  const RegimeExponents e = regime_exponents(regime);
  std::string slots;
  for (int s : e.excluded_slots) slots += (slots.empty() ? "" : ":") + std::to_string(s + 1);
  row.push_back(e.isotropic ? format_exponent(e.rho) : "");
  row.push_back(e.isotropic ? "" : format_exponent(e.inner));
  row.push_back(e.isotropic ? "" : format_exponent(e.outer));
  row.push_back(slots);
  row.push_back(format_real(regime_constant(regime)));
  row.push_back("");
  return row;
}

const std::vector<std::string> kRegimeHeader{"regime", "m",     "p",     "applicable", "rho",
                                             "inner",  "outer", "slots", "constant",   "violated"};

// ---------------------------------------------------------------------------
// Subcommands

struct NormCommand {
  FormInput input;
  AscentFlags ascent;
  std::string p;
  std::string method = "auto";
  int resolution = 4096;

  void attach(CLI::App* app) {
    input.attach(app);
    ascent.attach(app);
    app->add_option("--p", p, "exponents: '4' for every slot or '4:4:5' per slot")->required();
    app->add_option("--method", method, "auto | ascent | exact | bracket")->capture_default_str();
    app->add_option("--resolution", resolution, "bracket grid resolution")->capture_default_str();
  }

  Report run() {
    Report r;
    const MultilinearForm form = input.load(r.config);
    const ExponentVector pv = parse_p_entry(p, form.order());
    AscentOptions opts = ascent.options;
    opts.seed = input.seed;
    r.config["p"] = exponents_to_json(pv);
    r.config["method"] = method;
    r.config["resolution"] = resolution;
    ascent.describe(r.config);
    r.config["enumeration_budget"] = kDefaultEnumerationBudget;

    NormEstimate e;
    if (method == "auto") {
      RatioOptions ro;
      ro.ascent = opts;
      e = estimate_norm(form, pv, ro);
    } else if (method == "ascent") {
      e = alternating_ascent(form, pv, opts);
    } else if (method == "exact") {
      if (std::any_of(pv.begin(), pv.end(), [](const Exponent& x) { return !x.is_infinite(); })) {
        throw ArgumentError("--method exact needs every p_k = inf");
      }
      e = opnorm_infinity_exact(form);
    } else if (method == "bracket") {
      e = opnorm_grid_bracket(form, pv, resolution);
    } else {
      throw ArgumentError("unknown --method '" + method + "' (auto | ascent | exact | bracket)");
    }
    r.result = to_json(e);
    return r;
  }
};

struct MixedCommand {
  FormInput input;
  std::string rho;
  int slot = 0;
  std::string inner;
  std::string outer;
  std::string regime;
  std::string p;
  CLI::Option* rho_opt = nullptr;
  CLI::Option* slot_opt = nullptr;
  CLI::Option* regime_opt = nullptr;

  void attach(CLI::App* app) {
    input.attach(app);
    rho_opt = app->add_option("--rho", rho, "isotropic exponent");
    slot_opt = app->add_option("--slot", slot, "excluded slot, 1-based (with --inner and --outer)");
    app->add_option("--inner", inner, "inner exponent s");
    app->add_option("--outer", outer, "outer exponent alpha");
    regime_opt = app->add_option("--regime", regime, "left-hand side of a regime (with --p)");
    app->add_option("--p", p, "exponents for --regime");
  }

  Report run() {
    Report r;
    const MultilinearForm form = input.load(r.config);
    const int modes = static_cast<int>(rho_opt->count() > 0) + static_cast<int>(slot_opt->count() > 0) +
                      static_cast<int>(regime_opt->count() > 0);
    if (modes != 1) throw ArgumentError("choose one of --rho, --slot/--inner/--outer, or --regime/--p");
    if (rho_opt->count() > 0) {
      const double value = parse_exponent_or_one(rho);
      r.config["rho"] = real_to_json(value);
      r.result["value"] = real_to_json(isotropic_mixed_sum(form, value));
    } else if (slot_opt->count() > 0) {
      if (inner.empty() || outer.empty()) throw ArgumentError("--slot needs --inner and --outer");
      const MixedNormSpec spec{slot - 1, parse_exponent_or_one(inner), parse_exponent_or_one(outer)};
      r.config["slot"] = slot;
      r.config["inner"] = real_to_json(spec.inner);
      r.config["outer"] = real_to_json(spec.outer);
      r.result["value"] = real_to_json(partial_mixed_sum(form, spec));
    } else {
      if (p.empty()) throw ArgumentError("--regime needs --p");
      const Regime reg{parse_regime_kind(regime), parse_p_entry(p, form.order())};
      r.config["regime"] = std::string(to_string(reg.kind));
      r.config["p"] = exponents_to_json(reg.p);
      r.result["exponents"] = to_json(regime_exponents(reg));
      r.result["value"] = real_to_json(regime_mixed_value(form, reg));
    }
    return r;
  }

  // Mixed exponents may equal 1, which Exponent rejects.
  static double parse_exponent_or_one(const std::string& text) {
    if (text == "1") return 1.0;
    return parse_exponent(text).value();
  }
};

struct ExponentsCommand {
  int m = 0;
  std::string p;
  std::string regime;
  std::string q;
  std::string lambda0 = "4/3";

  void attach(CLI::App* app) {
    app->add_option("--m", m, "order m")->required();
    app->add_option("--p", p, "exponents: '4' or '4:4:5'")->required();
    app->add_option("--regime", regime, "one regime (default: all)");
    app->add_option("--q", q, "ladder target exponents, p_k < q_k");
    app->add_option("--lambda0", lambda0, "ladder base exponent")->capture_default_str();
  }

  Report run() {
    Report r;
    const ExponentVector pv = parse_p_entry(p, m);
    r.config["m"] = m;
    r.config["p"] = exponents_to_json(pv);
    r.config["regime"] = regime.empty() ? Json("all") : Json(regime);
    std::vector<RegimeKind> kinds = all_regime_kinds();
    if (!regime.empty()) {
      const Regime reg{parse_regime_kind(regime), pv};
      require_applicable(reg);
      kinds = {reg.kind};
    }
    Table t{kRegimeHeader, {}};
    Json rows = Json::array();
    for (RegimeKind k : kinds) {
      const Regime reg{k, pv};
      rows.push_back(regime_row_json(reg));
      t.rows.push_back(regime_row_cells(reg));
    }
    r.result["regimes"] = rows;
    if (!q.empty()) {
      const ExponentVector qv = parse_p_entry(q, m);
      const double l0 = parse_exponent(lambda0).value();
      r.config["q"] = exponents_to_json(qv);
      r.config["lambda0"] = real_to_json(l0);
      const LadderResult lr = ladder_exponents(pv, qv, l0);
      r.result["ladder"] = to_json(lr);
      t.rows.push_back({"ladder", std::to_string(m), format_exponent_list(pv), lr.admissible ? "yes" : "no"});
      if (lr.admissible) {
        std::string chain;
        for (double l : lr.lambda) chain += (chain.empty() ? "" : ":") + format_exponent(l);
        t.rows.back().insert(t.rows.back().end(), {"", "eta2=" + format_exponent(lr.eta2),
                                                   "eta1=" + format_exponent(lr.eta1), "", "", "lambda=" + chain});
      } else {
        t.rows.back().insert(t.rows.back().end(),
                             {"", "", "", "", "", "sum_k (1/p_k - 1/q_k) < 1/lambda0 violated"});
      }
    }
    r.table = std::move(t);
    return r;
  }
};

struct BoundsCommand {
  std::string m = "2";
  std::string p;
  std::string regime;

  void attach(CLI::App* app) {
    app->add_option("--m", m, "orders, comma-separated")->capture_default_str();
    app->add_option("--p", p, "p entries, comma-separated; each '4' or '4:4:5'")->required();
    app->add_option("--regime", regime, "regimes, comma-separated (default: all)");
  }

  Report run() {
    Report r;
    const auto ms = parse_int_list(m, "--m");
    const auto ps = split(p, ',');
    std::vector<RegimeKind> kinds = all_regime_kinds();
    if (!regime.empty()) {
      kinds.clear();
      for (const auto& name : split(regime, ',')) kinds.push_back(parse_regime_kind(name));
    }
    r.config["m"] = ms;
    r.config["p"] = ps;
    Json names = Json::array();
    for (RegimeKind k : kinds) names.push_back(std::string(to_string(k)));
    r.config["regime"] = names;

    Table t{kRegimeHeader, {}};
    r.result = Json::array();
    for (int mm : ms) {
      for (const auto& entry : ps) {
        if (entry.find(':') != std::string::npos && static_cast<int>(split(entry, ':').size()) != mm) continue;
        const ExponentVector pv = parse_p_entry(entry, mm);
        for (RegimeKind k : kinds) {
          const Regime reg{k, pv};
          r.result.push_back(regime_row_json(reg));
          t.rows.push_back(regime_row_cells(reg));
        }
      }
    }
    r.table = std::move(t);
    return r;
  }
};

struct RatioCommand {
  FormInput input;
  AscentFlags ascent;
  std::string p;
  std::string regime;
  bool bracket = false;
  int resolution = 4096;

  void attach(CLI::App* app) {
    input.attach(app);
    ascent.attach(app);
    app->add_option("--p", p, "exponents: '4' or '4:4:5'")->required();
    app->add_option("--regime", regime, "regime name")->required();
    app->add_flag("--bracket", bracket, "use the n = 2 grid bracket as denominator");
    app->add_option("--resolution", resolution, "bracket grid resolution")->capture_default_str();
  }

  Report run() {
    Report r;
    const MultilinearForm form = input.load(r.config);
    const Regime reg{parse_regime_kind(regime), parse_p_entry(p, form.order())};
    RatioOptions ro;
    ro.ascent = ascent.options;
    ro.ascent.seed = input.seed;
    ro.use_bracket = bracket;
    ro.bracket_resolution = resolution;
    r.config["regime"] = std::string(to_string(reg.kind));
    r.config["p"] = exponents_to_json(reg.p);
    ascent.describe(r.config);
    r.config["bracket"] = bracket;
    r.config["resolution"] = resolution;
    r.config["enumeration_budget"] = ro.enumeration_budget;
    r.result = to_json(ratio(form, reg, ro));
    return r;
  }
};

void describe_climb(const HillClimbOptions& c, Json& config) {
  config["budget"] = c.budget;
  config["step"] = real_to_json(c.initial_step);
  config["decay"] = real_to_json(c.decay);
  config["patience"] = c.patience;
  config["min_step"] = real_to_json(c.min_step);
  config["init"] = std::string(to_string(c.init));
}

struct ClimbFlags {
  HillClimbOptions options;
  std::string init = "gaussian";

  void attach(CLI::App* app) {
    app->add_option("--step", options.initial_step, "initial step, times rms(coeffs)")->capture_default_str();
    app->add_option("--decay", options.decay, "step decay factor")->capture_default_str();
    app->add_option("--patience", options.patience, "rejections before decay")->capture_default_str();
    app->add_option("--min-step", options.min_step, "restart below this step")->capture_default_str();
    app->add_option("--init", init, "initial form distribution")->capture_default_str();
  }

  HillClimbOptions resolved() const {
    HillClimbOptions o = options;
    o.init = parse_distribution(init);
    return o;
  }
};

struct SearchCommand {
  int m = 0;
  int n = 0;
  std::string p;
  std::string regime;
  std::uint64_t seed = 0;
  long long budget = 10000;
  int certify_resolution = 4096;
  bool no_certify = false;
  std::string save_best;
  ClimbFlags climb;
  AscentFlags ascent;

  void attach(CLI::App* app) {
    app->add_option("--m", m, "order m")->required();
    app->add_option("--n", n, "dimension n")->required();
    app->add_option("--p", p, "exponents: '4' or '4:4:5'")->required();
    app->add_option("--regime", regime, "regime name")->required();
    app->add_option("--seed", seed, "master seed")->required();
    app->add_option("--budget", budget, "objective evaluations")->capture_default_str();
    app->add_option("--certify-resolution", certify_resolution, "bracket resolution for certification")
        ->capture_default_str();
    app->add_flag("--no-certify", no_certify, "skip certification of the best form");
    app->add_option("--save-best", save_best, "write the best form to this JSON file");
    climb.attach(app);
    ascent.attach(app);
  }

  Report run() {
    Report r;
    const Regime reg{parse_regime_kind(regime), parse_p_entry(p, m)};
    SearchOptions so;
    so.climb = climb.resolved();
    so.climb.budget = budget;
    so.climb.seed = seed;
    so.ratio.ascent = ascent.options;
    so.certify = !no_certify;
    so.certify_resolution = certify_resolution;
    r.config["m"] = m;
    r.config["n"] = n;
    r.config["p"] = exponents_to_json(reg.p);
    r.config["regime"] = std::string(to_string(reg.kind));
    r.config["seed"] = seed;
    describe_climb(so.climb, r.config);
    ascent.describe(r.config);
    r.config["certify"] = so.certify;
    r.config["certify_resolution"] = certify_resolution;
    const SearchReport s = search_lower_bound(n, reg, so);
    if (!save_best.empty() && s.best_form) write_form_file(save_best, *s.best_form);
    r.result = to_json(s);
    r.result["label"] = s.certified ? "certified" : "heuristic";
    return r;
  }
};

struct SweepCommand {
  std::string m;
  std::string n;
  std::string p;
  std::string regime = "new-isotropic";
  int samples = 200;
  std::uint64_t seed = 0;
  long long budget = 10000;
  std::string dist = "gaussian";
  double tolerance = 1e-9;
  AscentFlags ascent;
  ClimbFlags climb;

  void attach(CLI::App* app) {
    app->add_option("--m", m, "orders, comma-separated")->required();
    app->add_option("--n", n, "dimensions, comma-separated")->required();
    app->add_option("--p", p, "p entries, comma-separated; each '4' or '4:4:5'")->required();
    app->add_option("--regime", regime, "regimes, comma-separated")->capture_default_str();
    app->add_option("--samples", samples, "random forms per cell")->capture_default_str();
    app->add_option("--seed", seed, "master seed")->required();
    app->add_option("--budget", budget, "search evaluations per cell (0 disables)")->capture_default_str();
    app->add_option("--dist", dist, "sample distribution")->capture_default_str();
    app->add_option("--tolerance", tolerance, "PASS iff margin >= -tolerance")->capture_default_str();
    ascent.attach(app);
    climb.attach(app);
  }

  Report run(int threads) {
    Report r;
    std::vector<SweepCell> cells;
    const auto ms = parse_int_list(m, "--m");
    const auto ns = parse_int_list(n, "--n");
    const auto ps = split(p, ',');
    const auto regimes = split(regime, ',');
    for (const auto& name : regimes) {
      const RegimeKind kind = parse_regime_kind(name);
      for (int mm : ms) {
        for (const auto& entry : ps) {
          for (int nn : ns) cells.push_back({nn, {kind, parse_p_entry(entry, mm)}});
        }
      }
    }
    SweepOptions so;
    so.samples = samples;
    so.seed = seed;
    so.distribution = parse_distribution(dist);
    so.search_budget = budget;
    so.search.climb = climb.resolved();
    so.ratio.ascent = ascent.options;
    so.margin_tolerance = tolerance;
    so.threads = threads;

    r.config["m"] = ms;
    r.config["n"] = ns;
    r.config["p"] = ps;
    r.config["regime"] = regimes;
    r.config["samples"] = samples;
    r.config["seed"] = seed;
    r.config["dist"] = std::string(to_string(so.distribution));
    describe_climb(so.search.climb, r.config);
    r.config["budget"] = budget;
    ascent.describe(r.config);
    r.config["tolerance"] = real_to_json(tolerance);
    r.config["threads"] = threads;

    const auto results = sweep_verify(cells, so);
    r.json_lines = true;
    r.result = Json::array();
    Table t{split(kSweepCsvHeader, ','), {}};
    for (const auto& c : results) {
      r.result.push_back(to_json(c));
      t.rows.push_back({std::string(to_string(c.cell.regime.kind)), std::to_string(c.cell.regime.order()),
                        std::to_string(c.cell.n), format_exponent_list(c.cell.regime.p), format_real(c.max_ratio),
                        format_real(c.bound), format_real(c.margin), c.pass ? "PASS" : "FAIL"});
      r.passed = r.passed && c.pass;
    }
    r.table = std::move(t);
    return r;
  }
};

struct VerifyCommand {
  std::string suite = "all";
  int m = 2;
  int n = 3;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string dist = "gaussian";
  std::string p = "4:4";
  std::string q = "inf:inf";
  std::string lambda0 = "4/3";
  std::string s;
  std::string variant = "all";
  int ladder_n = 2;
  long long budget = 2000;
  double tolerance = 1e-6;
  CLI::Option* m_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--suite", suite, "contraction | khinchin | ladder | degenerate | all")->capture_default_str();
    m_opt = app->add_option("--m", m, "order (d for the Rademacher suites)")->capture_default_str();
    app->add_option("--n", n, "dimension")->capture_default_str();
    app->add_option("--samples", samples, "random forms per suite")->capture_default_str();
    app->add_option("--seed", seed, "master seed")->required();
    app->add_option("--dist", dist, "sample distribution")->capture_default_str();
    app->add_option("--p", p, "ladder: source exponents")->capture_default_str();
    app->add_option("--q", q, "ladder: target exponents")->capture_default_str();
    app->add_option("--lambda0", lambda0, "ladder: base exponent")->capture_default_str();
    app->add_option("--s", s, "ladder: inner exponent (default eta1, or eta2 with --variant last)");
    app->add_option("--variant", variant, "ladder: all | last")->capture_default_str();
    app->add_option("--ladder-n", ladder_n, "ladder: dimension")->capture_default_str();
    app->add_option("--budget", budget, "ladder: constant search evaluations")->capture_default_str();
    app->add_option("--tolerance", tolerance, "ladder: relative tolerance")->capture_default_str();
  }

  Json sign_suite(bool khinchin, Distribution d) const {
    Json j;
    j["suite"] = khinchin ? "khinchin" : "contraction";
    double worst = 0.0;
    std::string worst_digest;
    std::string failure;
    for (int i = 0; i < samples; ++i) {
      const MultilinearForm a = random_form(m, n, d, derive_seed(seed, static_cast<std::uint64_t>(i)));
      try {
        const SignAverageReport rep = khinchin ? khinchin_multiple_check(a) : contraction_check(a);
        if (rep.l1_average > 0.0) {
          const double value = khinchin ? rep.l2_norm / (rep.khinchin_constant * rep.l1_average)
                                        : rep.max_abs / rep.l1_average;
          if (value > worst) {
            worst = value;
            worst_digest = form_digest(a);
          }
        }
      } catch (const InvariantError& e) {
        if (failure.empty()) failure = e.what();
      }
    }
    j["samples"] = samples;
    j["worst_ratio"] = real_to_json(worst);
    j["worst_digest"] = worst_digest;
    j["pass"] = failure.empty();
    if (!failure.empty()) j["failure"] = failure;
    return j;
  }

  Json degenerate_suite(Distribution d) const {
    Json j;
    j["suite"] = "degenerate";
    const Regime reg{RegimeKind::Degenerate, ExponentVector(static_cast<std::size_t>(m), Exponent(m))};
    double worst_ratio = 0.0;
    double worst_basis = -std::numeric_limits<double>::infinity();
    bool pass = true;
    for (int i = 0; i < samples; ++i) {
      const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
      const MultilinearForm t = random_form(m, n, d, sample_seed);
      if (t.is_zero()) continue;
      RatioOptions ro;
      ro.ascent.seed = derive_seed(sample_seed, kStreamNorm);
      const double r = ratio(t, reg, ro).ratio;
      worst_ratio = std::max(worst_ratio, r);
      pass = pass && r <= 1.0 + 1e-12;
      // max |coeff| <= ascent estimate at an arbitrary exponent
      Rng rng(derive_seed(sample_seed, kStreamSamples));
      ExponentVector pv;
      for (int k = 0; k < m; ++k) {
        pv.push_back(rng() % 8 == 0 ? Exponent::infinity()
                                    : Exponent(std::uniform_real_distribution<double>(1.1, 10.0)(rng)));
      }
      AscentOptions ao;
      ao.seed = ro.ascent.seed;
      const double gap = t.max_abs() - alternating_ascent(t, pv, ao).value;
      worst_basis = std::max(worst_basis, gap);
      pass = pass && gap <= 0.0;
    }
    j["samples"] = samples;
    j["worst_ratio"] = real_to_json(worst_ratio);
    j["worst_basis_gap"] = real_to_json(worst_basis);
    j["pass"] = pass;
    return j;
  }

  Json ladder_suite() const {
    const int mm = p.find(':') != std::string::npos ? static_cast<int>(split(p, ':').size()) : m;
    const ExponentVector pv = parse_p_entry(p, mm);
    const ExponentVector qv = parse_p_entry(q, mm);
    const double l0 = parse_exponent(lambda0).value();
    LadderCheckOptions o;
    o.n = ladder_n;
    o.samples = samples;
    o.seed = seed;
    o.constant_search_budget = budget;
    o.tolerance = tolerance;
    if (variant == "all") {
      o.variant = LadderVariant::AllSlots;
    } else if (variant == "last") {
      o.variant = LadderVariant::LastSlot;
    } else {
      throw ArgumentError("unknown --variant '" + variant + "' (all | last)");
    }
    double sv = 0.0;
    if (s.empty()) {
      const LadderResult lr = ladder_exponents(pv, qv, l0);
      if (!lr.admissible) {
        throw RegimeError("ladder not admissible: sum_k (1/p_k - 1/q_k) < 1/lambda0 violated");
      }
      sv = o.variant == LadderVariant::AllSlots ? lr.eta1 : lr.eta2;
    } else {
      sv = s == "inf" ? kInfinity : MixedCommand::parse_exponent_or_one(s);
    }
    Json j = to_json(ladder_empirical_check(pv, qv, l0, sv, o));
    j["suite"] = "ladder";
    j["p"] = exponents_to_json(pv);
    j["q"] = exponents_to_json(qv);
    j["lambda0"] = real_to_json(l0);
    j["variant"] = variant;
    j["n"] = ladder_n;
    j["samples"] = samples;
    return j;
  }

  Report run() {
    Report r;
    const Distribution d = parse_distribution(dist);
    std::vector<std::string> suites;
    if (suite == "all") {
      suites = {"contraction", "khinchin", "ladder", "degenerate"};
    } else if (suite == "contraction" || suite == "khinchin" || suite == "ladder" || suite == "degenerate") {
      suites = {suite};
    } else {
      throw ArgumentError("unknown --suite '" + suite + "' (contraction | khinchin | ladder | degenerate | all)");
    }
    r.config["suite"] = suite;
    r.config["m"] = m;
    r.config["n"] = n;
    r.config["samples"] = samples;
    r.config["seed"] = seed;
    r.config["dist"] = std::string(to_string(d));
    r.config["ladder_p"] = p;
    r.config["ladder_q"] = q;
    r.config["lambda0"] = lambda0;
    r.config["s"] = s.empty() ? Json("eta") : Json(s);
    r.config["variant"] = variant;
    r.config["ladder_n"] = ladder_n;
    r.config["budget"] = budget;
    r.config["tolerance"] = real_to_json(tolerance);

    r.result = Json::array();
    Table t{{"suite", "samples", "worst", "pass"}, {}};
    for (const auto& name : suites) {
      Json j;
      std::string worst;
      if (name == "contraction" || name == "khinchin") {
        j = sign_suite(name == "khinchin", d);
        worst = json_scalar_text(j["worst_ratio"]);
      } else if (name == "degenerate") {
        j = degenerate_suite(d);
        worst = json_scalar_text(j["worst_ratio"]);
      } else {
        j = ladder_suite();
        worst = json_scalar_text(j["max_lhs_ratio"]) + " <= " + json_scalar_text(j["estimated_rhs_constant"]);
      }
      const bool pass = j["pass"].get<bool>();
      r.passed = r.passed && pass;
      t.rows.push_back({name, std::to_string(samples), worst, pass ? "PASS" : "FAIL"});
      r.result.push_back(std::move(j));
    }
    r.table = std::move(t);
    return r;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Hardy-Littlewood inequalities for multilinear forms: norms, mixed sums, constants and sweeps",
               "hlineq"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "json | csv | pretty (default: pretty on a terminal, json when piped)");
  int threads = 0;
  CLI::Option* threads_opt = app.add_option("--threads", threads, "worker threads (default: HLINEQ_THREADS or 1)");

  NormCommand norm;
  MixedCommand mixed;
  ExponentsCommand exponents;
  BoundsCommand bounds;
  RatioCommand ratio_cmd;
  SearchCommand search;
  SweepCommand sweep;
  VerifyCommand verify;
  CLI::App* norm_app = app.add_subcommand("norm", "operator norm estimate");
  CLI::App* mixed_app = app.add_subcommand("mixed", "isotropic or partial mixed sums");
  CLI::App* exponents_app = app.add_subcommand("exponents", "regime exponents, constants and ladder");
  CLI::App* bounds_app = app.add_subcommand("bounds", "table of regime constants");
  CLI::App* ratio_app = app.add_subcommand("ratio", "mixed sum over norm for one form");
  CLI::App* search_app = app.add_subcommand("search", "hill-climb for a large ratio");
  CLI::App* sweep_app = app.add_subcommand("sweep", "verify bounds over random and searched forms");
  CLI::App* verify_app = app.add_subcommand("verify", "property suites");
  norm.attach(norm_app);
  mixed.attach(mixed_app);
  exponents.attach(exponents_app);
  bounds.attach(bounds_app);
  ratio_cmd.attach(ratio_app);
  search.attach(search_app);
  sweep.attach(sweep_app);
  verify.attach(verify_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Format fmt = Format::Json;
    if (format.empty()) {
      fmt = env.stdout_is_tty ? Format::Pretty : (sweep_app->parsed() ? Format::Csv : Format::Json);
    } else if (format == "json") {
      fmt = Format::Json;
    } else if (format == "csv") {
      fmt = Format::Csv;
    } else if (format == "pretty") {
      fmt = Format::Pretty;
    } else {
      throw ArgumentError("unknown --format '" + format + "' (json | csv | pretty)");
    }
    auto worker_threads = [&] {
      const int t = threads_opt->count() > 0 ? threads : default_threads(env);
      if (t < 1) throw ArgumentError("--threads must be >= 1");
      return t;
    };

    std::string command;
    Report report;
    if (norm_app->parsed()) {
      command = "norm";
      report = norm.run();
    } else if (mixed_app->parsed()) {
      command = "mixed";
      report = mixed.run();
    } else if (exponents_app->parsed()) {
      command = "exponents";
      report = exponents.run();
    } else if (bounds_app->parsed()) {
      command = "bounds";
      report = bounds.run();
    } else if (ratio_app->parsed()) {
      command = "ratio";
      report = ratio_cmd.run();
    } else if (search_app->parsed()) {
      command = "search";
      report = search.run();
    } else if (sweep_app->parsed()) {
      command = "sweep";
      report = sweep.run(worker_threads());
    } else {
      command = "verify";
      report = verify.run();
    }
    emit(out, command, report, fmt);
    if (!report.passed) {
      err << command << ": verification failed\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const InvariantError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hlineq::cli
