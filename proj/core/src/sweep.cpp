#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "hlineq/errors.hpp"
#include "hlineq/search.hpp"

namespace hlineq {

namespace {

std::string describe(const SweepCell& cell, std::size_t index) {
  std::string p;
  for (const Exponent& e : cell.regime.p) p += (p.empty() ? "" : ",") + format_exponent(e.value());
  return "sweep cell " + std::to_string(index) + " (regime " + std::string(to_string(cell.regime.kind)) +
         ", m = " + std::to_string(cell.regime.order()) + ", n = " + std::to_string(cell.n) + ", p = (" + p + ")): ";
}

CellResult run_cell(const SweepCell& cell, std::uint64_t cell_seed, const SweepOptions& options) {
  require_applicable(cell.regime);
  const int m = cell.regime.order();

  CellResult out;
  out.cell = cell;
  out.bound = regime_constant(cell.regime);
  bool have = false;
  const std::uint64_t norm_seed = derive_seed(cell_seed, kStreamNorm);
  for (int s = 0; s < options.samples; ++s) {
    const MultilinearForm form = random_form(m, cell.n, options.distribution, derive_seed(cell_seed, s));
    if (form.is_zero()) continue;
    RatioOptions r = options.ratio;
    r.ascent.seed = derive_seed(norm_seed, static_cast<std::uint64_t>(s));
    RatioReport report = ratio(form, cell.regime, r);
    ++out.samples;
    if (!have || report.ratio > out.worst.ratio) {
      have = true;
      out.worst = std::move(report);
    }
  }

  if (options.search_budget > 0) {
    SearchOptions so = options.search;
    so.climb.budget = options.search_budget;
    so.climb.seed = derive_seed(cell_seed, kStreamSearch);
    so.ratio = options.ratio;
    so.certify = false;  // sweeps check upper bounds only
    SearchReport search = search_lower_bound(cell.n, cell.regime, so);
    if (!have || search.best.ratio > out.worst.ratio) {
      have = true;
      out.worst = search.best;
    }
    out.search = std::move(search);
  }

  if (!have) throw DegenerateInputError("no sampled form and no search run");
  out.max_ratio = out.worst.ratio;
  out.margin = out.bound - out.max_ratio;
  out.pass = out.margin >= -options.margin_tolerance;
  return out;
}

[[noreturn]] void rethrow_with_cell(const std::string& prefix) {
  try {
    throw;
  } catch (const RegimeError& e) {
    throw RegimeError(prefix + e.what());
  } catch (const CapacityError& e) {
    throw CapacityError(prefix + e.what());
  } catch (const ArgumentError& e) {
    throw ArgumentError(prefix + e.what());
  } catch (const DegenerateInputError& e) {
    throw DegenerateInputError(prefix + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  }
}

}  // namespace

std::vector<CellResult> sweep_verify(const std::vector<SweepCell>& cells, const SweepOptions& options) {
  if (options.samples < 0) throw ArgumentError("samples must be >= 0");
  std::vector<CellResult> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());

  auto work = [&](std::size_t i) {
    try {
      try {
        results[i] = run_cell(cells[i], derive_seed(options.seed, i), options);
      } catch (const Error&) {
        rethrow_with_cell(describe(cells[i], i));
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(cells.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace hlineq
