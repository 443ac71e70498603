#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#ifdef HLINEQ_VENDORED_JSON
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

#include "hlineq/form.hpp"
#include "hlineq/ladder.hpp"
#include "hlineq/lp.hpp"
#include "hlineq/opnorm.hpp"
#include "hlineq/rademacher.hpp"
#include "hlineq/regime.hpp"
#include "hlineq/search.hpp"

namespace hlineq {

/// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Form interchange format: {"m": int, "n": int, "coeffs": [real, ...]} with
/// coefficients in row-major order (j1 slowest). Doubles are written in
/// shortest round-trip form, so a write/read cycle is bit exact.
Json form_to_json(const MultilinearForm& form);
/// Throws ArgumentError on missing fields, wrong types or a bad coefficient count.
MultilinearForm form_from_json(const Json& j);
MultilinearForm read_form_file(const std::string& path);
void write_form_file(const std::string& path, const MultilinearForm& form);

/// Exponents and other reals: a number, or the string "inf". NaN becomes null.
Json real_to_json(double x);
Json exponents_to_json(std::span<const Exponent> p);
Exponent exponent_from_json(const Json& j);

Json to_json(const NormEstimate& e);
Json to_json(const RegimeExponents& e);
Json to_json(const RatioReport& r);
Json to_json(const SearchReport& r);
Json to_json(const CellResult& c);
Json to_json(const SignAverageReport& r);
Json to_json(const LadderResult& r);
Json to_json(const LadderCheckReport& r);

/// Shortest round-trip decimal; "inf" / "-inf" / "nan" for non-finite values.
std::string format_real(double x);
/// Exponents joined with ':' so the list stays one CSV field.
std::string format_exponent_list(std::span<const Exponent> p);

/// CSV summary of a sweep. Columns: regime,m,n,p,max_ratio,bound,margin,pass
inline constexpr const char* kSweepCsvHeader = "regime,m,n,p,max_ratio,bound,margin,pass";
void write_sweep_csv(std::ostream& os, const std::vector<CellResult>& cells);

}  // namespace hlineq
