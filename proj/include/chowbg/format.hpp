#pragma once

#include <string>

#include <json.hpp>

#include "chowbg/chow_table.hpp"

namespace chowbg {

inline constexpr int kJsonSchemaVersion = 1;

/// Schema 1:
///   { "schema": 1, "group": text, "field": {"char": l, "name": text},
///     "localization": {"kind": "integral" | "at-prime" | "mod-p",
///                      "prime": p},
///     "bound": D,
///     "degrees": [ { "degree": i, "free_rank": r,
///                    "torsion": [ {"prime", "exponent", "multiplicity"} ] } ],
///     "provenance": [ "exact" | "upper-bound" | "extrapolated-field" ] }
nlohmann::ordered_json to_json(const ChowTable& table);
ChowTable table_from_json(const nlohmann::json& j);

/// Plain-text table: a header block followed by one line per degree.
std::string render_text(const ChowTable& table);

} // namespace chowbg
