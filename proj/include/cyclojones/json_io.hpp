#pragma once

// JSON forms of polynomials, arrow-diagram summaries and table rows.
//
//   polynomial: {"variable": "t"|"A", "terms": [[exponent, "coefficient"], ...]}
//               exponents strictly ascending, coefficients as decimal strings
//   summary:    {"bare_writhe": int, "arrows": [[sign, winding], ...]}
//   table row:  {"n", "k", "family", "m", "polynomial", "crossing_bound", "jones"}

#include <json.hpp>

#include "cyclojones/diagram.hpp"
#include "cyclojones/laurent.hpp"
#include "cyclojones/wnk.hpp"

namespace cyclojones {

nlohmann::json poly_to_json(const LaurentPoly& p);
// Throws ParseError on schema violations.
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const ArrowDiagramSummary& s);
ArrowDiagramSummary summary_from_json(const nlohmann::json& j);

nlohmann::json table_row_to_json(const TableRow& row);

}  // namespace cyclojones
