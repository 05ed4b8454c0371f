#pragma once
// reports.hpp - stable CSV/JSON serialization of report rows.
//
// Field names and order are part of the CLI contract: valuation rows are
// (n, xi, predicted, match), block rows are (p, k, observed, predicted,
// match, complete), census rows are (shape, t, r0). Unbounded values are
// decimal strings in JSON; bounded counters are plain integers.

#include <string>
#include <vector>

#include <json.hpp>

#include "wcat/trees.hpp"
#include "wcat/valuation.hpp"

namespace wcat {

using json = nlohmann::ordered_json;

std::string to_csv(const std::vector<ValuationReport>& rows);
std::string to_csv(const std::vector<ZeroBlockReport>& rows);
std::string census_to_csv(const OrbitCensus& census);

json to_json(const std::vector<ValuationReport>& rows);
json to_json(const std::vector<ZeroBlockReport>& rows);
json census_records_to_json(const OrbitCensus& census);

json to_json(const MembershipVerdict& verdict);

}  // namespace wcat
