#pragma once

#include <string>

#include <json.hpp>

#include "polyodds/montecarlo.hpp"
#include "polyodds/oracle.hpp"
#include "polyodds/polygon.hpp"
#include "polyodds/rational.hpp"

namespace polyodds {

using Json = nlohmann::ordered_json;

// One tool invocation's machine-readable outcome. JSON schema (stable keys):
//   {"command": ..., "params": {...}, "result": {...}, "elapsed_ms": ...}
// Result objects are distinguished by their keys: an exact value carries
// "rational"/"decimal", a simulation carries trials/successes/estimate/
// ci_low/ci_high/seed/shards, an enumeration carries total/good, a polygon
// carries "vertices", tabular output carries "rows".
struct RunReport {
    std::string command;
    Json params = Json::object();
    Json result = Json::object();
    double elapsed_ms = 0.0;

    Json to_json() const;
    static RunReport from_json(const Json& j);

    // Header row plus data rows, RFC 4180 quoting. Tabular results emit one
    // row per entry; scalar results emit a single flattened row.
    std::string to_csv() const;

    std::string to_text() const;
};

std::string csv_escape(const std::string& field);

Json exact_result(const BigRat& value);
Json count_result(const ExactCount& count);
Json estimate_result(const SimEstimate& est);
Json realization_result(const PolygonRealization& poly);

}  // namespace polyodds
