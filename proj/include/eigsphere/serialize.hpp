#pragma once

#include <json.hpp>

#include "eigsphere/eigenfunction.hpp"
#include "eigsphere/geometry.hpp"
#include "eigsphere/minimality.hpp"
#include "eigsphere/search.hpp"

namespace eigsphere {

// JSON encodings used by the CLI reports. Exact rationals are strings in
// the parser's syntax ("-8", "1/2"); polynomials are rendered text.

nlohmann::json to_json(const EigenReport& r);
nlohmann::json to_json(const EigenfamilyReport& r);
nlohmann::json to_json(const MinimalityVerdict& v);
nlohmann::json to_json(const NumericEvidence& e);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const std::vector<SearchResult>& rs);
nlohmann::json to_json(const ConformalityReport& r);
/// Metadata only (counts, tolerances, seed); coordinates go to CSV.
nlohmann::json cloud_summary(const PointCloud& pc);

}  // namespace eigsphere
