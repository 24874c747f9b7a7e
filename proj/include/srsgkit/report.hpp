#pragma once

#include <json.hpp>

#include "srsgkit/catalog.hpp"
#include "srsgkit/error.hpp"
#include "srsgkit/params.hpp"
#include "srsgkit/reproduction.hpp"
#include "srsgkit/search.hpp"

namespace srsgkit {

// JSON views of library results. Objects have sorted keys and lists keep
// the library's deterministic order, so dumps are reproducible.

nlohmann::json to_json(const SrsgParams& p);
nlohmann::json to_json(const std::vector<ParamCandidate>& candidates);
nlohmann::json signed_edges_json(const SignedGraph& g);

// Degrees, net-degrees, parameters, class, balance, triangle census and
// canonical form of one graph.
nlohmann::json check_json(const SignedGraph& g);

// Wall time is left out unless `timing` is set, keeping output stable.
nlohmann::json to_json(const SearchReport& report, bool timing = false);

nlohmann::json to_json(const CatalogEntry& entry);
nlohmann::json to_json(const ClassificationSummary& summary);

// {"error": {"kind", "message", "line"?, "source"?}}
nlohmann::json error_json(const Error& e);

}  // namespace srsgkit
