#pragma once

#include <string>
#include <vector>

#include "srsgkit/graph.hpp"
#include "srsgkit/strong_regularity.hpp"

namespace srsgkit {

enum class Provenance { ProseConstruction, SearchDerived };

std::string_view to_string(Provenance p);

struct CatalogEntry {
  std::string name;
  SignedGraph graph;
  SrsgParams expected_params;
  int expected_rho = 0;
  Provenance provenance = Provenance::ProseConstruction;
  // Name of the underlying graph in build_underlying, when it has one.
  std::string underlying;
};

// The eleven named 6-regular SRSGs in a fixed order: net-degree 4 first,
// then 2, then 0.
const std::vector<std::string>& list_names();

// Built on first use and cached; safe under concurrent calls. Throws
// UnknownName, and ConstructionInvalid if an entry fails its own check.
const CatalogEntry& build(const std::string& name);

// G8, G9, K333, K66, GQ22, Paley13, S2_12_underlying, S3_12_underlying,
// S1_15_underlying, S16_underlying.
const std::vector<std::string>& list_underlying_names();
// Throws UnknownName.
Graph build_underlying(const std::string& name);

// Two labelled constructions of the (8,6,0,0,-2) graph that differ by
// swapping two vertices: "G1_8" (the catalog S3_8) and "G2_8".
SignedGraph build_variant(const std::string& name);

}  // namespace srsgkit
