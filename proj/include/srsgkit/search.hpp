#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srsgkit/graph.hpp"
#include "srsgkit/iso.hpp"
#include "srsgkit/strong_regularity.hpp"

namespace srsgkit {

// Calls `visit` once per k-regular spanning subgraph of the r-regular graph
// g, passing its edges (u < v, sorted). Returning false stops the walk.
// Returns the number of subgraphs visited. Throws DegreeMismatch when g is
// irregular or k is outside 0..r.
std::uint64_t enumerate_negative_subgraphs(const Graph& g, int k,
                                           const std::function<bool(const std::vector<Edge>&)>& visit);

enum class Dedupe { None, UpToIso, UpToIsoAndNegation };

struct SearchConfig {
  int rho = 0;
  // Accepted parameter tuples; empty accepts every SRSG.
  std::vector<SrsgParams> param_filter;
  Dedupe dedupe = Dedupe::UpToIso;
  bool require_connected = true;
  std::optional<std::uint64_t> node_budget;
  // Prune on partially decided A^2 entries.
  bool entry_pruning = true;
  int jobs = 1;
  // Depth of the top-of-tree split into independent tasks.
  int split_depth = 10;
};

struct SearchHit {
  SignedGraph graph;
  SrsgParams params;
  SrsgClass klass = SrsgClass::NotSRSG;
  CanonicalForm form;
  std::string source;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned_degree = 0;
  std::uint64_t pruned_entry = 0;
  std::uint64_t leaves_rejected = 0;
  std::uint64_t raw_hits = 0;
  double wall_seconds = 0.0;
};

struct GraphOutcome {
  std::string name;
  // "searched", "skipped-disconnected" or "skipped-degree".
  std::string status;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::size_t classes = 0;
};

struct SearchReport {
  std::vector<SearchHit> hits;
  SearchStats stats;
  bool exhaustive = true;
  std::vector<GraphOutcome> graphs;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// All signings of one underlying graph with constant net-degree cfg.rho
// whose A^2 classes are constant. Hits are sorted by canonical form.
// Throws DegreeMismatch (irregular graph or impossible rho) and
// NotConnected when cfg.require_connected is set.
SearchReport search_srsg(const Graph& g, const SearchConfig& cfg, const std::string& name = "input");

// Searches every graph and deduplicates across them. Graphs that are
// disconnected (under require_connected) or whose degree cannot carry
// cfg.rho are skipped and recorded.
SearchReport search_graphs(const std::vector<NamedGraph>& graphs, const SearchConfig& cfg);

// Runs search_graphs over every *.g6 file in `dir`, in file-name order.
// Throws ParseError (with file and line) and Io.
SearchReport search_catalog(const std::string& dir, const SearchConfig& cfg);

}  // namespace srsgkit
