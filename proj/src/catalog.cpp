#include "srsgkit/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "srsgkit/error.hpp"
#include "srsgkit/iso.hpp"
#include "srsgkit/search.hpp"

namespace srsgkit {

namespace {

// Edge with 1-based endpoints, as the constructions are usually written.
struct Listed {
  int u;
  int v;
  char sign;
};

SignedGraph from_listed(int n, std::initializer_list<Listed> listed) {
  std::vector<SignedEdge> edges;
  for (const Listed& e : listed) {
    edges.push_back({e.u - 1, e.v - 1, e.sign == '+' ? Sign::positive : Sign::negative});
  }
  return SignedGraph::from_signed_edges(n, edges);
}

SrsgParams params(int n, int r, std::optional<int> a, std::optional<int> b, std::optional<int> c) {
  return {n, r, a, b, c};
}

// Canonical forms of the search-derived entries, recorded when they were
// first derived. A rebuild that disagrees is a regression.
constexpr std::string_view kPinnedS1_9 =
    "09000001010202020201000201020202020002010202020002010202000201020001010000";
constexpr std::string_view kPinnedS_15 =
    "0f000000000000000001010202020200000000010202000200000102000001020200020002000001000200010202"
    "000001020002020001000201020000000000000200000201000002000002010000000202010000020001000002"
    "010000000000000000000200000200";

SignedGraph s1_12() {
  std::vector<SignedEdge> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      edges.push_back({i, 6 + j, i == j ? Sign::negative : Sign::positive});
    }
  }
  return SignedGraph::from_signed_edges(12, edges);
}

SignedGraph s2_12() {
  std::vector<SignedEdge> edges;
  for (int base : {0, 6}) {
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) edges.push_back({base + i, base + j, Sign::positive});
    }
  }
  for (int i = 0; i < 6; ++i) edges.push_back({i, 6 + i, Sign::negative});
  return SignedGraph::from_signed_edges(12, edges);
}

SignedGraph s3_12() {
  return from_listed(12, {
      {1, 2, '-'},
      {1, 3, '+'}, {1, 4, '+'}, {1, 5, '+'}, {1, 6, '+'}, {1, 7, '+'},
      {2, 8, '+'}, {2, 9, '+'}, {2, 10, '+'}, {2, 11, '+'}, {2, 12, '+'},
      {3, 4, '+'}, {4, 5, '+'}, {5, 6, '+'}, {6, 7, '+'}, {3, 7, '+'},
      {8, 9, '+'}, {9, 10, '+'}, {10, 11, '+'}, {11, 12, '+'}, {8, 12, '+'},
      {3, 8, '-'}, {4, 9, '-'}, {5, 10, '-'}, {6, 11, '-'}, {7, 12, '-'},
      {5, 8, '+'}, {6, 8, '+'}, {6, 9, '+'}, {7, 9, '+'}, {3, 10, '+'},
      {7, 10, '+'}, {3, 11, '+'}, {4, 11, '+'}, {4, 12, '+'}, {5, 12, '+'},
  });
}

// Vertices i, j, k, l, m, s, t1, t2 are 1..8.
SignedGraph s2_8() {
  return from_listed(8, {
      {1, 2, '+'},
      {3, 1, '+'}, {3, 2, '-'}, {4, 1, '+'}, {4, 2, '-'},
      {5, 1, '-'}, {5, 2, '+'}, {6, 1, '-'}, {6, 2, '+'},
      {7, 1, '+'}, {8, 2, '+'},
      {7, 3, '-'}, {7, 4, '-'}, {7, 5, '+'}, {7, 6, '+'},
      {8, 5, '-'}, {8, 6, '-'}, {8, 3, '+'}, {8, 4, '+'},
      {3, 5, '+'}, {3, 6, '+'}, {4, 5, '+'}, {4, 6, '+'},
      {7, 8, '+'},
  });
}

SignedGraph s4_8() {
  return from_listed(8, {
      {1, 2, '-'},
      {3, 1, '+'}, {3, 2, '-'}, {4, 1, '+'}, {4, 2, '-'},
      {5, 1, '-'}, {5, 2, '+'}, {6, 1, '-'}, {6, 2, '+'},
      {7, 1, '+'}, {8, 2, '+'},
      {7, 3, '+'}, {7, 4, '+'}, {7, 5, '-'}, {7, 6, '-'},
      {8, 3, '-'}, {8, 4, '-'}, {8, 5, '+'}, {8, 6, '+'},
      {3, 4, '+'}, {3, 5, '-'}, {4, 6, '-'}, {5, 6, '+'},
      {7, 8, '-'},
  });
}

// The first (8,6,0,0,-2) construction; `swap` exchanges vertices 5 and 6
// to give the second.
SignedGraph g8_variant(bool swap) {
  const auto x = [swap](int v) { return swap && v == 5 ? 6 : (swap && v == 6 ? 5 : v); };
  const std::initializer_list<Listed> listed = {
      {1, 2, '-'}, {1, 3, '+'}, {1, 4, '-'}, {1, 5, '+'}, {1, 6, '+'}, {1, 7, '+'},
      {2, 3, '-'}, {2, 4, '+'}, {2, 5, '+'}, {2, 6, '+'}, {2, 8, '+'},
      {3, 4, '+'}, {3, 7, '+'}, {3, 6, '-'}, {3, 8, '+'},
      {4, 7, '+'}, {4, 8, '+'}, {4, 5, '-'},
      {5, 7, '-'}, {5, 8, '+'}, {5, 6, '+'},
      {6, 7, '+'}, {6, 8, '-'},
      {7, 8, '-'},
  };
  std::vector<SignedEdge> edges;
  for (const Listed& e : listed) {
    edges.push_back({x(e.u) - 1, x(e.v) - 1, e.sign == '+' ? Sign::positive : Sign::negative});
  }
  return SignedGraph::from_signed_edges(8, edges);
}

// K_{3,3,3} with parts {1,2,3}, {4,7,9}, {5,6,8}.
SignedGraph s_9() {
  return from_listed(9, {
      {1, 4, '+'}, {1, 5, '+'}, {1, 6, '-'}, {1, 7, '-'}, {1, 8, '+'}, {1, 9, '+'},
      {2, 4, '-'}, {2, 5, '-'}, {2, 6, '+'}, {2, 7, '+'}, {2, 8, '+'}, {2, 9, '+'},
      {3, 4, '+'}, {3, 5, '+'}, {3, 6, '+'}, {3, 7, '+'}, {3, 8, '-'}, {3, 9, '-'},
      {4, 5, '-'}, {4, 6, '+'}, {4, 8, '+'},
      {7, 5, '+'}, {7, 6, '-'}, {7, 8, '+'},
      {9, 5, '+'}, {9, 6, '+'}, {9, 8, '-'},
  });
}

SignedGraph s1_15() {
  std::vector<SignedEdge> edges;
  for (int base : {0, 5, 10}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) edges.push_back({base + i, base + j, Sign::positive});
    }
  }
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, 5 + i, Sign::negative});
    edges.push_back({i, 10 + i, Sign::negative});
    edges.push_back({5 + i, 10 + i, Sign::negative});
  }
  return SignedGraph::from_signed_edges(15, edges);
}

// 4x4 rook graph: vertex 4*row + col. Rows positive, columns negative.
SignedGraph s_16() {
  std::vector<SignedEdge> edges;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4) edges.push_back({a, b, Sign::positive});
      if (a % 4 == b % 4) edges.push_back({a, b, Sign::negative});
    }
  }
  return SignedGraph::from_signed_edges(16, edges);
}

Graph complete_multipartite(int parts, int size) {
  std::vector<Edge> edges;
  const int n = parts * size;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / size != v / size) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph kneser_6_2() {
  std::vector<VertexMask> subsets;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) subsets.push_back(bit(i) | bit(j));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < 15; ++u) {
    for (int v = u + 1; v < 15; ++v) {
      if ((subsets[u] & subsets[v]) == 0) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(15, edges);
}

Graph paley_13() {
  const std::vector<int> residues = {1, 3, 4, 9, 10, 12};
  std::vector<Edge> edges;
  for (int u = 0; u < 13; ++u) {
    for (int v = u + 1; v < 13; ++v) {
      if (std::find(residues.begin(), residues.end(), v - u) != residues.end()) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(13, edges);
}

Graph cycle_complement(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (v - u != 1 && v - u != n - 1) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph cocktail_party(int pairs) {
  std::vector<Edge> edges;
  const int n = 2 * pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / 2 != v / 2) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConstructionInvalid, what);
}

// The unique SRSG class the search finds on `underlying` with parameters p.
SignedGraph derive_by_search(const std::string& name, const Graph& underlying, const SrsgParams& p,
                             int rho, std::string_view pinned) {
  SearchConfig cfg;
  cfg.rho = rho;
  cfg.param_filter = {p};
  const SearchReport report = search_srsg(underlying, cfg, name);
  require(report.exhaustive && report.hits.size() == 1,
          name + ": search found " + std::to_string(report.hits.size()) + " classes, expected 1");
  const SearchHit& hit = report.hits.front();
  require(pinned.empty() || hit.form.hex() == pinned, name + ": canonical form differs from the pinned value");
  return hit.graph;
}

CatalogEntry make_entry(const std::string& name) {
  CatalogEntry e{name, SignedGraph::from_signed_edges(1, {}), {}, 0, Provenance::ProseConstruction, {}};
  if (name == "S1_12") {
    e.graph = s1_12();
    e.expected_params = params(12, 6, 0, 0, 2);
    e.expected_rho = 4;
    e.underlying = "K66";
  } else if (name == "S2_12") {
    e.graph = s2_12();
    e.expected_params = params(12, 6, 4, 0, -2);
    e.expected_rho = 4;
    e.underlying = "S2_12_underlying";
  } else if (name == "S3_12") {
    e.graph = s3_12();
    e.expected_params = params(12, 6, 2, 0, 0);
    e.expected_rho = 4;
    e.underlying = "S3_12_underlying";
  } else if (name == "S2_8") {
    e.graph = s2_8();
    e.expected_params = params(8, 6, -4, 4, 6);
    e.expected_rho = 2;
    e.underlying = "G8";
  } else if (name == "S3_8") {
    e.graph = g8_variant(false);
    e.expected_params = params(8, 6, 0, 0, -2);
    e.expected_rho = 2;
    e.underlying = "G8";
  } else if (name == "S_9") {
    e.graph = s_9();
    e.expected_params = params(9, 6, -1, 3, -2);
    e.expected_rho = 2;
    e.underlying = "K333";
  } else if (name == "S1_9") {
    e.expected_params = params(9, 6, -1, 0, 1);
    e.expected_rho = 2;
    e.provenance = Provenance::SearchDerived;
    e.underlying = "G9";
    e.graph = derive_by_search(name, build_underlying("G9"), e.expected_params, 2, kPinnedS1_9);
  } else if (name == "S_15") {
    e.expected_params = params(15, 6, 1, 1, -1);
    e.expected_rho = 2;
    e.provenance = Provenance::SearchDerived;
    e.underlying = "GQ22";
    e.graph = derive_by_search(name, build_underlying("GQ22"), e.expected_params, 2, kPinnedS_15);
  } else if (name == "S1_15") {
    e.graph = s1_15();
    e.expected_params = params(15, 6, 3, 1, -2);
    e.expected_rho = 2;
    e.underlying = "S1_15_underlying";
  } else if (name == "S4_8") {
    e.graph = s4_8();
    e.expected_params = params(8, 6, 4, -4, -6);
    e.expected_rho = 0;
    e.underlying = "G8";
  } else if (name == "S_16") {
    e.graph = s_16();
    e.expected_params = params(16, 6, 2, 2, -2);
    e.expected_rho = 0;
    e.underlying = "S16_underlying";
  } else {
    throw Error(ErrorKind::UnknownName, "no catalog entry named '" + name + "'");
  }
  const auto got = extract_params(e.graph);
  require(got && *got == e.expected_params,
          name + ": parameters " + (got ? to_string(*got) : std::string("none")) + " differ from " +
              to_string(e.expected_params));
  const auto rho = common_net_degree(e.graph);
  require(rho && *rho == e.expected_rho, name + ": net-degree differs from the expected value");
  return e;
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::SearchDerived ? "SearchDerived" : "ProseConstruction";
}

const std::vector<std::string>& list_names() {
  static const std::vector<std::string> names = {"S1_12", "S2_12", "S3_12", "S2_8",
                                                 "S3_8",  "S_9",   "S1_9",  "S_15",
                                                 "S1_15", "S4_8",  "S_16"};
  return names;
}

const CatalogEntry& build(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, CatalogEntry> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_entry(name)).first;
  return it->second;
}

const std::vector<std::string>& list_underlying_names() {
  static const std::vector<std::string> names = {
      "G8",      "G9", "K333", "K66", "GQ22", "Paley13", "S2_12_underlying", "S3_12_underlying",
      "S1_15_underlying", "S16_underlying"};
  return names;
}

Graph build_underlying(const std::string& name) {
  if (name == "G8") return cocktail_party(4);
  if (name == "G9") return cycle_complement(9);
  if (name == "K333") return complete_multipartite(3, 3);
  if (name == "K66") return complete_multipartite(2, 6);
  if (name == "GQ22") return kneser_6_2();
  if (name == "Paley13") return paley_13();
  if (name == "S2_12_underlying") return s2_12().underlying();
  if (name == "S3_12_underlying") return s3_12().underlying();
  if (name == "S1_15_underlying") return s1_15().underlying();
  if (name == "S16_underlying") return s_16().underlying();
  throw Error(ErrorKind::UnknownName, "no underlying graph named '" + name + "'");
}

SignedGraph build_variant(const std::string& name) {
  if (name == "G1_8") return g8_variant(false);
  if (name == "G2_8") return g8_variant(true);
  throw Error(ErrorKind::UnknownName, "no variant named '" + name + "'");
}

}  // namespace srsgkit
