#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srsgkit/catalog.hpp"
#include "srsgkit/error.hpp"
#include "srsgkit/io.hpp"
#include "srsgkit/search.hpp"

using namespace srsgkit;

namespace {

const std::string kFixtures = SRSGKIT_FIXTURES_DIR;

SearchReport catalog_search(const std::string& file, int rho) {
  const auto graphs = read_graph6_file(kFixtures + "/" + file);
  std::vector<NamedGraph> named;
  for (std::size_t i = 0; i < graphs.size(); ++i) named.push_back({file + ":" + std::to_string(i + 1), graphs[i]});
  SearchConfig cfg;
  cfg.rho = rho;
  return search_graphs(named, cfg);
}

std::set<CanonicalForm> forms(const SearchReport& r) {
  std::set<CanonicalForm> out;
  for (const SearchHit& h : r.hits) out.insert(h.form);
  return out;
}

CanonicalForm named_form(const std::string& name) { return canonical_form(build(name).graph); }
CanonicalForm negated_form(const std::string& name) { return canonical_form(negation(build(name).graph)); }

void check_hit_invariants(const SearchHit& hit, int rho) {
  const SignedGraph& g = hit.graph;
  CHECK(common_net_degree(g) == rho);
  CHECK(extract_params(g) == hit.params);
  CHECK(oracle::params(g) == hit.params);
  CHECK(satisfies_square_identity(g, hit.params));
  CHECK(net_degree_identity_holds(hit.params, rho));
  CHECK(canonical_form(g) == hit.form);
  CHECK(classify(hit.params) == hit.klass);
  const bool parity_class =
      hit.klass == SrsgClass::C1 || hit.klass == SrsgClass::C4 || hit.klass == SrsgClass::C5;
  if (parity_class && !g.complete()) CHECK(negative_walk_parity(g).ok);
  if (rho == 4) {
    const TriangleCensus census = triangle_census(g);
    CHECK(census.counts[1] == 0);
    CHECK(census.counts[3] == 0);
    CHECK(hit.params.b == 0);
    CHECK(negative_subgraph(g).underlying().regular_degree() == 1);
  }
}

void check_pairwise_distinct(const SearchReport& r) {
  for (std::size_t i = 0; i < r.hits.size(); ++i)
    for (std::size_t j = i + 1; j < r.hits.size(); ++j)
      CHECK_FALSE(are_isomorphic(r.hits[i].graph, r.hits[j].graph).isomorphic);
}

}  // namespace

TEST_CASE("regular spanning subgraph enumeration") {
  const auto count = [](const Graph& g, int k) {
    return enumerate_negative_subgraphs(g, k, [](const std::vector<Edge>&) { return true; });
  };
  CHECK(count(Graph::complete(4), 1) == 3);
  CHECK(count(build_underlying("K66"), 1) == 720);
  const Graph g8 = build_underlying("G8");
  const std::uint64_t n3 = count(g8, 3);
  CHECK(n3 == 2648);
  CHECK(n3 == oracle::regular_subgraph_count(g8, 3));
  CHECK(count(g8, 0) == 1);
  CHECK(count(g8, 6) == 1);

  std::set<std::vector<Edge>> distinct;
  std::uint64_t visited = enumerate_negative_subgraphs(g8, 2, [&](const std::vector<Edge>& edges) {
    std::vector<int> degree(8, 0);
    for (const Edge& e : edges) {
      CHECK(g8.adjacent(e.u, e.v));
      ++degree[e.u];
      ++degree[e.v];
    }
    for (int d : degree) CHECK(d == 2);
    distinct.insert(edges);
    return true;
  });
  CHECK(visited == distinct.size());
  CHECK(visited == oracle::regular_subgraph_count(g8, 2));

  std::uint64_t seen = 0;
  CHECK(enumerate_negative_subgraphs(g8, 3, [&](const std::vector<Edge>&) { return ++seen < 5; }) == 5);

  const std::vector<Edge> path = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(count(Graph::from_edges(3, path), 1), Error);
  CHECK_THROWS_AS(count(g8, 7), Error);
}

TEST_CASE("enumeration on random regular graphs matches brute force") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 12; ++trial) {
    const int r = 2 + trial % 3;
    const int n = r == 3 ? 8 : (r == 2 ? 9 : 8);
    const auto g = oracle::random_regular(n, r, rng, false);
    REQUIRE(g.has_value());
    for (int k = 0; k <= r; ++k) {
      const auto fast = enumerate_negative_subgraphs(*g, k, [](const std::vector<Edge>&) { return true; });
      CHECK(fast == oracle::regular_subgraph_count(*g, k));
    }
  }
}

TEST_CASE("single underlying graphs") {
  SearchConfig cfg;
  cfg.rho = 0;
  const SearchReport g8 = search_srsg(build_underlying("G8"), cfg, "G8");
  CHECK(forms(g8) == std::set{named_form("S4_8"), negated_form("S4_8")});
  CHECK(g8.exhaustive);
  for (const auto& hit : g8.hits) check_hit_invariants(hit, 0);

  cfg.rho = 2;
  const SearchReport gq = search_srsg(build_underlying("GQ22"), cfg);
  CHECK(forms(gq) == std::set{named_form("S_15")});

  cfg.param_filter = {{13, 6, 2, -2, -1}};
  CHECK(search_srsg(build_underlying("Paley13"), cfg).hits.empty());
  cfg.param_filter.clear();

  cfg.rho = 4;
  const SearchReport k66 = search_srsg(build_underlying("K66"), cfg);
  CHECK(forms(k66) == std::set{named_form("S1_12")});
  for (const auto& hit : k66.hits) check_hit_invariants(hit, 4);
  CHECK(forms(search_srsg(build_underlying("S2_12_underlying"), cfg)) == std::set{named_form("S2_12")});
  CHECK(forms(search_srsg(build_underlying("S3_12_underlying"), cfg)) == std::set{named_form("S3_12")});
}

TEST_CASE("dedupe policies") {
  SearchConfig cfg;
  cfg.rho = 2;
  cfg.dedupe = Dedupe::None;
  const SearchReport raw = search_srsg(build_underlying("GQ22"), cfg);
  CHECK(raw.hits.size() == 6);
  std::set<CanonicalForm> distinct;
  for (const SearchHit& h : raw.hits) distinct.insert(h.form);
  CHECK(distinct.size() == 1);

  cfg.rho = 0;
  cfg.dedupe = Dedupe::UpToIsoAndNegation;
  const SearchReport pm = search_srsg(build_underlying("G8"), cfg);
  REQUIRE(pm.hits.size() == 1);
  cfg.dedupe = Dedupe::UpToIso;
  CHECK(search_srsg(build_underlying("G8"), cfg).hits.size() == 2);
}

TEST_CASE("catalog sweeps") {
  const SearchReport o8 = catalog_search("order8.g6", 2);
  CHECK(forms(o8) == std::set{named_form("S2_8"), named_form("S3_8")});
  const SearchReport o9 = catalog_search("order9.g6", 2);
  CHECK(forms(o9) == std::set{named_form("S_9"), named_form("S1_9")});
  check_pairwise_distinct(o9);
  for (const auto& hit : o9.hits) check_hit_invariants(hit, 2);
  for (const int rho : {0, 4}) {
    CHECK(catalog_search("order9.g6", rho).hits.empty());
    CHECK(catalog_search("order10.g6", rho).hits.empty());
  }
  CHECK(catalog_search("order8.g6", 4).hits.empty());
}

TEST_CASE("order 10 at net-degree 2 holds a (10,6,-1,1,0) signing") {
  // The complement of the Petersen graph carries a signing with A^2 + A - 6I = 0.
  const SearchReport o10 = catalog_search("order10.g6", 2);
  REQUIRE(o10.hits.size() == 1);
  const SearchHit& hit = o10.hits.front();
  CHECK(hit.params == SrsgParams{10, 6, -1, 1, 0});
  CHECK(oracle::params(hit.graph) == hit.params);
  CHECK(satisfies_quadratic(hit.graph, 1, -6));
  const SignedGraph complement = SignedGraph::all_positive(hit.graph.underlying().complement());
  CHECK(are_isomorphic(complement, oracle::petersen_signed()).isomorphic);
}

TEST_CASE("catalog directory sweep records every graph") {
  SearchConfig cfg;
  cfg.rho = 4;
  const SearchReport r = search_catalog(kFixtures, cfg);
  std::size_t searched = 0;
  for (const GraphOutcome& g : r.graphs) searched += g.status == "searched";
  CHECK(searched == r.graphs.size());
  CHECK(forms(r) == std::set{named_form("S1_12"), named_form("S2_12"), named_form("S3_12")});
}

TEST_CASE("worker count does not change the report") {
  SearchConfig cfg;
  cfg.rho = 2;
  const Graph g = build_underlying("GQ22");
  const SearchReport base = search_srsg(g, cfg);
  for (const int jobs : {2, 3, 8}) {
    for (const int depth : {0, 4, 10, 20}) {
      cfg.jobs = jobs;
      cfg.split_depth = depth;
      const SearchReport other = search_srsg(g, cfg);
      CHECK(other.stats.nodes == base.stats.nodes);
      CHECK(other.stats.raw_hits == base.stats.raw_hits);
      REQUIRE(other.hits.size() == base.hits.size());
      for (std::size_t i = 0; i < base.hits.size(); ++i) {
        CHECK(other.hits[i].form == base.hits[i].form);
        CHECK(other.hits[i].graph == base.hits[i].graph);
      }
    }
  }
}

TEST_CASE("entry pruning does not change hits") {
  SearchConfig cfg;
  cfg.rho = 0;
  const SearchReport pruned = search_srsg(build_underlying("G8"), cfg);
  cfg.entry_pruning = false;
  const SearchReport plain = search_srsg(build_underlying("G8"), cfg);
  CHECK(forms(pruned) == forms(plain));
  CHECK(pruned.stats.raw_hits == plain.stats.raw_hits);
  CHECK(pruned.stats.nodes <= plain.stats.nodes);
}

TEST_CASE("search agrees with a full signing scan on small graphs") {
  std::mt19937_64 rng(555);
  int compared = 0;
  while (compared < 12) {
    const int r = 3 + static_cast<int>(rng() % 2);
    const int n = r == 3 ? 6 + 2 * static_cast<int>(rng() % 2) : 6 + static_cast<int>(rng() % 3);
    const auto g = oracle::random_regular(n, r, rng, true);
    if (!g || g->edge_count() > 16) continue;
    ++compared;
    for (int rho = -r; rho <= r; rho += 2) {
      SearchConfig cfg;
      cfg.rho = rho;
      cfg.dedupe = Dedupe::None;
      const SearchReport report = search_srsg(*g, cfg);
      std::set<std::vector<Edge>> got;
      for (const SearchHit& h : report.hits) got.insert(h.graph.negative_edges());
      std::set<std::vector<Edge>> want;
      for (const auto& h : oracle::scan_signings(*g, rho)) want.insert(h.negatives);
      CHECK(got == want);
    }
  }
}

TEST_CASE("search errors and budgets") {
  SearchConfig cfg;
  cfg.rho = 1;
  CHECK_THROWS_AS(search_srsg(build_underlying("G8"), cfg), Error);
  cfg.rho = 0;
  const std::vector<Edge> path = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(search_srsg(Graph::from_edges(3, path), cfg), Error);

  // Two disjoint 4-cycles.
  const std::vector<Edge> cycles = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}};
  const Graph split = Graph::from_edges(8, cycles);
  try {
    search_srsg(split, cfg);
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConnected);
  }
  cfg.require_connected = false;
  CHECK_NOTHROW(search_srsg(split, cfg));
  const SearchReport skipped = search_graphs({{"split", split}}, [] {
    SearchConfig c;
    c.rho = 0;
    return c;
  }());
  REQUIRE(skipped.graphs.size() == 1);
  CHECK(skipped.graphs.front().status == "skipped-disconnected");

  SearchConfig limited;
  limited.rho = 0;
  limited.node_budget = 50;
  const SearchReport partial = search_srsg(build_underlying("G8"), limited);
  CHECK_FALSE(partial.exhaustive);
  CHECK(partial.stats.nodes <= 50 + 64);
}
