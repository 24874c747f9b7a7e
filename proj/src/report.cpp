#include "srsgkit/report.hpp"

#include "srsgkit/iso.hpp"
#include "srsgkit/strong_regularity.hpp"

namespace srsgkit {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

std::string_view kind_name(CandidateKind k) {
  switch (k) {
    case CandidateKind::Concrete: return "concrete";
    case CandidateKind::FreeFamily: return "free-family";
    case CandidateKind::FreeInstance: return "free-instance";
  }
  return "concrete";
}

}  // namespace

json to_json(const SrsgParams& p) {
  return {{"n", p.n}, {"r", p.r}, {"a", optional_int(p.a)}, {"b", optional_int(p.b)},
          {"c", optional_int(p.c)}};
}

json to_json(const std::vector<ParamCandidate>& candidates) {
  json out = json::array();
  for (const ParamCandidate& c : candidates) {
    json item = to_json(c.params);
    item["kind"] = kind_name(c.kind);
    if (c.kind == CandidateKind::FreeFamily) item["n"] = "free";
    out.push_back(std::move(item));
  }
  return out;
}

json signed_edges_json(const SignedGraph& g) {
  json out = json::array();
  for (const SignedEdge& e : g.edges()) {
    out.push_back({e.u, e.v, e.sign == Sign::positive ? "+" : "-"});
  }
  return out;
}

json check_json(const SignedGraph& g) {
  json out;
  out["n"] = g.order();
  const Graph underlying = g.underlying();
  if (const auto r = underlying.regular_degree()) {
    out["r"] = *r;
  } else {
    json degrees = json::array();
    for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
    out["degrees"] = std::move(degrees);
  }
  if (const auto rho = common_net_degree(g)) {
    out["rho"] = *rho;
  } else {
    json nets = json::array();
    for (int v = 0; v < g.order(); ++v) nets.push_back(net_degree(g, v));
    out["net_degrees"] = std::move(nets);
  }
  const auto params = extract_params(g);
  out["params"] = params ? to_json(*params) : json(nullptr);
  out["class"] = to_string(params ? classify(*params) : SrsgClass::NotSRSG);
  out["balanced"] = is_balanced(g);
  const TriangleCensus census = triangle_census(g);
  out["triangle_census"] = census.counts;
  out["negative_walk_parity"] = negative_walk_parity(g).ok;
  out["canonical_form"] = canonical_form(g).hex();
  return out;
}

json to_json(const SearchReport& report, bool timing) {
  json hits = json::array();
  for (const SearchHit& hit : report.hits) {
    hits.push_back({{"canonical_form", hit.form.hex()},
                    {"class", to_string(hit.klass)},
                    {"params", to_json(hit.params)},
                    {"source", hit.source},
                    {"edges", signed_edges_json(hit.graph)}});
  }
  json stats = {{"nodes", report.stats.nodes},
                {"leaves", report.stats.leaves},
                {"pruned_degree", report.stats.pruned_degree},
                {"pruned_entry", report.stats.pruned_entry},
                {"leaves_rejected", report.stats.leaves_rejected},
                {"raw_hits", report.stats.raw_hits}};
  if (timing) stats["wall_seconds"] = report.stats.wall_seconds;
  json graphs = json::array();
  for (const GraphOutcome& g : report.graphs) {
    graphs.push_back({{"name", g.name},
                      {"status", g.status},
                      {"exhaustive", g.exhaustive},
                      {"nodes", g.nodes},
                      {"classes", g.classes}});
  }
  return {{"hits", std::move(hits)},
          {"stats", std::move(stats)},
          {"exhaustive", report.exhaustive},
          {"graphs", std::move(graphs)}};
}

json to_json(const CatalogEntry& entry) {
  return {{"name", entry.name},
          {"params", to_json(entry.expected_params)},
          {"rho", entry.expected_rho},
          {"class", to_string(classify(entry.expected_params))},
          {"provenance", to_string(entry.provenance)},
          {"underlying", entry.underlying},
          {"canonical_form", canonical_form(entry.graph).hex()}};
}

json to_json(const ClassificationSummary& summary) {
  json theorems = json::array();
  for (const TheoremCheck& t : summary.theorems) {
    json found = json::array();
    for (const FoundClass& f : t.found) {
      found.push_back({{"name", f.name.empty() ? json(nullptr) : json(f.name)},
                       {"params", to_json(f.params)},
                       {"canonical_form", f.form_hex},
                       {"source", f.source}});
    }
    theorems.push_back({{"rho", t.rho},
                        {"expected_count", t.expected.size()},
                        {"expected", t.expected},
                        {"found_count", t.found.size()},
                        {"found", std::move(found)},
                        {"exhaustive", t.exhaustive},
                        {"pass", t.pass}});
  }
  json eliminations = json::array();
  for (const EliminationCheck& e : summary.eliminations) {
    eliminations.push_back({{"underlying", e.underlying},
                            {"params", to_json(e.params)},
                            {"hits", e.hits},
                            {"pass", e.pass}});
  }
  return {{"degree", summary.degree},
          {"fixtures", summary.fixtures},
          {"graphs_scanned", summary.graphs_scanned},
          {"theorems", std::move(theorems)},
          {"eliminations", std::move(eliminations)},
          {"all_pass", summary.all_pass()}};
}

json error_json(const Error& e) {
  json body = {{"kind", to_string(e.kind())}, {"message", e.detail()}};
  if (e.line()) body["line"] = *e.line();
  if (!e.source().empty()) body["source"] = e.source();
  return {{"error", std::move(body)}};
}

}  // namespace srsgkit
