#include "srsgkit/reproduction.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "srsgkit/catalog.hpp"
#include "srsgkit/error.hpp"
#include "srsgkit/io.hpp"

namespace srsgkit {

namespace {

// Canonical form -> catalog name, including the negation of each entry.
std::map<CanonicalForm, std::string> named_forms() {
  std::map<CanonicalForm, std::string> names;
  for (const std::string& name : list_names()) {
    const SignedGraph& g = build(name).graph;
    names.emplace(canonical_form(g), name);
    names.emplace(canonical_form(g, SignRoles::Exchanged), "-" + name);
  }
  return names;
}

}  // namespace

bool ClassificationSummary::all_pass() const {
  const auto ok = [](const auto& item) { return item.pass; };
  return std::all_of(theorems.begin(), theorems.end(), ok) &&
         std::all_of(eliminations.begin(), eliminations.end(), ok);
}

ClassificationSummary verify_classification(int degree, const std::string& fixtures_dir, int jobs) {
  if (degree != 6) {
    throw Error(ErrorKind::VacuousQuery, "reference classification data exists only for degree 6");
  }
  ClassificationSummary summary;
  summary.degree = degree;
  summary.fixtures = fixtures_dir;

  const auto names = named_forms();
  const std::vector<std::pair<int, std::vector<std::string>>> expectations = {
      {4, {"S1_12", "S2_12", "S3_12"}},
      {2, {"S2_8", "S3_8", "S_9", "S1_9", "S_15", "S1_15"}},
      {0, {"S4_8", "-S4_8", "S_16", "-S_16"}},
  };
  for (const auto& [rho, expected] : expectations) {
    SearchConfig cfg;
    cfg.rho = rho;
    cfg.jobs = jobs;
    const SearchReport report = search_catalog(fixtures_dir, cfg);
    summary.graphs_scanned = report.graphs.size();
    TheoremCheck check;
    check.rho = rho;
    check.expected = expected;
    check.exhaustive = report.exhaustive;
    for (const SearchHit& hit : report.hits) {
      if (hit.klass == SrsgClass::Homogeneous) continue;
      const auto it = names.find(hit.form);
      check.found.push_back({it == names.end() ? std::string() : it->second, hit.params,
                             hit.form.hex(), hit.source});
    }
    // Each expected name must match a distinct found class, and nothing
    // else may be found.
    bool all_matched = check.found.size() == expected.size();
    for (const std::string& want : expected) {
      const auto form = want.front() == '-'
                            ? canonical_form(build(want.substr(1)).graph, SignRoles::Exchanged)
                            : canonical_form(build(want).graph);
      const bool seen = std::any_of(check.found.begin(), check.found.end(),
                                    [&](const FoundClass& f) { return f.form_hex == form.hex(); });
      all_matched = all_matched && seen;
    }
    check.pass = all_matched && check.exhaustive;
    summary.theorems.push_back(std::move(check));
  }

  const std::string paley = (std::filesystem::path(fixtures_dir) / "Paley13.g6").string();
  if (std::filesystem::exists(paley)) {
    const SrsgParams p{13, 6, 2, -2, -1};
    SearchConfig cfg;
    cfg.rho = 2;
    cfg.param_filter = {p};
    const auto graphs = read_graph6_file(paley);
    const SearchReport report = search_srsg(graphs.front(), cfg, "Paley13.g6:1");
    summary.eliminations.push_back({"Paley13", p, report.hits.size(), report.exhaustive && report.hits.empty()});
  }
  return summary;
}

}  // namespace srsgkit
