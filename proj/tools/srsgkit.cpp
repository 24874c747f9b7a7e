#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <limits>
#include <sstream>

#include "srsgkit/catalog.hpp"
#include "srsgkit/io.hpp"
#include "srsgkit/iso.hpp"
#include "srsgkit/params.hpp"
#include "srsgkit/report.hpp"
#include "srsgkit/reproduction.hpp"
#include "srsgkit/search.hpp"

using namespace srsgkit;
using nlohmann::json;

namespace {

// Exit status when verify-classification ran but a check did not hold.
constexpr int kChecksFailed = 3;

void print(const json& value) { std::cout << value.dump(2) << '\n'; }

std::optional<int> parse_entry(const std::string& token, const std::string& text) {
  if (token == "U" || token == "u") return std::nullopt;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw Error(ErrorKind::ParseError, "bad parameter tuple '" + text + "'");
  }
  return value;
}

// "n,r,a,b,c" with optional parentheses; "U" marks an undefined entry.
SrsgParams parse_params(std::string text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ') cleaned.push_back(ch);
  }
  std::vector<std::string> parts;
  std::stringstream stream(cleaned);
  std::string part;
  while (std::getline(stream, part, ',')) parts.push_back(part);
  if (parts.size() != 5) throw Error(ErrorKind::ParseError, "expected n,r,a,b,c in '" + text + "'");
  const auto n = parse_entry(parts[0], text);
  const auto r = parse_entry(parts[1], text);
  if (!n || !r) throw Error(ErrorKind::ParseError, "n and r must be given in '" + text + "'");
  return {*n, *r, parse_entry(parts[2], text), parse_entry(parts[3], text), parse_entry(parts[4], text)};
}

std::vector<NamedGraph> load_underlying(const std::vector<std::string>& paths) {
  std::vector<NamedGraph> graphs;
  for (const std::string& path : paths) {
    const auto parsed = read_graph6_file(path);
    const std::string base = std::filesystem::path(path).filename().string();
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      graphs.push_back({base + ":" + std::to_string(i + 1), parsed[i]});
    }
  }
  return graphs;
}

json spectrum_json(const SignedGraph& g) {
  json coeffs = json::array();
  for (const BigInt& c : characteristic_polynomial(g)) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coeffs.push_back(static_cast<std::int64_t>(c));
    } else {
      coeffs.push_back(c.str());
    }
  }
  return {{"n", g.order()}, {"char_poly", std::move(coeffs)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly regular signed graph toolkit"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Report degrees, parameters and class of a .sg graph");
  std::string check_file;
  check->add_option("file", check_file, ".sg file")->required();

  auto* params = app.add_subcommand("params", "List feasible parameter sets");
  ParamQuery query;
  std::optional<int> fix_a, fix_b, fix_c, a_min, a_max, n_min, n_max, div_n;
  params->add_option("--r", query.r, "Degree")->required();
  params->add_option("--rho", query.rho, "Net-degree")->required();
  params->add_option("--fix-a", fix_a, "Fix a");
  params->add_option("--fix-b", fix_b, "Fix b");
  params->add_option("--fix-c", fix_c, "Fix c");
  params->add_option("--a-min", a_min, "Lower bound on a");
  params->add_option("--a-max", a_max, "Upper bound on a");
  params->add_option("--n-min", n_min, "Smallest n");
  params->add_option("--n-max", n_max, "Largest n (default 2r+5)");
  params->add_flag("--even-n", query.even_n, "Only even n");
  params->add_option("--div-n", div_n, "Only n divisible by D");

  auto* search = app.add_subcommand("search", "Search signings of underlying graphs");
  std::vector<std::string> underlying;
  std::vector<std::string> filter_text;
  std::string dedupe = "iso";
  SearchConfig cfg;
  std::optional<std::uint64_t> budget;
  bool allow_disconnected = false;
  bool no_entry_pruning = false;
  bool timing = false;
  search->add_option("--underlying", underlying, "graph6 files")->required()->expected(1, -1);
  search->add_option("--rho", cfg.rho, "Target net-degree")->required();
  search->add_option("--params", filter_text, "Accepted tuples n,r,a,b,c (U = undefined)")
      ->expected(1, -1);
  search->add_option("--dedupe", dedupe, "iso, iso-neg or none")
      ->check(CLI::IsMember({"iso", "iso-neg", "none"}));
  search->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "Node budget");
  search->add_option("--split-depth", cfg.split_depth, "Depth of the task split")
      ->check(CLI::NonNegativeNumber);
  search->add_flag("--allow-disconnected", allow_disconnected, "Also search disconnected graphs");
  search->add_flag("--no-entry-pruning", no_entry_pruning, "Prune on degrees only");
  search->add_flag("--timing", timing, "Include wall time");

  auto* catalog = app.add_subcommand("catalog", "Emit the named SRSGs");
  std::string catalog_name;
  std::string emit = "json";
  std::string underlying_name;
  catalog->add_option("--name", catalog_name, "Entry name");
  catalog->add_option("--emit", emit, "json, sg or dot")->check(CLI::IsMember({"json", "sg", "dot"}));
  catalog->add_option("--underlying", underlying_name, "Emit a named underlying graph as graph6");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two .sg graphs");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "First .sg file")->required();
  iso->add_option("b", iso_b, "Second .sg file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial of a .sg graph");
  std::string spectrum_file;
  spectrum->add_option("file", spectrum_file, ".sg file")->required();

  auto* verify = app.add_subcommand("verify-classification", "Reproduce the degree-6 classification");
  int degree = 6;
  std::string fixtures;
  int verify_jobs = 1;
  verify->add_option("--degree", degree, "Degree")->required();
  verify->add_option("--fixtures", fixtures, "Directory of graph6 catalogs")->required();
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      print(check_json(read_sg_file(check_file)));
    } else if (*params) {
      query.fix_a = fix_a;
      query.fix_b = fix_b;
      query.fix_c = fix_c;
      query.a_min = a_min;
      query.a_max = a_max;
      query.n_min = n_min;
      query.n_max = n_max;
      query.n_divisor = div_n;
      print(to_json(feasible_param_sets(query)));
    } else if (*search) {
      for (const std::string& text : filter_text) cfg.param_filter.push_back(parse_params(text));
      cfg.dedupe = dedupe == "none" ? Dedupe::None
                                    : (dedupe == "iso-neg" ? Dedupe::UpToIsoAndNegation : Dedupe::UpToIso);
      cfg.node_budget = budget;
      cfg.require_connected = !allow_disconnected;
      cfg.entry_pruning = !no_entry_pruning;
      print(to_json(search_graphs(load_underlying(underlying), cfg), timing));
    } else if (*catalog) {
      if (!underlying_name.empty()) {
        std::cout << emit_graph6(build_underlying(underlying_name)) << '\n';
        return 0;
      }
      std::vector<std::string> names = list_names();
      if (!catalog_name.empty()) names = {catalog_name};
      if (emit == "json") {
        json entries = json::array();
        for (const std::string& name : names) entries.push_back(to_json(build(name)));
        print(catalog_name.empty() ? entries : entries.front());
      } else {
        for (const std::string& name : names) {
          const CatalogEntry& entry = build(name);
          if (emit == "sg") {
            if (names.size() > 1) std::cout << "# " << name << '\n';
            std::cout << emit_sg(entry.graph);
          } else {
            std::cout << export_dot(entry.graph, name);
          }
        }
      }
    } else if (*iso) {
      const IsoResult result = are_isomorphic(read_sg_file(iso_a), read_sg_file(iso_b));
      json out = {{"isomorphic", result.isomorphic}};
      if (result.witness) out["witness"] = *result.witness;
      print(out);
    } else if (*spectrum) {
      print(spectrum_json(read_sg_file(spectrum_file)));
    } else if (*verify) {
      const ClassificationSummary summary = verify_classification(degree, fixtures, verify_jobs);
      print(to_json(summary));
      return summary.all_pass() ? 0 : kChecksFailed;
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  }
  return 0;
}
