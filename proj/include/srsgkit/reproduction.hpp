#pragma once

#include <string>
#include <vector>

#include "srsgkit/search.hpp"

namespace srsgkit {

// One class found by a sweep, named after the catalog entry (or its
// negation, written "-NAME") that it is isomorphic to.
struct FoundClass {
  std::string name;  // empty when no catalog entry matches
  SrsgParams params;
  std::string form_hex;
  std::string source;
};

struct TheoremCheck {
  int rho = 0;
  std::vector<std::string> expected;
  std::vector<FoundClass> found;
  bool exhaustive = true;
  bool pass = false;
};

struct EliminationCheck {
  std::string underlying;
  SrsgParams params;
  std::size_t hits = 0;
  bool pass = false;
};

struct ClassificationSummary {
  int degree = 6;
  std::string fixtures;
  std::size_t graphs_scanned = 0;
  std::vector<TheoremCheck> theorems;
  std::vector<EliminationCheck> eliminations;

  bool all_pass() const;
};

// Sweeps every *.g6 file in `fixtures_dir` at net-degree 4, 2 and 0 and
// compares the classes found with the named catalog graphs. Only degree 6
// is supported; other degrees throw VacuousQuery.
ClassificationSummary verify_classification(int degree, const std::string& fixtures_dir,
                                            int jobs = 1);

}  // namespace srsgkit
