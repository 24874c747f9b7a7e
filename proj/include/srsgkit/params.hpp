#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srsgkit/strong_regularity.hpp"

namespace srsgkit {

// Degree, net-degree and optional side constraints for a parameter scan.
// a and b range over [-(r-1), r-1], c over [-r, r], n over [r+1, n_max].
struct ParamQuery {
  int r = 6;
  int rho = 0;
  std::optional<int> n_max;  // default 2r+5
  std::optional<int> n_min;
  std::optional<int> fix_a;
  std::optional<int> fix_b;
  std::optional<int> fix_c;
  std::optional<int> a_min;
  std::optional<int> a_max;
  bool even_n = false;
  std::optional<int> n_divisor;
};

enum class CandidateKind {
  Concrete,
  // c = 0 with n unconstrained by the identity. Reported once with n = 0.
  FreeFamily,
  // One member of a FreeFamily, n within range.
  FreeInstance,
};

struct ParamCandidate {
  SrsgParams params;
  CandidateKind kind = CandidateKind::Concrete;

  friend bool operator==(const ParamCandidate&, const ParamCandidate&) = default;
};

// Integer tuples satisfying the net-degree identity and the bounds. Sorted
// by (n, a, b, c) with FreeFamily rows last. A complete graph (n = r+1)
// appears with c undefined. Throws VacuousQuery when r - rho is odd or
// |rho| > r, EmptyRange when the ranges leave nothing to scan.
std::vector<ParamCandidate> feasible_param_sets(const ParamQuery& q);

// Parameters and net-degree of the negated graph.
std::pair<SrsgParams, int> negation_dual(const SrsgParams& p, int rho);

}  // namespace srsgkit
