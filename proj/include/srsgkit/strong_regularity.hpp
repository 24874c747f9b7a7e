#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srsgkit/graph.hpp"

namespace srsgkit {

// (n, r, a, b, c). a, b, c are empty when their pair class is empty:
// no positive edge, no negative edge, or a complete graph.
struct SrsgParams {
  int n = 0;
  int r = 0;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<int> c;

  friend auto operator<=>(const SrsgParams&, const SrsgParams&) = default;
};

// Renders "(n,r,a,b,c)" with "U" for undefined entries.
std::string to_string(const SrsgParams& p);

enum class SrsgClass { NotSRSG, Homogeneous, C1, C2, C3, C4, C5 };

std::string_view to_string(SrsgClass k);

// Empty when the graph is irregular, edgeless, homogeneous complete, or some
// A^2 class is not constant.
std::optional<SrsgParams> extract_params(const SignedGraph& g);

SrsgClass classify(const SignedGraph& g);
// Class implied by a parameter tuple alone. Completeness is read from c.
SrsgClass classify(const SrsgParams& p);

// 2A^2 + (b-a)A = (a+b-2c)A_G + 2cJ + 2(r-c)I, entrywise. Undefined
// entries count as 0; their coefficients only touch empty pair classes.
bool satisfies_square_identity(const SignedGraph& g, const SrsgParams& p);

// rho^2 + ((b-a)/2) rho = ((a+b)/2) r + c(n-r-1) + r, in doubled form.
bool net_degree_identity_holds(const SrsgParams& p, int rho);

// Feasibility relation r(r-e-1) = (n-r-1) f of an unsigned strongly
// regular graph with parameters (n, r, e, f).
bool srg_relation_holds(int n, int r, int e, int f);

struct ParityReport {
  bool ok = true;
  // Pairs u < v joined by an odd number of negative 2-walks.
  std::vector<Edge> violations;
};

ParityReport negative_walk_parity(const SignedGraph& g);

// A^2 + sA + pI = 0 exactly.
bool satisfies_quadratic(const SignedGraph& g, int s, int p);

using BigInt = boost::multiprecision::cpp_int;

// det(xI - A), coefficients from x^n down to the constant term.
// Throws SizeExceeded above 32 vertices.
std::vector<BigInt> characteristic_polynomial(const SignedGraph& g);

// Necessary condition on an unsigned r-regular graph to carry a signing
// with parameters p. Adjacent pairs must fit the positive or the negative
// class; non-adjacent pairs must fit c. Throws DegreeMismatch.
bool underlying_feasible(const Graph& g, const SrsgParams& p);

}  // namespace srsgkit
