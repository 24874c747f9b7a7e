#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srsgkit/graph.hpp"

namespace srsgkit {

// Byte n, then the upper triangle of the sign matrix in canonical vertex
// order, row by row, with +1 -> 2, -1 -> 1, 0 -> 0. Equal iff isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  // Throws ParseError on odd length or non-hex characters.
  static CanonicalForm from_hex(std::string_view text);

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Exchanged treats negative edges as positive and vice versa, so the form
// of g under Exchanged equals the standard form of negation(g).
enum class SignRoles { Standard, Exchanged };

// lab[i] is the original vertex placed at canonical position i.
std::vector<int> canonical_labeling(const SignedGraph& g, SignRoles roles = SignRoles::Standard);
CanonicalForm canonical_form(const SignedGraph& g, SignRoles roles = SignRoles::Standard);

// Vertex v of g becomes vertex perm[v]. Throws VertexOutOfRange when perm
// is not a permutation of 0..n-1.
SignedGraph permute(const SignedGraph& g, std::span<const int> perm);

struct IsoResult {
  bool isomorphic = false;
  // When isomorphic: permute(g, *witness) == h.
  std::optional<std::vector<int>> witness;
};

IsoResult are_isomorphic(const SignedGraph& g, const SignedGraph& h);

// Order of the automorphism group. Throws SizeExceeded above 16 vertices.
std::uint64_t automorphism_count(const Graph& g);
std::uint64_t automorphism_count(const SignedGraph& g);

}  // namespace srsgkit
