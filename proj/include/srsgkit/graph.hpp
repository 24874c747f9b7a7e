#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace srsgkit {

// One bit per vertex. Every graph in this library has at most 64 vertices.
using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline int popcount(VertexMask m) { return std::popcount(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Sign : int { negative = -1, positive = 1 };

struct SignedEdge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::positive;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

// Simple undirected graph on vertices 0..n-1, stored as bitset rows.
class Graph {
 public:
  // Throws DuplicateEdge, SelfLoop, VertexOutOfRange, SizeExceeded.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph empty(int n);
  static Graph complete(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbours(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::optional<int> regular_degree() const;
  bool connected() const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(int n);
  std::vector<VertexMask> rows_;
};

// Symmetric sign matrix with entries in {+1, -1, 0} and zero diagonal.
// Immutable once built.
class SignedGraph {
 public:
  // Throws DuplicateEdge, SelfLoop, VertexOutOfRange, SizeExceeded.
  static SignedGraph from_signed_edges(int n, std::span<const SignedEdge> edges);
  static SignedGraph all_positive(const Graph& g);
  // Edges of `g` listed in `negatives` are negative, all others positive.
  static SignedGraph with_negative_edges(const Graph& g, std::span<const Edge> negatives);
  static SignedGraph from_masks(std::vector<VertexMask> positive,
                                std::vector<VertexMask> negative);

  int order() const { return static_cast<int>(pos_.size()); }
  int sign(int u, int v) const {
    return ((pos_[u] >> v) & 1U) ? 1 : (((neg_[u] >> v) & 1U) ? -1 : 0);
  }
  bool adjacent(int u, int v) const { return ((pos_[u] | neg_[u]) >> v) & 1U; }

  VertexMask positive_neighbours(int v) const { return pos_[v]; }
  VertexMask negative_neighbours(int v) const { return neg_[v]; }
  VertexMask neighbours(int v) const { return pos_[v] | neg_[v]; }

  int degree(int v) const { return popcount(neighbours(v)); }
  int positive_degree(int v) const { return popcount(pos_[v]); }
  int negative_degree(int v) const { return popcount(neg_[v]); }

  int edge_count() const;
  int negative_edge_count() const;
  std::vector<SignedEdge> edges() const;
  std::vector<Edge> negative_edges() const;
  Graph underlying() const;
  bool complete() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  SignedGraph(std::vector<VertexMask> pos, std::vector<VertexMask> neg)
      : pos_(std::move(pos)), neg_(std::move(neg)) {}

  std::vector<VertexMask> pos_;
  std::vector<VertexMask> neg_;
};

// Dense square integer matrix.
class IntMatrix {
 public:
  explicit IntMatrix(int n = 0) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  std::int64_t& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<std::int64_t> data_;
};

IntMatrix adjacency_matrix(const SignedGraph& g);
IntMatrix adjacency_matrix(const Graph& g);
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

// Positive minus negative degree. Throws VertexOutOfRange.
int net_degree(const SignedGraph& g, int v);
// The shared net-degree when the graph is net-regular.
std::optional<int> common_net_degree(const SignedGraph& g);

SignedGraph positive_subgraph(const SignedGraph& g);
// Keeps the negative edges with their -1 sign.
SignedGraph negative_subgraph(const SignedGraph& g);
SignedGraph negation(const SignedGraph& g);

struct WalkCounts {
  int positive = 0;
  int negative = 0;

  int value() const { return positive - negative; }
  friend bool operator==(const WalkCounts&, const WalkCounts&) = default;
};

// Signed 2-walks between distinct u and v. Throws VertexOutOfRange.
WalkCounts two_walk_counts(const SignedGraph& g, int u, int v);

// Exact A^2 of the sign matrix.
IntMatrix square_entries(const SignedGraph& g);

// True iff some switching makes every edge positive.
bool is_balanced(const SignedGraph& g);

struct TriangleCensus {
  // counts[k] = number of triangles with exactly k negative edges.
  std::array<std::int64_t, 4> counts{};

  std::int64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

TriangleCensus triangle_census(const SignedGraph& g);

// Per-vertex triangle counts, indexed [v][k] like TriangleCensus.
std::vector<std::array<int, 4>> vertex_triangle_profile(const SignedGraph& g);

}  // namespace srsgkit
