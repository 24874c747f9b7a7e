#include "srsgkit/graph.hpp"

#include <string>

#include "srsgkit/error.hpp"

namespace srsgkit {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::SizeExceeded,
                "vertex count " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxVertices));
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
  }
}

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Validates one edge and marks it in `rows`.
void place_edge(std::vector<VertexMask>& rows, const std::vector<VertexMask>* other,
                int u, int v) {
  const int n = static_cast<int>(rows.size());
  check_vertex(n, u);
  check_vertex(n, v);
  if (u == v) throw Error(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(u));
  const bool taken = ((rows[u] >> v) & 1U) || (other != nullptr && (((*other)[u] >> v) & 1U));
  if (taken) throw Error(ErrorKind::DuplicateEdge, "edge " + pair_text(u, v) + " given twice");
  rows[u] |= bit(v);
  rows[v] |= bit(u);
}

int count_edges(const std::vector<VertexMask>& rows) {
  int twice = 0;
  for (VertexMask r : rows) twice += popcount(r);
  return twice / 2;
}

std::vector<Edge> list_edges(const std::vector<VertexMask>& rows) {
  std::vector<Edge> out;
  const int n = static_cast<int>(rows.size());
  for (int u = 0; u < n; ++u) {
    VertexMask higher = rows[u] & ~((bit(u) << 1) - 1);
    while (higher) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : rows_(static_cast<std::size_t>(n), 0) {}

Graph Graph::empty(int n) {
  check_order(n);
  return Graph(n);
}

Graph Graph::complete(int n) {
  check_order(n);
  Graph g(n);
  const VertexMask all = n == 64 ? ~VertexMask{0} : (bit(n) - 1);
  for (int v = 0; v < n; ++v) g.rows_[v] = all & ~bit(v);
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g(n);
  for (const Edge& e : edges) place_edge(g.rows_, nullptr, e.u, e.v);
  return g;
}

int Graph::edge_count() const { return count_edges(rows_); }

std::vector<Edge> Graph::edges() const { return list_edges(rows_); }

std::optional<int> Graph::regular_degree() const {
  const int d = degree(0);
  for (int v = 1; v < order(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool Graph::connected() const {
  const int n = order();
  const VertexMask all = n == 64 ? ~VertexMask{0} : (bit(n) - 1);
  VertexMask seen = bit(0);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= rows_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

Graph Graph::complement() const {
  Graph c = complete(order());
  for (int v = 0; v < order(); ++v) c.rows_[v] &= ~rows_[v];
  return c;
}

// ---------------------------------------------------------- SignedGraph

SignedGraph SignedGraph::from_signed_edges(int n, std::span<const SignedEdge> edges) {
  check_order(n);
  std::vector<VertexMask> pos(static_cast<std::size_t>(n), 0);
  std::vector<VertexMask> neg(static_cast<std::size_t>(n), 0);
  for (const SignedEdge& e : edges) {
    if (e.sign == Sign::positive) {
      place_edge(pos, &neg, e.u, e.v);
    } else {
      place_edge(neg, &pos, e.u, e.v);
    }
  }
  return SignedGraph(std::move(pos), std::move(neg));
}

SignedGraph SignedGraph::all_positive(const Graph& g) {
  std::vector<VertexMask> pos(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) pos[v] = g.neighbours(v);
  return SignedGraph(std::move(pos), std::vector<VertexMask>(pos.size(), 0));
}

SignedGraph SignedGraph::with_negative_edges(const Graph& g, std::span<const Edge> negatives) {
  const int n = g.order();
  std::vector<VertexMask> pos(static_cast<std::size_t>(n));
  std::vector<VertexMask> neg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) pos[v] = g.neighbours(v);
  for (const Edge& e : negatives) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (!g.adjacent(e.u, e.v)) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "negative edge " + pair_text(e.u, e.v) + " is not an edge of the graph");
    }
    if ((neg[e.u] >> e.v) & 1U) {
      throw Error(ErrorKind::DuplicateEdge, "edge " + pair_text(e.u, e.v) + " given twice");
    }
    neg[e.u] |= bit(e.v);
    neg[e.v] |= bit(e.u);
    pos[e.u] &= ~bit(e.v);
    pos[e.v] &= ~bit(e.u);
  }
  return SignedGraph(std::move(pos), std::move(neg));
}

SignedGraph SignedGraph::from_masks(std::vector<VertexMask> positive,
                                    std::vector<VertexMask> negative) {
  const int n = static_cast<int>(positive.size());
  check_order(n);
  if (negative.size() != positive.size()) {
    throw Error(ErrorKind::ConstructionInvalid, "mask rows differ in length");
  }
  for (int u = 0; u < n; ++u) {
    const VertexMask row = positive[u] | negative[u];
    if ((positive[u] & negative[u]) != 0 || ((row >> u) & 1U) || (n < 64 && (row >> n) != 0)) {
      throw Error(ErrorKind::ConstructionInvalid, "malformed sign rows at vertex " + std::to_string(u));
    }
    for (int v = 0; v < n; ++v) {
      if (((positive[u] >> v) & 1U) != ((positive[v] >> u) & 1U) ||
          ((negative[u] >> v) & 1U) != ((negative[v] >> u) & 1U)) {
        throw Error(ErrorKind::ConstructionInvalid, "asymmetric sign rows at " + pair_text(u, v));
      }
    }
  }
  return SignedGraph(std::move(positive), std::move(negative));
}

int SignedGraph::edge_count() const {
  std::vector<VertexMask> rows(pos_.size());
  for (std::size_t v = 0; v < rows.size(); ++v) rows[v] = pos_[v] | neg_[v];
  return count_edges(rows);
}

int SignedGraph::negative_edge_count() const { return count_edges(neg_); }

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  const int n = order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int s = sign(u, v);
      if (s != 0) out.push_back({u, v, s > 0 ? Sign::positive : Sign::negative});
    }
  }
  return out;
}

std::vector<Edge> SignedGraph::negative_edges() const { return list_edges(neg_); }

Graph SignedGraph::underlying() const {
  std::vector<Edge> all = list_edges(pos_);
  for (const Edge& e : list_edges(neg_)) all.push_back(e);
  return Graph::from_edges(order(), all);
}

bool SignedGraph::complete() const {
  for (int v = 0; v < order(); ++v) {
    if (degree(v) != order() - 1) return false;
  }
  return true;
}

// ------------------------------------------------------------ matrices

IntMatrix adjacency_matrix(const SignedGraph& g) {
  IntMatrix m(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) m.at(u, v) = g.sign(u, v);
  }
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) m.at(u, v) = g.adjacent(u, v) ? 1 : 0;
  }
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const int n = x.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  }
  return out;
}

// ---------------------------------------------------------- operations

int net_degree(const SignedGraph& g, int v) {
  check_vertex(g.order(), v);
  return g.positive_degree(v) - g.negative_degree(v);
}

std::optional<int> common_net_degree(const SignedGraph& g) {
  const int rho = net_degree(g, 0);
  for (int v = 1; v < g.order(); ++v) {
    if (net_degree(g, v) != rho) return std::nullopt;
  }
  return rho;
}

SignedGraph positive_subgraph(const SignedGraph& g) {
  std::vector<VertexMask> pos(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) pos[v] = g.positive_neighbours(v);
  return SignedGraph::from_masks(std::move(pos), std::vector<VertexMask>(g.order(), 0));
}

SignedGraph negative_subgraph(const SignedGraph& g) {
  std::vector<VertexMask> neg(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) neg[v] = g.negative_neighbours(v);
  return SignedGraph::from_masks(std::vector<VertexMask>(g.order(), 0), std::move(neg));
}

SignedGraph negation(const SignedGraph& g) {
  std::vector<VertexMask> pos(static_cast<std::size_t>(g.order()));
  std::vector<VertexMask> neg(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    pos[v] = g.negative_neighbours(v);
    neg[v] = g.positive_neighbours(v);
  }
  return SignedGraph::from_masks(std::move(pos), std::move(neg));
}

WalkCounts two_walk_counts(const SignedGraph& g, int u, int v) {
  check_vertex(g.order(), u);
  check_vertex(g.order(), v);
  if (u == v) {
    throw Error(ErrorKind::VertexOutOfRange, "two_walk_counts needs distinct vertices");
  }
  const VertexMask pu = g.positive_neighbours(u), nu = g.negative_neighbours(u);
  const VertexMask pv = g.positive_neighbours(v), nv = g.negative_neighbours(v);
  return {popcount(pu & pv) + popcount(nu & nv), popcount(pu & nv) + popcount(nu & pv)};
}

IntMatrix square_entries(const SignedGraph& g) {
  const int n = g.order();
  IntMatrix sq(n);
  for (int u = 0; u < n; ++u) {
    sq.at(u, u) = g.degree(u);
    for (int v = u + 1; v < n; ++v) {
      const int value = two_walk_counts(g, u, v).value();
      sq.at(u, v) = value;
      sq.at(v, u) = value;
    }
  }
  return sq;
}

bool is_balanced(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (side[root] != 0) continue;
    side[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      VertexMask nb = g.neighbours(u);
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        const int want = side[u] * g.sign(u, w);
        if (side[w] == 0) {
          side[w] = want;
          stack.push_back(w);
        } else if (side[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

TriangleCensus triangle_census(const SignedGraph& g) {
  TriangleCensus census;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      VertexMask third = g.neighbours(u) & g.neighbours(v) & ~((bit(v) << 1) - 1);
      while (third) {
        const int w = std::countr_zero(third);
        third &= third - 1;
        const int negatives = (g.sign(u, v) < 0) + (g.sign(u, w) < 0) + (g.sign(v, w) < 0);
        ++census.counts[negatives];
      }
    }
  }
  return census;
}

std::vector<std::array<int, 4>> vertex_triangle_profile(const SignedGraph& g) {
  const int n = g.order();
  std::vector<std::array<int, 4>> profile(static_cast<std::size_t>(n), std::array<int, 4>{});
  for (int u = 0; u < n; ++u) {
    VertexMask nb = g.neighbours(u);
    while (nb) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (v < u) continue;
      VertexMask third = g.neighbours(u) & g.neighbours(v) & ~((bit(v) << 1) - 1);
      while (third) {
        const int w = std::countr_zero(third);
        third &= third - 1;
        const int negatives = (g.sign(u, v) < 0) + (g.sign(u, w) < 0) + (g.sign(v, w) < 0);
        ++profile[u][negatives];
        ++profile[v][negatives];
        ++profile[w][negatives];
      }
    }
  }
  return profile;
}

}  // namespace srsgkit
