#include "srsgkit/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "srsgkit/error.hpp"
#include "srsgkit/strong_regularity.hpp"

namespace srsgkit {

namespace {

// Ordered partition of the vertex set.
using Cells = std::vector<std::vector<int>>;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
  }

  int class_size(int x) { return size_[find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Equitable-partition refinement over the two edge colours.
class Refiner {
 public:
  Refiner(const SignedGraph& g, SignRoles roles)
      : n_(g.order()), pos_(g.order()), neg_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      pos_[v] = g.positive_neighbours(v);
      neg_[v] = g.negative_neighbours(v);
    }
    if (roles == SignRoles::Exchanged) std::swap(pos_, neg_);
  }

  int order() const { return n_; }

  Cells root() const {
    Cells cells(1);
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    refine(cells);
    return cells;
  }

  // Splits each cell by (positive, negative) neighbour counts into every
  // cell until nothing changes. New cells are ordered by those counts, so
  // the result commutes with relabelling.
  void refine(Cells& cells) const {
    std::vector<std::pair<std::vector<std::uint8_t>, int>> keyed;
    while (true) {
      std::vector<VertexMask> masks(cells.size(), 0);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        for (int v : cells[j]) masks[j] |= bit(v);
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (int v : cell) {
          std::vector<std::uint8_t> sig(2 * masks.size());
          for (std::size_t j = 0; j < masks.size(); ++j) {
            sig[2 * j] = static_cast<std::uint8_t>(popcount(pos_[v] & masks[j]));
            sig[2 * j + 1] = static_cast<std::uint8_t>(popcount(neg_[v] & masks[j]));
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  Cells individualize(const Cells& cells, int target, int w) const {
    Cells out;
    out.reserve(cells.size() + 1);
    for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
      if (j != target) {
        out.push_back(cells[j]);
        continue;
      }
      out.push_back({w});
      out.emplace_back();
      for (int v : cells[j]) {
        if (v != w) out.back().push_back(v);
      }
    }
    refine(out);
    return out;
  }

  static int first_open_cell(const Cells& cells) {
    for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
      if (cells[j].size() > 1) return j;
    }
    return -1;
  }

  static std::vector<int> flatten(const Cells& cells) {
    std::vector<int> lab;
    for (const auto& cell : cells) lab.push_back(cell.front());
    return lab;
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& lab) const {
    std::vector<std::uint8_t> code;
    code.reserve(1 + static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    code.push_back(static_cast<std::uint8_t>(n_));
    for (int i = 0; i < n_; ++i) {
      const VertexMask p = pos_[lab[i]];
      const VertexMask m = neg_[lab[i]];
      for (int j = i + 1; j < n_; ++j) {
        const int v = lab[j];
        code.push_back(((p >> v) & 1U) ? 2 : (((m >> v) & 1U) ? 1 : 0));
      }
    }
    return code;
  }

 private:
  int n_;
  std::vector<VertexMask> pos_;
  std::vector<VertexMask> neg_;
};

// Smallest leaf encoding of the refinement tree. Children of a node that
// lie in one orbit of the automorphisms found so far (restricted to those
// fixing the current path) have equal subtrees, so only one is explored.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Refiner& refiner) : refiner_(refiner) {}

  void run() { descend(refiner_.root()); }

  const std::vector<int>& best_labeling() const { return best_lab_; }
  const std::vector<std::uint8_t>& best_code() const { return best_code_; }

 private:
  void descend(const Cells& cells) {
    const int target = Refiner::first_open_cell(cells);
    if (target < 0) {
      visit_leaf(Refiner::flatten(cells));
      return;
    }
    std::vector<int> explored;
    const std::vector<int> candidates = cells[target];
    for (int w : candidates) {
      if (!explored.empty() && equivalent_to_explored(w, explored)) continue;
      path_.push_back(w);
      descend(refiner_.individualize(cells, target, w));
      path_.pop_back();
      explored.push_back(w);
    }
  }

  void visit_leaf(std::vector<int> lab) {
    std::vector<std::uint8_t> code = refiner_.encode(lab);
    if (best_code_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = std::move(lab);
      return;
    }
    if (code != best_code_) return;
    std::vector<int> gamma(lab.size());
    bool identity = true;
    for (std::size_t i = 0; i < lab.size(); ++i) {
      gamma[best_lab_[i]] = lab[i];
      identity = identity && best_lab_[i] == lab[i];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  bool equivalent_to_explored(int w, const std::vector<int>& explored) const {
    DisjointSets orbits(refiner_.order());
    for (const auto& gamma : generators_) {
      const bool fixes_path =
          std::all_of(path_.begin(), path_.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes_path) continue;
      for (int v = 0; v < refiner_.order(); ++v) orbits.unite(v, gamma[v]);
    }
    const int root = orbits.find(w);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int u) { return orbits.find(u) == root; });
  }

  const Refiner& refiner_;
  std::vector<int> path_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> best_lab_;
  std::vector<std::uint8_t> best_code_;
};

std::vector<std::size_t> cell_sizes(const Cells& cells) {
  std::vector<std::size_t> sizes;
  sizes.reserve(cells.size());
  for (const auto& cell : cells) sizes.push_back(cell.size());
  return sizes;
}

// Orbit sizes along the first path of the refinement tree. The stabiliser
// of the first k path vertices acts on the k-th target cell; its orbit of
// the next path vertex is found by looking for leaves equivalent to the
// first leaf.
class AutomorphismCounter {
 public:
  explicit AutomorphismCounter(const Refiner& refiner) : refiner_(refiner) {}

  std::uint64_t run() {
    Cells cells = refiner_.root();
    parts_.push_back(cells);
    sizes_.push_back(cell_sizes(cells));
    while (true) {
      const int target = Refiner::first_open_cell(cells);
      if (target < 0) break;
      targets_.push_back(target);
      chosen_.push_back(cells[target].front());
      cells = refiner_.individualize(cells, target, chosen_.back());
      parts_.push_back(cells);
      sizes_.push_back(cell_sizes(cells));
    }
    first_lab_ = Refiner::flatten(cells);
    first_code_ = refiner_.encode(first_lab_);

    DisjointSets orbits(refiner_.order());
    std::uint64_t total = 1;
    for (int k = static_cast<int>(chosen_.size()) - 1; k >= 0; --k) {
      const int anchor = chosen_[k];
      for (int w : parts_[k][targets_[k]]) {
        if (orbits.find(w) == orbits.find(anchor)) continue;
        const auto lab = equivalent_leaf(refiner_.individualize(parts_[k], targets_[k], w), k + 1);
        if (!lab) continue;
        for (std::size_t i = 0; i < lab->size(); ++i) orbits.unite(first_lab_[i], (*lab)[i]);
      }
      total *= static_cast<std::uint64_t>(orbits.class_size(anchor));
    }
    return total;
  }

 private:
  std::optional<std::vector<int>> equivalent_leaf(const Cells& cells, std::size_t depth) const {
    if (depth >= sizes_.size() || cell_sizes(cells) != sizes_[depth]) return std::nullopt;
    const int target = Refiner::first_open_cell(cells);
    if (target < 0) {
      std::vector<int> lab = Refiner::flatten(cells);
      if (refiner_.encode(lab) == first_code_) return lab;
      return std::nullopt;
    }
    for (int w : cells[target]) {
      auto found = equivalent_leaf(refiner_.individualize(cells, target, w), depth + 1);
      if (found) return found;
    }
    return std::nullopt;
  }

  const Refiner& refiner_;
  std::vector<Cells> parts_;
  std::vector<std::vector<std::size_t>> sizes_;
  std::vector<int> targets_;
  std::vector<int> chosen_;
  std::vector<int> first_lab_;
  std::vector<std::uint8_t> first_code_;
};

using VertexFingerprint = std::tuple<int, int, std::array<int, 4>>;

struct Fingerprint {
  std::vector<VertexFingerprint> vertices;
  std::optional<SrsgParams> params;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const SignedGraph& g) {
  Fingerprint f;
  const auto profile = vertex_triangle_profile(g);
  for (int v = 0; v < g.order(); ++v) {
    f.vertices.emplace_back(g.degree(v), net_degree(g, v), profile[v]);
  }
  std::sort(f.vertices.begin(), f.vertices.end());
  f.params = extract_params(g);
  return f;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t byte : bytes) {
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xF]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view text) {
  const auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
  };
  if (text.size() % 2 != 0) throw Error(ErrorKind::ParseError, "hex string has odd length");
  CanonicalForm form;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = nibble(text[i]);
    const int lo = nibble(text[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorKind::ParseError, "non-hex character in canonical form");
    form.bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return form;
}

std::vector<int> canonical_labeling(const SignedGraph& g, SignRoles roles) {
  const Refiner refiner(g, roles);
  CanonicalSearch search(refiner);
  search.run();
  return search.best_labeling();
}

CanonicalForm canonical_form(const SignedGraph& g, SignRoles roles) {
  const Refiner refiner(g, roles);
  CanonicalSearch search(refiner);
  search.run();
  return {search.best_code()};
}

SignedGraph permute(const SignedGraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorKind::VertexOutOfRange, "permutation length differs from vertex count");
  }
  VertexMask seen = 0;
  for (int image : perm) {
    if (image < 0 || image >= n || ((seen >> image) & 1U)) {
      throw Error(ErrorKind::VertexOutOfRange, "not a permutation of the vertex set");
    }
    seen |= bit(image);
  }
  std::vector<VertexMask> pos(static_cast<std::size_t>(n), 0);
  std::vector<VertexMask> neg(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int s = g.sign(u, v);
      if (s > 0) pos[perm[u]] |= bit(perm[v]);
      if (s < 0) neg[perm[u]] |= bit(perm[v]);
    }
  }
  return SignedGraph::from_masks(std::move(pos), std::move(neg));
}

IsoResult are_isomorphic(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      g.negative_edge_count() != h.negative_edge_count()) {
    return {};
  }
  if (!(fingerprint(g) == fingerprint(h))) return {};

  const Refiner rg(g, SignRoles::Standard);
  const Refiner rh(h, SignRoles::Standard);
  CanonicalSearch sg(rg);
  CanonicalSearch sh(rh);
  sg.run();
  sh.run();
  if (sg.best_code() != sh.best_code()) return {};

  std::vector<int> witness(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) witness[sg.best_labeling()[i]] = sh.best_labeling()[i];
  if (!(permute(g, witness) == h)) {
    throw Error(ErrorKind::ConstructionInvalid, "isomorphism witness failed verification");
  }
  return {true, std::move(witness)};
}

std::uint64_t automorphism_count(const SignedGraph& g) {
  if (g.order() > 16) {
    throw Error(ErrorKind::SizeExceeded,
                "automorphism count supports at most 16 vertices, got " + std::to_string(g.order()));
  }
  const Refiner refiner(g, SignRoles::Standard);
  return AutomorphismCounter(refiner).run();
}

std::uint64_t automorphism_count(const Graph& g) {
  return automorphism_count(SignedGraph::all_positive(g));
}

}  // namespace srsgkit
