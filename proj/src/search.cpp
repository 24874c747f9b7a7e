#include "srsgkit/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <thread>
#include <tuple>

#include "srsgkit/error.hpp"
#include "srsgkit/io.hpp"

namespace srsgkit {

namespace {

void require_degree(const Graph& g, int k) {
  const auto r = g.regular_degree();
  if (!r) throw Error(ErrorKind::DegreeMismatch, "underlying graph is not regular");
  if (k < 0 || k > *r) {
    throw Error(ErrorKind::DegreeMismatch, "negative degree " + std::to_string(k) +
                                               " impossible in a " + std::to_string(*r) +
                                               "-regular graph");
  }
}

// Negative degree forced by net-degree rho on an r-regular graph, if any.
std::optional<int> negative_degree_for(int r, int rho) {
  if (std::abs(rho) > r || (r - rho) % 2 != 0) return std::nullopt;
  return (r - rho) / 2;
}

// Vertices in breadth-first order from the lowest index, so that pairs
// of early vertices have all their 2-walks decided early in the edge order.
std::vector<int> breadth_first_order(const Graph& g) {
  std::vector<int> order;
  VertexMask seen = 0;
  for (int root = 0; root < g.order(); ++root) {
    if ((seen >> root) & 1U) continue;
    seen |= bit(root);
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      VertexMask fresh = g.neighbours(order[head]) & ~seen;
      seen |= fresh;
      while (fresh) {
        order.push_back(std::countr_zero(fresh));
        fresh &= fresh - 1;
      }
    }
  }
  return order;
}

using ClassValues = std::array<std::optional<int>, 3>;
enum PairType { kPositive = 0, kNegative = 1, kApart = 2, kUndecided = 3 };

// One underlying graph prepared for search: relabelled vertices, the edge
// order, and the parameter filter reduced to entries it could satisfy.
struct Problem {
  std::string name;
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<int> to_original;
  std::vector<VertexMask> nb;
  std::vector<Edge> edges;
  bool filtered = false;
  std::vector<ClassValues> filter;

  Problem(std::string label, const Graph& g, int rho, const std::vector<SrsgParams>& wanted)
      : name(std::move(label)), n(g.order()), r(g.degree(0)), k(*negative_degree_for(r, rho)) {
    to_original = breadth_first_order(g);
    std::vector<int> to_new(n);
    for (int i = 0; i < n; ++i) to_new[to_original[i]] = i;
    nb.assign(n, 0);
    for (const Edge& e : g.edges()) {
      const int a = to_new[e.u];
      const int b = to_new[e.v];
      nb[a] |= bit(b);
      nb[b] |= bit(a);
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    filtered = !wanted.empty();
    const bool has_positive = k < r;
    const bool has_negative = k > 0;
    const bool complete = n == r + 1;
    for (const SrsgParams& p : wanted) {
      if (p.n != n || p.r != r) continue;
      if (p.a.has_value() != has_positive || p.b.has_value() != has_negative ||
          p.c.has_value() == complete) {
        continue;
      }
      filter.push_back({p.a, p.b, p.c});
    }
  }

  bool excluded_by_filter() const { return filtered && filter.empty(); }
};

struct RawHit {
  SignedGraph graph;
  SrsgParams params;
  CanonicalForm form;
  CanonicalForm key;
  int source = 0;
  std::vector<SignedEdge> edge_list;
};

bool better_representative(const RawHit& x, const RawHit& y) {
  return std::tie(x.form, x.source, x.edge_list) < std::tie(y.form, y.source, y.edge_list);
}

struct TaskResult {
  SearchStats stats;
  std::vector<RawHit> hits;
  bool aborted = false;
};

struct SharedBudget {
  std::optional<std::uint64_t> limit;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> stop{false};

  // False once the budget is spent.
  bool charge() {
    if (stop.load(std::memory_order_relaxed)) return false;
    if (!limit) return true;
    if (used.fetch_add(1, std::memory_order_relaxed) + 1 > *limit) {
      stop.store(true);
      return false;
    }
    return true;
  }
};

// Backtracking over edge signs with incremental bookkeeping of partial
// 2-walk sums. For a pair (x, z), partial is the signed sum over common
// neighbours whose two edges are decided and rem counts the rest; the
// final entry lies in [partial - rem, partial + rem] with the parity of
// partial + rem.
class Explorer {
 public:
  Explorer(const Problem& problem, const SearchConfig& cfg, SharedBudget& budget)
      : p_(problem),
        cfg_(cfg),
        budget_(budget),
        n_(problem.n),
        m_(static_cast<int>(problem.edges.size())),
        sign_(static_cast<std::size_t>(n_) * n_, 0),
        partial_(static_cast<std::size_t>(n_) * n_, 0),
        rem_(static_cast<std::size_t>(n_) * n_, 0),
        decided_(n_, 0),
        negative_(n_, 0),
        neg_degree_(n_, 0),
        open_degree_(n_, 0),
        trail_marks_(m_ + 1, 0) {
    for (int v = 0; v < n_; ++v) open_degree_[v] = popcount(p_.nb[v]);
    for (int x = 0; x < n_; ++x) {
      for (int z = 0; z < n_; ++z) {
        if (x != z) rem_[idx(x, z)] = static_cast<std::int16_t>(popcount(p_.nb[x] & p_.nb[z]));
      }
    }
    if (p_.filter.size() == 1) classes_ = p_.filter.front();
    for (int t = 0; t < 3; ++t) {
      for (const auto& entry : p_.filter) {
        if (entry[t]) allowed_[t].push_back(*entry[t]);
      }
    }
    root_ok_ = !cfg_.entry_pruning || check_all_pairs();
  }

  bool root_ok() const { return root_ok_; }

  // Enumerates surviving sign prefixes of length `depth`.
  void collect_prefixes(int depth, std::vector<std::vector<std::int8_t>>& out) {
    prefix_depth_ = std::min(depth, m_);
    prefixes_ = &out;
    explore(0);
    prefixes_ = nullptr;
    prefix_depth_ = -1;
  }

  // Replays a prefix returned by collect_prefixes and searches below it.
  void run_from(const std::vector<std::int8_t>& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e) push(static_cast<int>(e), prefix[e]);
    explore(static_cast<int>(prefix.size()));
    for (std::size_t e = prefix.size(); e-- > 0;) pop(static_cast<int>(e));
  }

  TaskResult& result() { return result_; }

 private:
  std::size_t idx(int x, int z) const { return static_cast<std::size_t>(x) * n_ + z; }

  void explore(int e) {
    if (prefixes_ != nullptr && e == prefix_depth_) {
      prefixes_->emplace_back(current_.begin(), current_.end());
      return;
    }
    if (!budget_.charge()) {
      result_.aborted = true;
      return;
    }
    ++result_.stats.nodes;
    if (e == m_) {
      visit_leaf();
      return;
    }
    for (const std::int8_t s : {std::int8_t{-1}, std::int8_t{1}}) {
      if (!degree_allows(e, s)) {
        ++result_.stats.pruned_degree;
        continue;
      }
      const bool ok = push(e, s);
      if (ok) {
        current_.push_back(s);
        explore(e + 1);
        current_.pop_back();
      } else {
        ++result_.stats.pruned_entry;
      }
      pop(e);
      if (result_.aborted) return;
    }
  }

  bool degree_allows(int e, int s) const {
    const int u = p_.edges[e].u;
    const int w = p_.edges[e].v;
    if (s < 0) return neg_degree_[u] < p_.k && neg_degree_[w] < p_.k;
    return neg_degree_[u] + open_degree_[u] - 1 >= p_.k &&
           neg_degree_[w] + open_degree_[w] - 1 >= p_.k;
  }

  void shift_pair(int x, int z, int delta, int step) {
    partial_[idx(x, z)] = static_cast<std::int16_t>(partial_[idx(x, z)] + delta);
    partial_[idx(z, x)] = partial_[idx(x, z)];
    rem_[idx(x, z)] = static_cast<std::int16_t>(rem_[idx(x, z)] - step);
    rem_[idx(z, x)] = rem_[idx(x, z)];
  }

  // Applies sign s to edge e and reports whether every touched entry can
  // still reach its class value. The caller always undoes with pop(e).
  bool push(int e, int s) {
    const int u = p_.edges[e].u;
    const int w = p_.edges[e].v;
    touched_.clear();
    VertexMask around_w = decided_[w];
    while (around_w) {
      const int y = std::countr_zero(around_w);
      around_w &= around_w - 1;
      shift_pair(u, y, s * sign_[idx(w, y)], 1);
      touched_.push_back({u, y});
    }
    VertexMask around_u = decided_[u];
    while (around_u) {
      const int y = std::countr_zero(around_u);
      around_u &= around_u - 1;
      shift_pair(w, y, s * sign_[idx(u, y)], 1);
      touched_.push_back({w, y});
    }
    sign_[idx(u, w)] = sign_[idx(w, u)] = static_cast<std::int8_t>(s);
    decided_[u] |= bit(w);
    decided_[w] |= bit(u);
    if (s < 0) {
      negative_[u] |= bit(w);
      negative_[w] |= bit(u);
      ++neg_degree_[u];
      ++neg_degree_[w];
    }
    --open_degree_[u];
    --open_degree_[w];
    trail_marks_[e] = trail_.size();
    if (!cfg_.entry_pruning) return true;
    touched_.push_back({u, w});
    for (const Edge& pair : touched_) {
      if (!check_pair(pair.u, pair.v)) return false;
    }
    return true;
  }

  void pop(int e) {
    const int u = p_.edges[e].u;
    const int w = p_.edges[e].v;
    while (trail_.size() > trail_marks_[e]) {
      classes_[trail_.back()].reset();
      trail_.pop_back();
    }
    const int s = sign_[idx(u, w)];
    sign_[idx(u, w)] = sign_[idx(w, u)] = 0;
    decided_[u] &= ~bit(w);
    decided_[w] &= ~bit(u);
    if (s < 0) {
      negative_[u] &= ~bit(w);
      negative_[w] &= ~bit(u);
      --neg_degree_[u];
      --neg_degree_[w];
    }
    ++open_degree_[u];
    ++open_degree_[w];
    VertexMask around_w = decided_[w];
    while (around_w) {
      const int y = std::countr_zero(around_w);
      around_w &= around_w - 1;
      shift_pair(u, y, -s * sign_[idx(w, y)], -1);
    }
    VertexMask around_u = decided_[u];
    while (around_u) {
      const int y = std::countr_zero(around_u);
      around_u &= around_u - 1;
      shift_pair(w, y, -s * sign_[idx(u, y)], -1);
    }
  }

  PairType pair_type(int x, int z) const {
    if (((p_.nb[x] >> z) & 1U) == 0) return kApart;
    const int s = sign_[idx(x, z)];
    return s > 0 ? kPositive : (s < 0 ? kNegative : kUndecided);
  }

  static bool reachable(int target, int partial, int rem) {
    const int gap = target - partial;
    return std::abs(gap) <= rem && (gap - rem) % 2 == 0;
  }

  bool check_pair(int x, int z) {
    const int partial = partial_[idx(x, z)];
    const int rem = rem_[idx(x, z)];
    const PairType t = pair_type(x, z);
    if (t == kUndecided) {
      const bool pos_ok = !classes_[kPositive] || reachable(*classes_[kPositive], partial, rem);
      const bool neg_ok = !classes_[kNegative] || reachable(*classes_[kNegative], partial, rem);
      return pos_ok || neg_ok;
    }
    if (classes_[t]) return reachable(*classes_[t], partial, rem);
    if (rem == 0) return fix_class(t, partial);
    if (p_.filtered) {
      return std::any_of(allowed_[t].begin(), allowed_[t].end(),
                         [&](int v) { return reachable(v, partial, rem); });
    }
    return true;
  }

  // Records the value of a pair class, then rechecks that class.
  bool fix_class(int t, int value) {
    classes_[t] = value;
    trail_.push_back(t);
    if (p_.filtered) {
      const bool consistent = std::any_of(p_.filter.begin(), p_.filter.end(), [&](const ClassValues& f) {
        for (int i = 0; i < 3; ++i) {
          if (classes_[i] && f[i] != classes_[i]) return false;
        }
        return true;
      });
      if (!consistent) return false;
    }
    for (int x = 0; x < n_; ++x) {
      for (int z = x + 1; z < n_; ++z) {
        if (pair_type(x, z) == t && !reachable(value, partial_[idx(x, z)], rem_[idx(x, z)])) {
          return false;
        }
      }
    }
    return true;
  }

  bool check_all_pairs() {
    for (int x = 0; x < n_; ++x) {
      for (int z = x + 1; z < n_; ++z) {
        if (!check_pair(x, z)) return false;
      }
    }
    return true;
  }

  void visit_leaf() {
    ++result_.stats.leaves;
    std::vector<VertexMask> pos(n_, 0);
    std::vector<VertexMask> neg(n_, 0);
    for (const Edge& e : p_.edges) {
      const int a = p_.to_original[e.u];
      const int b = p_.to_original[e.v];
      auto& rows = sign_[idx(e.u, e.v)] > 0 ? pos : neg;
      rows[a] |= bit(b);
      rows[b] |= bit(a);
    }
    SignedGraph g = SignedGraph::from_masks(std::move(pos), std::move(neg));
    const auto params = extract_params(g);
    if (!params) {
      ++result_.stats.leaves_rejected;
      return;
    }
    if (p_.filtered) {
      const ClassValues got{params->a, params->b, params->c};
      if (std::find(p_.filter.begin(), p_.filter.end(), got) == p_.filter.end()) {
        ++result_.stats.leaves_rejected;
        return;
      }
    }
    ++result_.stats.raw_hits;
    RawHit hit{g, *params, canonical_form(g), {}, 0, g.edges()};
    hit.key = hit.form;
    if (cfg_.dedupe == Dedupe::UpToIsoAndNegation) {
      hit.key = std::min(hit.form, canonical_form(g, SignRoles::Exchanged));
    }
    if (cfg_.dedupe == Dedupe::None) {
      result_.hits.push_back(std::move(hit));
      return;
    }
    auto it = local_.find(hit.key);
    if (it == local_.end()) {
      local_.emplace(hit.key, result_.hits.size());
      result_.hits.push_back(std::move(hit));
    } else if (better_representative(hit, result_.hits[it->second])) {
      result_.hits[it->second] = std::move(hit);
    }
  }

  const Problem& p_;
  const SearchConfig& cfg_;
  SharedBudget& budget_;
  int n_;
  int m_;
  std::vector<std::int8_t> sign_;
  std::vector<std::int16_t> partial_;
  std::vector<std::int16_t> rem_;
  std::vector<VertexMask> decided_;
  std::vector<VertexMask> negative_;
  std::vector<int> neg_degree_;
  std::vector<int> open_degree_;
  ClassValues classes_{};
  std::array<std::vector<int>, 3> allowed_;
  std::vector<int> trail_;
  std::vector<std::size_t> trail_marks_;
  std::vector<Edge> touched_;
  std::vector<std::int8_t> current_;
  bool root_ok_ = true;
  int prefix_depth_ = -1;
  std::vector<std::vector<std::int8_t>>* prefixes_ = nullptr;
  std::map<CanonicalForm, std::size_t> local_;
  TaskResult result_;
};

void accumulate(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.leaves += from.leaves;
  into.pruned_degree += from.pruned_degree;
  into.pruned_entry += from.pruned_entry;
  into.leaves_rejected += from.leaves_rejected;
  into.raw_hits += from.raw_hits;
}

struct Task {
  int problem = 0;
  std::vector<std::int8_t> prefix;
};

// Searches every problem and fills hits, stats and per-graph outcomes.
// `outcome_of[i]` is the index in report.graphs for problems[i].
void run_problems(const std::vector<Problem>& problems, const std::vector<std::size_t>& outcome_of,
                  const SearchConfig& cfg, SearchReport& report) {
  SharedBudget budget;
  budget.limit = cfg.node_budget;
  std::vector<Task> tasks;
  std::vector<TaskResult> split_results;
  for (int i = 0; i < static_cast<int>(problems.size()); ++i) {
    const Problem& problem = problems[i];
    if (problem.excluded_by_filter()) continue;
    Explorer splitter(problem, cfg, budget);
    if (!splitter.root_ok()) {
      split_results.push_back(std::move(splitter.result()));
      continue;
    }
    std::vector<std::vector<std::int8_t>> prefixes;
    splitter.collect_prefixes(std::max(cfg.split_depth, 0), prefixes);
    for (auto& prefix : prefixes) tasks.push_back({i, std::move(prefix)});
    TaskResult& res = splitter.result();
    report.graphs[outcome_of[i]].nodes += res.stats.nodes;
    if (res.aborted) report.graphs[outcome_of[i]].exhaustive = false;
    split_results.push_back(std::move(res));
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      Explorer explorer(problems[tasks[t].problem], cfg, budget);
      explorer.run_from(tasks[t].prefix);
      results[t] = std::move(explorer.result());
      for (RawHit& hit : results[t].hits) hit.source = tasks[t].problem;
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<RawHit> merged;
  std::map<CanonicalForm, std::size_t> by_key;
  std::vector<std::map<CanonicalForm, bool>> keys_per_problem(problems.size());
  for (const TaskResult& res : split_results) {
    accumulate(report.stats, res.stats);
    if (res.aborted) report.exhaustive = false;
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    TaskResult& res = results[t];
    accumulate(report.stats, res.stats);
    GraphOutcome& outcome = report.graphs[outcome_of[tasks[t].problem]];
    outcome.nodes += res.stats.nodes;
    if (res.aborted) {
      report.exhaustive = false;
      outcome.exhaustive = false;
    }
    for (RawHit& hit : res.hits) {
      keys_per_problem[hit.source][hit.key] = true;
      if (cfg.dedupe == Dedupe::None) {
        merged.push_back(std::move(hit));
        continue;
      }
      auto it = by_key.find(hit.key);
      if (it == by_key.end()) {
        by_key.emplace(hit.key, merged.size());
        merged.push_back(std::move(hit));
      } else if (better_representative(hit, merged[it->second])) {
        merged[it->second] = std::move(hit);
      }
    }
  }
  if (budget.stop.load()) report.exhaustive = false;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    report.graphs[outcome_of[i]].classes = keys_per_problem[i].size();
  }
  std::sort(merged.begin(), merged.end(), better_representative);
  for (RawHit& hit : merged) {
    report.hits.push_back({std::move(hit.graph), hit.params, classify(hit.params), std::move(hit.form),
                           problems[hit.source].name});
  }
}

}  // namespace

std::uint64_t enumerate_negative_subgraphs(const Graph& g, int k,
                                           const std::function<bool(const std::vector<Edge>&)>& visit) {
  require_degree(g, k);
  const std::vector<Edge> edges = g.edges();
  const int n = g.order();
  std::vector<int> chosen_degree(n, 0);
  std::vector<int> open_degree(n);
  for (int v = 0; v < n; ++v) open_degree[v] = g.degree(v);
  std::vector<Edge> chosen;
  std::uint64_t count = 0;
  bool stopped = false;

  const std::function<void(std::size_t)> step = [&](std::size_t e) {
    if (stopped) return;
    if (e == edges.size()) {
      ++count;
      if (!visit(chosen)) stopped = true;
      return;
    }
    const int u = edges[e].u;
    const int v = edges[e].v;
    --open_degree[u];
    --open_degree[v];
    if (chosen_degree[u] < k && chosen_degree[v] < k) {
      ++chosen_degree[u];
      ++chosen_degree[v];
      chosen.push_back(edges[e]);
      step(e + 1);
      chosen.pop_back();
      --chosen_degree[u];
      --chosen_degree[v];
    }
    if (chosen_degree[u] + open_degree[u] >= k && chosen_degree[v] + open_degree[v] >= k) {
      step(e + 1);
    }
    ++open_degree[u];
    ++open_degree[v];
  };
  step(0);
  return count;
}

SearchReport search_srsg(const Graph& g, const SearchConfig& cfg, const std::string& name) {
  const auto r = g.regular_degree();
  if (!r) throw Error(ErrorKind::DegreeMismatch, "underlying graph " + name + " is not regular");
  if (!negative_degree_for(*r, cfg.rho)) {
    throw Error(ErrorKind::DegreeMismatch, "net-degree " + std::to_string(cfg.rho) +
                                               " impossible in a " + std::to_string(*r) +
                                               "-regular graph");
  }
  if (cfg.require_connected && !g.connected()) {
    throw Error(ErrorKind::NotConnected, "underlying graph " + name + " is disconnected");
  }
  return search_graphs({{name, g}}, cfg);
}

SearchReport search_graphs(const std::vector<NamedGraph>& graphs, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  std::vector<Problem> problems;
  std::vector<std::size_t> outcome_of;
  for (const NamedGraph& item : graphs) {
    GraphOutcome outcome{item.name, "searched", true, 0, 0};
    const auto r = item.graph.regular_degree();
    if (!r || !negative_degree_for(*r, cfg.rho)) {
      outcome.status = "skipped-degree";
    } else if (cfg.require_connected && !item.graph.connected()) {
      outcome.status = "skipped-disconnected";
    } else {
      problems.emplace_back(item.name, item.graph, cfg.rho, cfg.param_filter);
      outcome_of.push_back(report.graphs.size());
    }
    report.graphs.push_back(std::move(outcome));
  }
  run_problems(problems, outcome_of, cfg, report);
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SearchReport search_catalog(const std::string& dir, const SearchConfig& cfg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::Io, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".g6") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> graphs;
  for (const auto& file : files) {
    const auto parsed = read_graph6_file(file.string());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      graphs.push_back({file.filename().string() + ":" + std::to_string(i + 1), parsed[i]});
    }
  }
  return search_graphs(graphs, cfg);
}

}  // namespace srsgkit
