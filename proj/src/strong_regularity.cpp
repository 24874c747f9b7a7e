#include "srsgkit/strong_regularity.hpp"

#include <cstdlib>
#include <sstream>

#include "srsgkit/error.hpp"

namespace srsgkit {

namespace {

std::string entry_text(const std::optional<int>& x) { return x ? std::to_string(*x) : "U"; }

// Records `value` into `slot`; false when it contradicts an earlier value.
bool settle(std::optional<int>& slot, int value) {
  if (!slot) {
    slot = value;
    return true;
  }
  return *slot == value;
}

// t walks of length 2 can realise the value x only when |x| <= t and
// x has the parity of t.
bool realisable(int t, int x) { return std::abs(x) <= t && (t - x) % 2 == 0; }

}  // namespace

std::string to_string(const SrsgParams& p) {
  std::ostringstream out;
  out << '(' << p.n << ',' << p.r << ',' << entry_text(p.a) << ',' << entry_text(p.b) << ','
      << entry_text(p.c) << ')';
  return out.str();
}

std::string_view to_string(SrsgClass k) {
  switch (k) {
    case SrsgClass::NotSRSG: return "NotSRSG";
    case SrsgClass::Homogeneous: return "Homogeneous";
    case SrsgClass::C1: return "C1";
    case SrsgClass::C2: return "C2";
    case SrsgClass::C3: return "C3";
    case SrsgClass::C4: return "C4";
    case SrsgClass::C5: return "C5";
  }
  return "NotSRSG";
}

std::optional<SrsgParams> extract_params(const SignedGraph& g) {
  const int n = g.order();
  const int r = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  if (r == 0) return std::nullopt;
  SrsgParams p{n, r, std::nullopt, std::nullopt, std::nullopt};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int value = two_walk_counts(g, u, v).value();
      const int s = g.sign(u, v);
      std::optional<int>& slot = s > 0 ? p.a : (s < 0 ? p.b : p.c);
      if (!settle(slot, value)) return std::nullopt;
    }
  }
  const bool homogeneous = !p.a || !p.b;
  if (homogeneous && !p.c) return std::nullopt;
  return p;
}

SrsgClass classify(const SrsgParams& p) {
  if (!p.a || !p.b) return SrsgClass::Homogeneous;
  const int a = *p.a;
  const int b = *p.b;
  const bool complete = !p.c;
  if (a == -b) {
    if (complete || *p.c != 0) return SrsgClass::C1;
    return SrsgClass::C2;
  }
  if (complete || 2 * *p.c == a + b) return SrsgClass::C3;
  if (*p.c == 0) return SrsgClass::C4;
  return SrsgClass::C5;
}

SrsgClass classify(const SignedGraph& g) {
  const auto p = extract_params(g);
  return p ? classify(*p) : SrsgClass::NotSRSG;
}

bool satisfies_square_identity(const SignedGraph& g, const SrsgParams& p) {
  if (p.n != g.order()) return false;
  const std::int64_t a = p.a.value_or(0);
  const std::int64_t b = p.b.value_or(0);
  const std::int64_t c = p.c.value_or(0);
  const std::int64_t r = p.r;
  const IntMatrix sq = square_entries(g);
  for (int u = 0; u < p.n; ++u) {
    for (int v = 0; v < p.n; ++v) {
      const std::int64_t s = g.sign(u, v);
      const std::int64_t lhs = 2 * sq.at(u, v) + (b - a) * s;
      std::int64_t rhs = 2 * c;
      if (u == v) rhs += 2 * (r - c);
      if (s != 0) rhs += a + b - 2 * c;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool net_degree_identity_holds(const SrsgParams& p, int rho) {
  const std::int64_t a = p.a.value_or(0);
  const std::int64_t b = p.b.value_or(0);
  const std::int64_t c = p.c.value_or(0);
  const std::int64_t lhs = 2 * std::int64_t{rho} * rho + (b - a) * rho;
  const std::int64_t rhs = (a + b) * p.r + 2 * c * (p.n - p.r - 1) + 2 * std::int64_t{p.r};
  return lhs == rhs;
}

bool srg_relation_holds(int n, int r, int e, int f) {
  return std::int64_t{r} * (r - e - 1) == std::int64_t{n - r - 1} * f;
}

ParityReport negative_walk_parity(const SignedGraph& g) {
  ParityReport report;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (two_walk_counts(g, u, v).negative % 2 != 0) report.violations.push_back({u, v});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

bool satisfies_quadratic(const SignedGraph& g, int s, int p) {
  const IntMatrix sq = square_entries(g);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      const std::int64_t entry =
          sq.at(u, v) + std::int64_t{s} * g.sign(u, v) + (u == v ? std::int64_t{p} : 0);
      if (entry != 0) return false;
    }
  }
  return true;
}

std::vector<BigInt> characteristic_polynomial(const SignedGraph& g) {
  const int n = g.order();
  if (n > 32) {
    throw Error(ErrorKind::SizeExceeded,
                "characteristic polynomial supports at most 32 vertices, got " + std::to_string(n));
  }
  using Matrix = std::vector<std::vector<BigInt>>;
  const auto product = [n](const Matrix& x, const Matrix& y) {
    Matrix out(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
      }
    }
    return out;
  };
  Matrix a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = g.sign(i, j);
  }
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k.
  std::vector<BigInt> coeffs(n + 1);
  coeffs[0] = 1;
  Matrix m(n, std::vector<BigInt>(n));
  for (int k = 1; k <= n; ++k) {
    Matrix next = product(a, m);
    for (int i = 0; i < n; ++i) next[i][i] += coeffs[k - 1];
    m = std::move(next);
    const Matrix am = product(a, m);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += am[i][i];
    coeffs[k] = -trace / k;
  }
  return coeffs;
}

bool underlying_feasible(const Graph& g, const SrsgParams& p) {
  const auto degree = g.regular_degree();
  if (!degree || *degree != p.r || g.order() != p.n) {
    throw Error(ErrorKind::DegreeMismatch,
                "underlying graph is not " + std::to_string(p.r) + "-regular on " +
                    std::to_string(p.n) + " vertices");
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const int t = popcount(g.neighbours(u) & g.neighbours(v));
      if (g.adjacent(u, v)) {
        const bool fits_a = !p.a || realisable(t, *p.a);
        const bool fits_b = !p.b || realisable(t, *p.b);
        if (!fits_a && !fits_b) return false;
      } else if (p.c && !realisable(t, *p.c)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace srsgkit
