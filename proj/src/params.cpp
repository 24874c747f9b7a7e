#include "srsgkit/params.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "srsgkit/error.hpp"

namespace srsgkit {

namespace {

struct Range {
  int lo;
  int hi;
};

Range clamp(Range base, const std::optional<int>& fixed, const std::optional<int>& lo,
            const std::optional<int>& hi) {
  if (fixed) {
    base.lo = std::max(base.lo, *fixed);
    base.hi = std::min(base.hi, *fixed);
  }
  if (lo) base.lo = std::max(base.lo, *lo);
  if (hi) base.hi = std::min(base.hi, *hi);
  return base;
}

bool n_allowed(const ParamQuery& q, int n) {
  if (q.n_min && n < *q.n_min) return false;
  if (q.even_n && n % 2 != 0) return false;
  if (q.n_divisor && *q.n_divisor != 0 && n % *q.n_divisor != 0) return false;
  return true;
}

bool less_candidate(const ParamCandidate& x, const ParamCandidate& y) {
  const bool xf = x.kind == CandidateKind::FreeFamily;
  const bool yf = y.kind == CandidateKind::FreeFamily;
  if (xf != yf) return yf;
  return std::tie(x.params.n, x.params.a, x.params.b, x.params.c) <
         std::tie(y.params.n, y.params.a, y.params.b, y.params.c);
}

}  // namespace

std::vector<ParamCandidate> feasible_param_sets(const ParamQuery& q) {
  const int r = q.r;
  if (r < 1 || std::abs(q.rho) > r || (r - q.rho) % 2 != 0) {
    throw Error(ErrorKind::VacuousQuery, "no r-regular graph has degree " + std::to_string(r) +
                                             " and net-degree " + std::to_string(q.rho));
  }
  const int n_max = q.n_max.value_or(2 * r + 5);
  const Range n_range{r + 1, n_max};
  // With rho = r there is no negative edge (b undefined); rho = -r has no
  // positive edge (a undefined).
  const bool a_defined = q.rho != -r;
  const bool b_defined = q.rho != r;
  const Range a_range = clamp({-(r - 1), r - 1}, q.fix_a, q.a_min, q.a_max);
  const Range b_range = clamp({-(r - 1), r - 1}, q.fix_b, std::nullopt, std::nullopt);
  const Range c_range = clamp({-r, r}, q.fix_c, std::nullopt, std::nullopt);
  if (n_range.lo > n_range.hi || (a_defined && a_range.lo > a_range.hi) ||
      (b_defined && b_range.lo > b_range.hi) || c_range.lo > c_range.hi) {
    throw Error(ErrorKind::EmptyRange, "parameter ranges are empty");
  }

  std::vector<ParamCandidate> out;
  std::vector<std::optional<int>> a_values;
  if (a_defined) {
    for (int a = a_range.lo; a <= a_range.hi; ++a) a_values.emplace_back(a);
  } else {
    a_values.emplace_back(std::nullopt);
  }
  std::vector<std::optional<int>> b_values;
  if (b_defined) {
    for (int b = b_range.lo; b <= b_range.hi; ++b) b_values.emplace_back(b);
  } else {
    b_values.emplace_back(std::nullopt);
  }

  for (const auto& a : a_values) {
    for (const auto& b : b_values) {
      // The c = 0 family and the complete graph share one condition since
      // c(n - r - 1) vanishes for both.
      const SrsgParams probe{0, r, a, b, 0};
      const bool free = c_range.lo <= 0 && 0 <= c_range.hi && net_degree_identity_holds(probe, q.rho);
      if (free) {
        out.push_back({probe, CandidateKind::FreeFamily});
        if (n_allowed(q, r + 1) && !q.fix_c) {
          out.push_back({{r + 1, r, a, b, std::nullopt}, CandidateKind::Concrete});
        }
      }
      for (int n = std::max(n_range.lo, r + 2); n <= n_range.hi; ++n) {
        if (!n_allowed(q, n)) continue;
        for (int c = c_range.lo; c <= c_range.hi; ++c) {
          const SrsgParams p{n, r, a, b, c};
          if (!net_degree_identity_holds(p, q.rho)) continue;
          out.push_back({p, c == 0 ? CandidateKind::FreeInstance : CandidateKind::Concrete});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), less_candidate);
  return out;
}

std::pair<SrsgParams, int> negation_dual(const SrsgParams& p, int rho) {
  return {{p.n, p.r, p.b, p.a, p.c}, -rho};
}

}  // namespace srsgkit
