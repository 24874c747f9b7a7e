#include <doctest.h>

#include <algorithm>
#include <set>

#include "reference_data.hpp"
#include "srsgkit/error.hpp"
#include "srsgkit/params.hpp"

using namespace srsgkit;

namespace {

std::vector<SrsgParams> params_of(const std::vector<ParamCandidate>& candidates, bool with_instances) {
  std::vector<SrsgParams> out;
  for (const ParamCandidate& c : candidates) {
    if (c.kind == CandidateKind::FreeInstance && !with_instances) continue;
    out.push_back(c.params);
  }
  return out;
}

bool contains(const std::vector<SrsgParams>& list, const SrsgParams& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

// Straight scan of the integer box with the doubled net-degree identity
// 2 rho^2 + (b - a) rho = (a + b) r + 2c (n - r - 1) + 2r.
std::set<SrsgParams> box_scan(int r, int rho, int n_max) {
  std::set<SrsgParams> out;
  for (int n = r + 2; n <= n_max; ++n)
    for (int a = -(r - 1); a <= r - 1; ++a)
      for (int b = -(r - 1); b <= r - 1; ++b)
        for (int c = -r; c <= r; ++c) {
          const long long lhs = 2LL * rho * rho + static_cast<long long>(b - a) * rho;
          const long long rhs = static_cast<long long>(a + b) * r + 2LL * c * (n - r - 1) + 2LL * r;
          if (lhs == rhs) out.insert({n, r, a, b, c});
        }
  return out;
}

}  // namespace

TEST_CASE("net-degree 4 candidates with b = 0 and 0 <= a <= 4") {
  ParamQuery q;
  q.r = 6;
  q.rho = 4;
  q.fix_b = 0;
  q.a_min = 0;
  q.a_max = 4;
  const auto got = params_of(feasible_param_sets(q), false);
  auto want = reference::net_degree_four_candidates();
  std::vector<SrsgParams> sorted_got = got;
  std::sort(sorted_got.begin(), sorted_got.end());
  std::sort(want.begin(), want.end());
  CHECK(sorted_got == want);
  CHECK(got.size() == 12);
  CHECK(contains(got, reference::p(17, 0, 0, 1)));
  CHECK(contains(got, reference::p(12, 0, 0, 2)));
}

TEST_CASE("named sets are members") {
  ParamQuery two;
  two.r = 6;
  two.rho = 2;
  two.n_max = 25;
  const auto sets2 = params_of(feasible_param_sets(two), true);
  CHECK(contains(sets2, reference::p(9, -1, 3, -2)));
  for (const SrsgParams& p : reference::net_degree_two_sets()) CHECK_MESSAGE(contains(sets2, p), to_string(p));

  two.n_min = 8;
  two.n_max = std::nullopt;
  const auto from8 = params_of(feasible_param_sets(two), true);
  CHECK(contains(from8, reference::p(15, 1, 1, -1)));
  CHECK(contains(from8, reference::p(15, 3, 1, -2)));

  ParamQuery zero;
  zero.r = 6;
  zero.rho = 0;
  zero.n_max = 25;
  const auto sets0 = params_of(feasible_param_sets(zero), true);
  for (const SrsgParams& p : reference::net_degree_zero_sets()) CHECK_MESSAGE(contains(sets0, p), to_string(p));
}

TEST_CASE("a = b = 0 at net-degree 0") {
  ParamQuery q;
  q.r = 6;
  q.rho = 0;
  q.fix_a = 0;
  q.fix_b = 0;
  const auto got = params_of(feasible_param_sets(q), false);
  const std::vector<SrsgParams> want = {reference::p(8, 0, 0, -6), reference::p(9, 0, 0, -3),
                                        reference::p(10, 0, 0, -2), reference::p(13, 0, 0, -1)};
  CHECK(got == want);
}

TEST_CASE("a set beyond the c bound is excluded") {
  const SrsgParams p = reference::out_of_bound_set();
  CHECK(net_degree_identity_holds(p, 2));
  ParamQuery q;
  q.r = 6;
  q.rho = 2;
  q.n_max = 25;
  CHECK_FALSE(contains(params_of(feasible_param_sets(q), true), p));
}

TEST_CASE("enumeration matches a brute-force box scan") {
  for (const int r : {3, 4, 5, 6}) {
    for (int rho = -r; rho <= r; rho += 2) {
      if (rho == r || rho == -r) continue;
      ParamQuery q;
      q.r = r;
      q.rho = rho;
      const int n_max = 2 * r + 5;
      std::set<SrsgParams> got;
      for (const ParamCandidate& c : feasible_param_sets(q)) {
        if (c.kind == CandidateKind::FreeFamily) {
          CHECK(c.params.c == 0);
          continue;
        }
        CHECK(net_degree_identity_holds(c.params, rho));
        if (c.params.n == r + 1) {
          CHECK_FALSE(c.params.c.has_value());
          continue;
        }
        got.insert(c.params);
      }
      CHECK(got == box_scan(r, rho, n_max));
    }
  }
}

TEST_CASE("ordering and kinds") {
  ParamQuery q;
  q.r = 6;
  q.rho = 2;
  const auto all = feasible_param_sets(q);
  REQUIRE_FALSE(all.empty());
  bool seen_family = false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].kind == CandidateKind::FreeFamily) {
      seen_family = true;
      CHECK(all[i].params.n == 0);
    } else {
      CHECK_FALSE(seen_family);
    }
    if (i > 0 && all[i].kind != CandidateKind::FreeFamily && all[i - 1].kind != CandidateKind::FreeFamily) {
      const auto& x = all[i - 1].params;
      const auto& y = all[i].params;
      CHECK(std::tie(x.n, x.a, x.b, x.c) < std::tie(y.n, y.a, y.b, y.c));
    }
  }
  CHECK(seen_family);
  // (n,6,-1,1,0) family and its complete member.
  CHECK(std::find(all.begin(), all.end(), ParamCandidate{{0, 6, -1, 1, 0}, CandidateKind::FreeFamily}) !=
        all.end());
  CHECK(std::find(all.begin(), all.end(),
                  ParamCandidate{{7, 6, -1, 1, std::nullopt}, CandidateKind::Concrete}) != all.end());
}

TEST_CASE("side constraints") {
  ParamQuery q;
  q.r = 6;
  q.rho = 2;
  q.n_max = 30;
  q.n_divisor = 15;
  for (const ParamCandidate& c : feasible_param_sets(q)) {
    if (c.kind != CandidateKind::FreeFamily) CHECK(c.params.n % 15 == 0);
  }
  q.n_divisor = std::nullopt;
  q.even_n = true;
  for (const ParamCandidate& c : feasible_param_sets(q)) {
    if (c.kind != CandidateKind::FreeFamily) CHECK(c.params.n % 2 == 0);
  }
}

TEST_CASE("extreme net-degrees leave a class undefined") {
  ParamQuery q;
  q.r = 3;
  q.rho = 3;
  for (const ParamCandidate& c : feasible_param_sets(q)) CHECK_FALSE(c.params.b.has_value());
  const auto homogeneous = feasible_param_sets(q);
  CHECK(std::find(homogeneous.begin(), homogeneous.end(),
                  ParamCandidate{{10, 3, 0, std::nullopt, 1}, CandidateKind::Concrete}) != homogeneous.end());
  q.rho = -3;
  for (const ParamCandidate& c : feasible_param_sets(q)) CHECK_FALSE(c.params.a.has_value());
}

TEST_CASE("query errors") {
  ParamQuery q;
  q.r = 6;
  q.rho = 3;
  CHECK_THROWS_WITH_AS(feasible_param_sets(q), doctest::Contains("net-degree"), Error);
  q.rho = 8;
  CHECK_THROWS_AS(feasible_param_sets(q), Error);
  q.rho = 2;
  q.n_max = 5;
  try {
    feasible_param_sets(q);
    FAIL("expected EmptyRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyRange);
  }
  q.n_max = std::nullopt;
  q.a_min = 3;
  q.a_max = 2;
  CHECK_THROWS_AS(feasible_param_sets(q), Error);
}

TEST_CASE("negation duality") {
  CHECK(negation_dual(reference::p(8, -4, 4, 6), 2) == std::pair{reference::p(8, 4, -4, 6), -2});
  CHECK(negation_dual(reference::p(16, 2, 2, -2), 0) == std::pair{reference::p(16, 2, 2, -2), 0});
  CHECK(negation_dual(reference::p(8, 4, -4, -6), 0) == std::pair{reference::p(8, -4, 4, -6), 0});

  for (const int rho : {4, 2, 0}) {
    ParamQuery q;
    q.r = 6;
    q.rho = rho;
    ParamQuery mirrored = q;
    mirrored.rho = -rho;
    std::vector<SrsgParams> dual;
    for (const ParamCandidate& c : feasible_param_sets(q)) dual.push_back(negation_dual(c.params, rho).first);
    auto mirror = params_of(feasible_param_sets(mirrored), true);
    std::sort(dual.begin(), dual.end());
    std::sort(mirror.begin(), mirror.end());
    CHECK(dual == mirror);
  }
}
