#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "srsgkit/catalog.hpp"
#include "srsgkit/error.hpp"
#include "srsgkit/iso.hpp"

using namespace srsgkit;

namespace {

// The 4x4 rook graph signing: rows positive, columns negative. Vertex
// (row, col) is 4*row + col, so the transpose swaps the two sign classes.
std::vector<int> transpose_map() {
  std::vector<int> map(16);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) map[4 * row + col] = 4 * col + row;
  return map;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(99);
  for (const std::string& name : list_names()) {
    const SignedGraph& g = build(name).graph;
    const CanonicalForm form = canonical_form(g);
    CHECK(form.bytes.front() == g.order());
    CHECK(form.bytes.size() == 1 + static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    for (int i = 0; i < 100; ++i) {
      const SignedGraph h = oracle::relabel(g, oracle::random_permutation(g.order(), rng));
      REQUIRE_MESSAGE(canonical_form(h) == form, name);
    }
  }
}

TEST_CASE("canonical form separates the catalog") {
  CHECK(canonical_form(build("S2_8").graph) != canonical_form(build("S3_8").graph));
  CHECK(canonical_form(build("S4_8").graph) != canonical_form(negation(build("S4_8").graph)));
  std::set<CanonicalForm> forms;
  for (const std::string& name : list_names()) forms.insert(canonical_form(build(name).graph));
  CHECK(forms.size() == list_names().size());
}

TEST_CASE("exchanged roles give the form of the negation") {
  std::mt19937_64 rng(3);
  for (const std::string& name : list_names()) {
    const SignedGraph& g = build(name).graph;
    CHECK(canonical_form(g, SignRoles::Exchanged) == canonical_form(negation(g)));
  }
  for (int i = 0; i < 100; ++i) {
    const SignedGraph g = oracle::random_signed(8, 0.5, rng);
    CHECK(canonical_form(g, SignRoles::Exchanged) == canonical_form(negation(g)));
  }
}

TEST_CASE("canonical labeling reproduces the form") {
  const SignedGraph& g = build("S_9").graph;
  const std::vector<int> lab = canonical_labeling(g);
  std::vector<int> inverse(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) inverse[lab[i]] = static_cast<int>(i);
  const SignedGraph relabelled = permute(g, inverse);
  CHECK(canonical_form(relabelled) == canonical_form(g));
  std::vector<std::uint8_t> expected{static_cast<std::uint8_t>(g.order())};
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const int s = relabelled.sign(u, v);
      expected.push_back(s > 0 ? 2 : (s < 0 ? 1 : 0));
    }
  CHECK(canonical_form(g).bytes == expected);
}

TEST_CASE("isomorphism decisions with verified witnesses") {
  const SignedGraph g1 = build_variant("G1_8");
  const SignedGraph g2 = build_variant("G2_8");
  CHECK(g1 != g2);
  const IsoResult r = are_isomorphic(g1, g2);
  REQUIRE(r.isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(oracle::relabel(g1, *r.witness) == g2);

  CHECK_FALSE(are_isomorphic(build("S2_8").graph, build("S4_8").graph).isomorphic);
  CHECK_FALSE(are_isomorphic(build("S2_8").graph, build("S3_8").graph).isomorphic);
  CHECK_FALSE(are_isomorphic(build("S4_8").graph, negation(build("S4_8").graph)).isomorphic);

  std::mt19937_64 rng(17);
  for (const std::string& name : list_names()) {
    const SignedGraph& g = build(name).graph;
    const SignedGraph h = oracle::relabel(g, oracle::random_permutation(g.order(), rng));
    const IsoResult res = are_isomorphic(g, h);
    REQUIRE(res.isomorphic);
    CHECK(oracle::relabel(g, *res.witness) == h);
  }
}

TEST_CASE("graphs with different parameters are never isomorphic") {
  const auto& names = list_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const CatalogEntry& x = build(names[i]);
      const CatalogEntry& y = build(names[j]);
      if (x.expected_params != y.expected_params) {
        CHECK_FALSE(are_isomorphic(x.graph, y.graph).isomorphic);
      }
    }
  }
}

TEST_CASE("the 16-vertex graph is isomorphic to its negation") {
  const SignedGraph& s16 = build("S_16").graph;
  const SignedGraph neg = negation(s16);
  CHECK(oracle::relabel(s16, transpose_map()) == neg);
  const IsoResult r = are_isomorphic(s16, neg);
  REQUIRE(r.isomorphic);
  CHECK(oracle::relabel(s16, *r.witness) == neg);
  CHECK(canonical_form(s16) == canonical_form(s16, SignRoles::Exchanged));
}

TEST_CASE("random pairs agree with a brute-force isomorphism test") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const SignedGraph g = oracle::random_signed(6, 0.5, rng);
    const SignedGraph h = trial % 2 ? oracle::relabel(g, oracle::random_permutation(6, rng))
                                    : oracle::random_signed(6, 0.5, rng);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    bool brute = false;
    do {
      brute = oracle::relabel(g, perm) == h;
    } while (!brute && std::next_permutation(perm.begin(), perm.end()));
    CHECK(are_isomorphic(g, h).isomorphic == brute);
    CHECK((canonical_form(g) == canonical_form(h)) == brute);
  }
}

TEST_CASE("permute validates its argument") {
  const SignedGraph& g = build("S2_8").graph;
  const std::vector<int> bad = {0, 0, 1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(permute(g, bad), Error);
  const std::vector<int> short_perm = {0, 1};
  CHECK_THROWS_AS(permute(g, short_perm), Error);
}

TEST_CASE("hex round trip") {
  const CanonicalForm form = canonical_form(build("S1_9").graph);
  CHECK(CanonicalForm::from_hex(form.hex()) == form);
  CHECK_THROWS_AS(CanonicalForm::from_hex("abc"), Error);
  CHECK_THROWS_AS(CanonicalForm::from_hex("zz"), Error);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(Graph::complete(4)) == 24);
  CHECK(automorphism_count(build_underlying("K66")) == 1036800);
  CHECK(automorphism_count(oracle::petersen()) == 120);
  CHECK(oracle::automorphisms(oracle::petersen()) == 120);
  CHECK(automorphism_count(build_underlying("G8")) == oracle::automorphisms(build_underlying("G8")));
  CHECK(automorphism_count(build_underlying("K333")) == 1296);
  CHECK(automorphism_count(build_underlying("GQ22")) == 720);
  CHECK_THROWS_AS(automorphism_count(Graph::complete(17)), Error);
}

TEST_CASE("signed automorphism counts agree with a permutation scan") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const SignedGraph g = oracle::random_signed(7, 0.5, rng);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5, 6};
    std::uint64_t brute = 0;
    do {
      brute += oracle::relabel(g, perm) == g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(automorphism_count(g) == brute);
  }
  CHECK(automorphism_count(SignedGraph::all_positive(Graph::complete(4))) == 24);
}
