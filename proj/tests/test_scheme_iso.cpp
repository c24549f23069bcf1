#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hadscheme/actions.hpp"
#include "hadscheme/builder.hpp"
#include "hadscheme/catalogue.hpp"
#include "hadscheme/scheme_iso.hpp"
#include "helpers.hpp"

using namespace hadscheme;

static void check_witness(const AssociationScheme &a, const AssociationScheme &b,
                          const SchemeIso &w) {
  REQUIRE((int)w.point_map.size() == a.n);
  std::vector<char> seen(a.n, 0);
  for (int x : w.point_map) {
    REQUIRE(x >= 0);
    REQUIRE(x < a.n);
    CHECK(!seen[x]);
    seen[x] = 1;
  }
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      CHECK(b.rel_at(w.point_map[x], w.point_map[y]) ==
            w.relation_map[a.rel_at(x, y)]);
}

TEST_CASE("scheme is isomorphic to itself") {
  for (const auto &cs : order4_schemes()) {
    auto w = scheme_isomorphic(cs.scheme, cs.scheme);
    REQUIRE(w.has_value());
    check_witness(cs.scheme, cs.scheme, *w);
  }
}

TEST_CASE("transpose cover is isomorphic") {
  auto base = order4_schemes()[1].scheme;
  auto h0 = order4_hadamards()[0];
  auto a = build_cover_scheme(base, h0).scheme;
  auto b = build_cover_scheme(base, h0.transposed()).scheme;
  auto w = scheme_isomorphic(a, b);
  REQUIRE(w.has_value());
  check_witness(a, b, *w);
}

TEST_CASE("dissimilar matrices give non-isomorphic covers") {
  auto base = order4_schemes()[1].scheme;
  auto hs = order4_hadamards();
  auto a = build_cover_scheme(base, hs[0]).scheme;
  auto b = build_cover_scheme(base, hs[2]).scheme;
  CHECK(!scheme_isomorphic(a, b).has_value());
}

TEST_CASE("point relabeling is always recovered") {
  std::mt19937_64 rng(4242);
  auto a = build_cover_scheme(order4_schemes()[2].scheme, order4_hadamards()[1])
               .scheme;
  for (int trial = 0; trial < 5; ++trial) {
    Perm p = identity_perm(a.n);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> rel(a.n * a.n);
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y) rel[p[x] * a.n + p[y]] = a.rel_at(x, y);
    auto b = verify_scheme(a.n, rel);
    auto w = scheme_isomorphic(a, b);
    REQUIRE(w.has_value());
    check_witness(a, b, *w);
  }
}

TEST_CASE("order cap") {
  // 33 points exceeds the documented search cap
  std::vector<int> rel(33 * 33, 1);
  for (int i = 0; i < 33; ++i) rel[i * 33 + i] = 0;
  auto big = verify_scheme(33, rel);
  CHECK_THROWS_WITH_AS(scheme_isomorphic(big, big),
                       doctest::Contains("OrderTooLarge"), Error);
  std::vector<int> rel17(17 * 17, 1);
  for (int i = 0; i < 17; ++i) rel17[i * 17 + i] = 0;
  CHECK_THROWS_AS(scheme_aut_order(verify_scheme(17, rel17)), Error);
}

TEST_CASE("automorphism counts against brute force") {
  CHECK(scheme_aut_order(trivial_scheme(4)) == 24);
  CHECK(scheme_aut_order(thin_group_scheme(cyclic_table(4))) == 4);
  for (const auto &cs : order4_schemes())
    CHECK(scheme_aut_order(cs.scheme) == testutil::brute_aut_order(cs.scheme));
  for (const auto &cs : order8_schemes())
    CHECK(scheme_aut_order(cs.scheme) == testutil::brute_aut_order(cs.scheme));
}

TEST_CASE("aut order of the smallest built scheme matches brute force") {
  auto cs = build_cover_scheme(trivial_scheme(2), sylvester(1));
  CHECK(cs.scheme.n == 8);
  auto brute = testutil::brute_aut_order(cs.scheme);
  CHECK(scheme_aut_order(cs.scheme) == brute);
  CHECK(brute == 16);
}

// Relation-preserving point maps of a cover either keep both sides or swap
// them, act on each side through a base automorphism, and xor phases.  So
// the group order equals the number of (sigma0, sigma1, f, g) with both
// permutations base automorphisms and f(x)+g(y) sign-twisting H (or H^T for
// the side-swapping family) back onto itself.
static std::uint64_t structured_cover_aut_count(const AssociationScheme &base,
                                                const HadamardMatrix &h) {
  auto aut = aut_group(base);
  int n = base.n;
  std::uint64_t total = 0;
  for (int swap_sides = 0; swap_sides < 2; ++swap_sides)
    for (const auto &s0 : aut.elements)
      for (const auto &s1 : aut.elements)
        for (unsigned f = 0; f < (1u << n); ++f) {
          // g is forced by the first row once f and the permutations are set
          unsigned g = 0;
          for (int y = 0; y < n; ++y) {
            int lhs = swap_sides ? h.entry(s1[y], s0[0]) : h.entry(s0[0], s1[y]);
            int rhs = h.entry(0, y) * ((f >> 0) & 1 ? -1 : 1);
            if (lhs != rhs) g |= 1u << y;
          }
          bool ok = true;
          for (int x = 1; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
              int lhs =
                  swap_sides ? h.entry(s1[y], s0[x]) : h.entry(s0[x], s1[y]);
              int rhs = h.entry(x, y) * ((f >> x) & 1 ? -1 : 1) *
                        ((g >> y) & 1 ? -1 : 1);
              if (lhs != rhs) ok = false;
            }
          if (ok) ++total;
        }
  return total;
}

TEST_CASE("aut order of order-16 built schemes") {
  auto hs = order4_hadamards();
  for (int which : {1, 3}) {
    auto base = order4_schemes()[which].scheme;
    for (int k = 0; k < 2; ++k) {
      auto a = build_cover_scheme(base, hs[k]).scheme;
      CHECK(scheme_aut_order(a) == structured_cover_aut_count(base, hs[k]));
    }
  }
}

TEST_CASE("isomorphism search agrees with exhaustive point maps on order 8") {
  auto d4 = thin_group_scheme(dihedral8_table());
  auto q8 = thin_group_scheme(quaternion8_table());
  auto c8 = thin_group_scheme(cyclic_table(8));

  auto brute_iso = [](const AssociationScheme &a, const AssociationScheme &b) {
    Perm p = identity_perm(a.n);
    do {
      std::vector<int> lmap(a.r, -1);
      bool ok = true;
      for (int x = 0; x < a.n && ok; ++x)
        for (int y = 0; y < a.n && ok; ++y) {
          int s = a.rel_at(x, y), t = b.rel_at(p[x], p[y]);
          if (lmap[s] < 0)
            lmap[s] = t;
          else
            ok = lmap[s] == t;
        }
      if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };

  CHECK(scheme_isomorphic(d4, q8).has_value() == brute_iso(d4, q8));
  CHECK(scheme_isomorphic(d4, c8).has_value() == brute_iso(d4, c8));
  CHECK(scheme_isomorphic(c8, c8).has_value());
  CHECK(!scheme_isomorphic(d4, trivial_scheme(8)).has_value());
}

TEST_CASE("cross validation with the similarity test") {
  auto hs = order4_hadamards();
  for (const auto &cs : order4_schemes()) {
    std::vector<AssociationScheme> covers;
    for (const auto &h : hs)
      covers.push_back(build_cover_scheme(cs.scheme, h).scheme);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        bool sim = similar_check(hs[i], hs[j], cs.scheme);
        auto w = scheme_isomorphic(covers[i], covers[j]);
        CHECK(sim == w.has_value());
        if (w) check_witness(covers[i], covers[j], *w);
      }
  }
}
