#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "common.hpp"
#include "oracles.hpp"
#include "shadowlab/family.hpp"
#include "shadowlab/hunt.hpp"

using namespace shadowlab;
using fixtures::complete;
using fixtures::masks_of;
using fixtures::star;

TEST_CASE("vertex set construction and element access") {
  auto s = VertexSet::of({5, 1, 2});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK(s.contains(2));
  CHECK(!s.contains(3));
  CHECK(s.contains(5));
  CHECK(s.min() == 1);
  CHECK(s.max() == 5);
  CHECK(to_string(s) == "1 2 5");
  CHECK(braces(s) == "{1 2 5}");
  CHECK(braces(VertexSet{}) == "{}");

  CHECK(VertexSet::full(4) == VertexSet::of({1, 2, 3, 4}));
  CHECK(VertexSet::single(7) == VertexSet::of({7}));
  CHECK(VertexSet{}.empty());
  CHECK(s.with(3) == VertexSet::of({1, 2, 3, 5}));
  CHECK(s.without(5) == VertexSet::of({1, 2}));
  CHECK(s.with(1) == s);

  CHECK_THROWS_AS(VertexSet::single(0), DomainError);
  CHECK_THROWS_AS(VertexSet::single(65), DomainError);
  CHECK_THROWS_AS((void)s.contains(65), DomainError);
  CHECK(VertexSet::single(64).max() == 64);
}

TEST_CASE("vertex set algebra") {
  auto a = VertexSet::of({1, 2, 3});
  auto b = VertexSet::of({2, 3, 4});
  CHECK((a | b) == VertexSet::of({1, 2, 3, 4}));
  CHECK((a & b) == VertexSet::of({2, 3}));
  CHECK((a - b) == VertexSet::of({1}));
  CHECK(a.intersects(b));
  CHECK(!a.intersects(VertexSet::of({4, 5})));
  CHECK(VertexSet::of({2, 3}).subset_of(a));
  CHECK(!b.subset_of(a));
  CHECK(VertexSet{}.subset_of(a));

  std::vector<int> seen;
  for (int v : VertexSet::of({2, 5, 9})) seen.push_back(v);
  CHECK(seen == std::vector<int>{2, 5, 9});
}

TEST_CASE("order on vertex sets is colex") {
  // Reference definition: A < B iff the largest element of the symmetric
  // difference lies in B.
  auto colex_ref = [](VertexSet a, VertexSet b) {
    auto diff = (a - b) | (b - a);
    return !diff.empty() && b.contains(diff.max());
  };
  std::vector<VertexSet> all;
  for_each_subset(VertexSet::full(5),
                  [&](VertexSet s) { all.push_back(s); });
  CHECK(all.size() == 32);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK((a < b) == colex_ref(a, b));
}

TEST_CASE("k_subsets enumerates in colex order") {
  auto twos = k_subsets(VertexSet::full(5), 2);
  REQUIRE(twos.size() == 10);
  CHECK(std::is_sorted(twos.begin(), twos.end()));
  CHECK(twos.front() == VertexSet::of({1, 2}));
  CHECK(twos[1] == VertexSet::of({1, 3}));
  CHECK(twos[2] == VertexSet::of({2, 3}));
  CHECK(twos.back() == VertexSet::of({4, 5}));

  // Works over a scattered universe too.
  auto sparse = k_subsets(VertexSet::of({2, 5, 7}), 2);
  CHECK(sparse == std::vector<VertexSet>{VertexSet::of({2, 5}),
                                         VertexSet::of({2, 7}),
                                         VertexSet::of({5, 7})});

  CHECK(k_subsets(VertexSet::full(4), 0) ==
        std::vector<VertexSet>{VertexSet{}});
  CHECK(k_subsets(VertexSet::full(3), 4).empty());
}

TEST_CASE("subsets_up_to orders by size then colex") {
  auto subs = subsets_up_to(VertexSet::of({1, 2, 4}), 2);
  REQUIRE(subs.size() == 7);
  CHECK(subs[0] == VertexSet{});
  CHECK(subs[1] == VertexSet::of({1}));
  CHECK(subs[2] == VertexSet::of({2}));
  CHECK(subs[3] == VertexSet::of({4}));
  CHECK(subs[4] == VertexSet::of({1, 2}));
  CHECK(subs[5] == VertexSet::of({1, 4}));
  CHECK(subs[6] == VertexSet::of({2, 4}));
}

TEST_CASE("for_each_subset walks the full power set in mask order") {
  std::vector<VertexSet> seen;
  for_each_subset(VertexSet::of({1, 3, 4}),
                  [&](VertexSet s) { seen.push_back(s); });
  CHECK(seen.size() == 8);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front().empty());
  CHECK(seen.back() == VertexSet::of({1, 3, 4}));
  for (const auto& s : seen) CHECK(s.subset_of(VertexSet::of({1, 3, 4})));
}

TEST_CASE("family construction, normalization, equality") {
  auto f = Family::uniform(5, 2, {VertexSet::of({2, 3}), VertexSet::of({1, 2}),
                                  VertexSet::of({2, 3})});
  CHECK(f.size() == 2);  // dedup
  CHECK(f.members().front() == VertexSet::of({1, 2}));  // sorted colex
  CHECK(f.uniformity() == 2);
  CHECK(f.n() == 5);
  CHECK(f.contains(VertexSet::of({2, 3})));
  CHECK(!f.contains(VertexSet::of({1, 3})));
  CHECK(f.support() == VertexSet::of({1, 2, 3}));

  CHECK(f == Family::of(5, {VertexSet::of({1, 2}), VertexSet::of({2, 3})}));
  CHECK(f != Family::of(4, {VertexSet::of({1, 2}), VertexSet::of({2, 3})}));

  // Mixed sizes: of() keeps them, uniform() rejects them.
  auto mixed = Family::of(4, {VertexSet::of({1}), VertexSet::of({1, 2})});
  CHECK(!mixed.uniformity().has_value());
  CHECK_THROWS_AS(
      Family::uniform(4, 2, {VertexSet::of({1}), VertexSet::of({1, 2})}),
      UniformityError);
  CHECK_THROWS_AS(Family::of(3, {VertexSet::of({1, 4})}), DomainError);
  CHECK_THROWS_AS(Family::uniform(0, 1, {}), DomainError);

  // Declared uniformity survives an empty member list.
  CHECK(Family::uniform(6, 3, {}).uniformity() == 3);
  CHECK(Family::of(6, {}).empty());
}

TEST_CASE("shadow on the standard examples") {
  auto f = Family::of(3, {VertexSet::of({1, 2}), VertexSet::of({1, 3})});
  auto s = shadow(f);
  CHECK(s == Family::of(3, {VertexSet::of({1}), VertexSet::of({2}),
                            VertexSet::of({3})}));
  CHECK(s.uniformity() == 1);

  CHECK(shadow(complete(5, 3)) == complete(5, 2));
  CHECK(shadow(complete(5, 3)).size() == 10);

  // Shadow of a 1-uniform family is {∅}.
  auto point = shadow(Family::of(4, {VertexSet::of({2})}));
  CHECK(point.size() == 1);
  CHECK(point.contains(VertexSet{}));

  // Empty but declared-uniform input keeps a well-defined level.
  auto none = shadow(Family::uniform(4, 2, {}));
  CHECK(none.empty());
  CHECK(none.uniformity() == 1);

  CHECK_THROWS_AS(
      shadow(Family::of(4, {VertexSet::of({1}), VertexSet::of({1, 2})})),
      UniformityError);
  CHECK_THROWS_AS(shadow(Family::of(4, {VertexSet{}})), UniformityError);
}

TEST_CASE("shadow agrees with the mask oracle on random families") {
  SplitMixRng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(6));
    int k = 1 + static_cast<int>(rng.below(n));
    auto cands = k_subsets(VertexSet::full(n), k);
    std::vector<VertexSet> pick;
    for (const auto& c : cands)
      if (rng.below(3) == 0) pick.push_back(c);
    auto f = Family::uniform(n, k, pick);
    auto got = shadow(f);
    auto want = oracle::shadow_of(masks_of(f));
    REQUIRE(got.size() == want.size());
    for (const auto& m : got.members()) CHECK(want.count(m.mask()) == 1);
  }
}

TEST_CASE("link extracts F(A, B-bar)") {
  auto k5_3 = complete(5, 3);
  CHECK(link(k5_3, {VertexSet::of({1, 2}), {}}) ==
        Family::of(5, {VertexSet::of({3}), VertexSet::of({4}),
                       VertexSet::of({5})}));
  CHECK(link(k5_3, {VertexSet::of({1}), VertexSet::of({2})}) ==
        Family::of(5, {VertexSet::of({3, 4}), VertexSet::of({3, 5}),
                       VertexSet::of({4, 5})}));
  CHECK(link(star(5, 2), {VertexSet::of({1}), {}}) ==
        Family::of(5, {VertexSet::of({2}), VertexSet::of({3}),
                       VertexSet::of({4}), VertexSet::of({5})}));

  // Trivial spec is the identity.
  CHECK(link(k5_3, {{}, {}}) == k5_3);

  // Anchoring on all of a member leaves the empty set in the view.
  auto at_top = link(Family::of(4, {VertexSet::of({1, 2})}),
                     {VertexSet::of({1, 2}), {}});
  CHECK(at_top.size() == 1);
  CHECK(at_top.contains(VertexSet{}));

  CHECK_THROWS_AS((LinkSpec{VertexSet::of({1}), VertexSet::of({1, 2})}),
                  SpecError);
  CHECK_THROWS_AS(link(k5_3, {VertexSet::of({1, 2, 3, 4}), {}}), DomainError);
  CHECK_THROWS_AS(link(k5_3, {VertexSet::of({6}), {}}), DomainError);
}

TEST_CASE("shadow and link commute on the anchor side") {
  // ∂(F(A)) = (∂F)(A): run it over random uniform families.
  SplitMixRng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng.below(4));
    int k = 2 + static_cast<int>(rng.below(n - 2));
    auto cands = k_subsets(VertexSet::full(n), k);
    std::vector<VertexSet> pick;
    for (const auto& c : cands)
      if (rng.below(2) == 0) pick.push_back(c);
    if (pick.empty()) continue;
    auto f = Family::uniform(n, k, pick);
    for (int a = 1; a <= n; ++a) {
      LinkSpec spec{VertexSet::single(a), {}};
      auto lhs = shadow(link(f, spec));
      auto rhs = link(shadow(f), spec);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("join_vertex undoes the link at a fresh vertex") {
  auto f = Family::of(3, {VertexSet::of({2}), VertexSet::of({3})});
  auto joined = join_vertex(f, 1);
  CHECK(joined == Family::of(3, {VertexSet::of({1, 2}),
                                 VertexSet::of({1, 3})}));
  CHECK(joined.uniformity() == 2);
  CHECK(link(joined, {VertexSet::of({1}), {}}) == f);

  CHECK(join_vertex(Family::uniform(4, 1, {}), 2).uniformity() == 2);
  CHECK_THROWS_AS(join_vertex(joined, 1), DomainError);
  CHECK_THROWS_AS(join_vertex(f, 5), DomainError);
}

TEST_CASE("intersecting and cross-intersecting predicates") {
  CHECK(is_intersecting(star(6, 2)));
  CHECK(is_intersecting(complete(5, 3)));
  CHECK(!is_intersecting(complete(4, 2)));
  CHECK(is_intersecting(Family::of(4, {})));
  // A family containing the empty set can never be intersecting.
  CHECK(!is_intersecting(Family::of(4, {VertexSet{}})));
  CHECK(!is_intersecting(Family::of(4, {VertexSet{}, VertexSet::of({1})})));

  auto f = Family::of(4, {VertexSet::of({1, 2})});
  auto g = Family::of(4, {VertexSet::of({1, 3}), VertexSet::of({1, 4})});
  CHECK(is_cross_intersecting(f, g));
  CHECK(is_cross_intersecting(g, f));
  CHECK(!is_cross_intersecting(f, Family::of(4, {VertexSet::of({3, 4})})));
  CHECK(is_cross_intersecting(f, Family::of(4, {})));
  CHECK_THROWS_AS(is_cross_intersecting(f, Family::of(5, {})), DomainError);

  // Random agreement with the oracle.
  SplitMixRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.below(4));
    std::vector<VertexSet> pick;
    for_each_subset(VertexSet::full(n), [&](VertexSet s) {
      if (rng.below(8) == 0) pick.push_back(s);
    });
    auto fam = Family::of(n, pick);
    CHECK(is_intersecting(fam) == oracle::intersecting(masks_of(fam)));
  }
}

TEST_CASE("t-union and antichain predicates") {
  auto f = Family::of(6, {VertexSet::of({1, 2}), VertexSet::of({2, 3})});
  CHECK(is_t_union(f, 3));
  CHECK(!is_t_union(f, 2));

  // Self-unions count: a single t+1 sized member already fails.
  CHECK(!is_t_union(Family::of(6, {VertexSet::of({1, 2, 3, 4})}), 3));
  CHECK(is_t_union(Family::of(6, {VertexSet::of({1, 2, 3})}), 3));
  CHECK(is_t_union(Family::of(6, {}), 0));

  CHECK(is_antichain(f));
  CHECK(is_antichain(Family::of(4, {})));
  CHECK(!is_antichain(Family::of(4, {VertexSet::of({1}),
                                     VertexSet::of({1, 2})})));
  // The empty set is below everything.
  CHECK(!is_antichain(Family::of(4, {VertexSet{}, VertexSet::of({1})})));
  CHECK(is_antichain(Family::of(4, {VertexSet{}})));
}

TEST_CASE("min_degree") {
  CHECK(min_degree(star(5, 2)) == 1);
  CHECK(min_degree(complete(5, 3)) == 6);
  CHECK(min_degree(complete(6, 2)) == 5);
  // Vertices outside the support have degree zero.
  CHECK(min_degree(Family::of(5, {VertexSet::of({1, 2})})) == 0);
  CHECK_THROWS_AS(min_degree(Family::of(5, {})), DomainError);
}

TEST_CASE("fam parsing accepts the documented format") {
  auto f = parse_fam_string(
      "# star on [5]\n"
      "5 2\n"
      "1 2\n"
      "1 3\n"
      "# interior comment\n"
      "1 4\n"
      "1 5\n");
  CHECK(f == star(5, 2));
  CHECK(f.uniformity() == 2);

  // k = 0 header means sizes are free.
  auto mixed = parse_fam_string("4 0\n1\n1 2\n");
  CHECK(!mixed.uniformity().has_value());
  CHECK(mixed.size() == 2);

  // Blank line terminates the member list.
  auto cut = parse_fam_string("4 1\n1\n\n2\n");
  CHECK(cut.size() == 1);

  // Windows line endings are tolerated.
  CHECK(parse_fam_string("3 1\r\n2\r\n").size() == 1);

  // Empty family, header only.
  auto none = parse_fam_string("7 3\n");
  CHECK(none.empty());
  CHECK(none.uniformity() == 3);
}

TEST_CASE("fam parsing rejects malformed input with line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_fam_string(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);                      // missing header
  CHECK(line_of("x y\n") == 1);                 // non-numeric header
  CHECK(line_of("0 2\n") == 1);                 // n out of range
  CHECK(line_of("65 2\n") == 1);                // n out of range
  CHECK(line_of("5 -1\n") == 1);                // k out of range
  CHECK(line_of("5 6\n") == 1);                 // k > n
  CHECK(line_of("5 2\n1 2 junk\n") == 2);       // trailing garbage
  CHECK(line_of("5 2\n2 1\n") == 2);            // not ascending
  CHECK(line_of("5 2\n1 1\n") == 2);            // repeated vertex
  CHECK(line_of("5 2\n1 6\n") == 2);            // vertex outside ground set
  CHECK(line_of("5 2\n1 2\n1 2 3\n") == 3);     // size != declared k
  CHECK(line_of("5 2\n1 2\n# c\n1 2\n") == 4);  // duplicate member
}

TEST_CASE("fam round trip") {
  auto text = to_fam(star(6, 3));
  CHECK(parse_fam_string(text) == star(6, 3));

  auto mixed = Family::of(5, {VertexSet::of({2}), VertexSet::of({1, 3})});
  CHECK(parse_fam_string(to_fam(mixed)) == mixed);
  CHECK(to_fam(mixed).substr(0, 4) == "5 0\n");

  // An empty-set member has no line representation.
  CHECK_THROWS_AS(to_fam(Family::of(4, {VertexSet{}})), DomainError);

  SplitMixRng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    std::vector<VertexSet> pick;
    for_each_subset(VertexSet::full(n), [&](VertexSet s) {
      if (!s.empty() && rng.below(4) == 0) pick.push_back(s);
    });
    auto fam = Family::of(n, pick);
    CHECK(parse_fam_string(to_fam(fam)) == fam);
  }
}
