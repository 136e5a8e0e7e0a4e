#include <doctest.h>

#include <algorithm>
#include <set>

#include "common.hpp"
#include "oracles.hpp"
#include "shadowlab/hunt.hpp"

using namespace shadowlab;
using fixtures::complete;
using fixtures::masks_of;
using fixtures::star;

namespace {

nlohmann::json report_sans_timing(const HuntReport& r) {
  auto j = report_to_json(r);
  j["wall_ms"] = 0.0;
  return j;
}

}  // namespace

TEST_CASE("enumerate_intersecting: counts match the brute-force oracle") {
  for (auto [n, k, want] :
       {std::tuple{3, 2, 8ull}, std::tuple{4, 2, 27ull}, std::tuple{4, 3, 16ull},
        std::tuple{5, 2, 76ull}, std::tuple{5, 3, 1024ull}}) {
    std::uint64_t seen = 0;
    enumerate_intersecting(n, k, [&](const Family&) { ++seen; });
    CHECK(seen == want);
    CHECK(want == oracle::count_intersecting(n, k));
  }
}

TEST_CASE("enumerate_intersecting: visit discipline") {
  std::vector<Family> visited;
  enumerate_intersecting(4, 2, [&](const Family& f) { visited.push_back(f); });

  // The empty family comes first; every family is intersecting, 2-uniform,
  // and appears exactly once.
  REQUIRE(!visited.empty());
  CHECK(visited.front().empty());
  std::set<std::string> keys;
  for (const auto& f : visited) {
    CHECK(f.uniformity() == 2);
    CHECK(oracle::intersecting(masks_of(f)));
    std::string key;
    for (const auto& m : f.members()) key += braces(m);
    CHECK(keys.insert(key).second);
  }

  std::uint64_t small = 0;
  enumerate_intersecting(4, 2, [&](const Family& f) {
    CHECK(f.size() <= 1);
    ++small;
  }, kDefaultNodeBudget, 1);
  CHECK(small == 7);  // the empty family plus six singleton families
}

TEST_CASE("enumerate_intersecting: node budget") {
  std::uint64_t seen = 0;
  try {
    enumerate_intersecting(5, 2, [&](const Family&) { ++seen; }, 10);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.visited == 10);
    CHECK(seen == 10);
  }

  // A budget that exactly fits does not throw.
  seen = 0;
  enumerate_intersecting(3, 2, [&](const Family&) { ++seen; }, 8);
  CHECK(seen == 8);
  CHECK_THROWS_AS(enumerate_intersecting(3, 2, [](const Family&) {}, 7),
                  BudgetExceeded);
}

TEST_CASE("enumerate_cross_pairs matches the brute-force oracle") {
  std::uint64_t seen = 0;
  std::set<std::string> keys;
  enumerate_cross_pairs(4, 2, 2, [&](const Family& f, const Family& g) {
    ++seen;
    CHECK(oracle::cross_intersecting(masks_of(f), masks_of(g)));
    std::string key;
    for (const auto& m : f.members()) key += braces(m);
    key += "/";
    for (const auto& m : g.members()) key += braces(m);
    CHECK(keys.insert(key).second);
  });
  CHECK(seen == 729);
  CHECK(oracle::count_cross_pairs(4, 2, 2) == 729);

  std::uint64_t mixed = 0;
  enumerate_cross_pairs(4, 2, 1, [&](const Family&, const Family&) {
    ++mixed;
  });
  CHECK(mixed == oracle::count_cross_pairs(4, 2, 1));
}

TEST_CASE("enumerate_union_antichains") {
  std::uint64_t seen = 0;
  std::uint64_t with_empty_member = 0;
  bool saw_empty_family = false;
  enumerate_union_antichains(5, 1, [&](const Family& f) {
    ++seen;
    CHECK(is_antichain(f));
    CHECK(is_t_union(f, 3));
    if (f.empty()) saw_empty_family = true;
    if (f.contains(VertexSet{})) ++with_empty_member;
  });
  CHECK(seen == 328);
  CHECK(saw_empty_family);
  // {∅} is an antichain; ∅ under anything else is not. Exactly one family
  // carries the empty set.
  CHECK(with_empty_member == 1);

  CHECK_THROWS_AS(enumerate_union_antichains(5, 2, [](const Family&) {}),
                  DomainError);  // needs 2l+1 < n
}

TEST_CASE("random_intersecting is deterministic and maximal") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = random_intersecting(6, 3, seed);
    auto b = random_intersecting(6, 3, seed);
    CHECK(a == b);
    CHECK(is_intersecting(a));

    // Maximality: every missing 3-set clashes with some member.
    for (const auto& c : k_subsets(VertexSet::full(6), 3)) {
      if (a.contains(c)) continue;
      bool clashes = false;
      for (const auto& m : a.members())
        if (!m.intersects(c)) clashes = true;
      CHECK(clashes);
    }

    // The subsampled variant stays inside the maximal draw.
    auto sub = random_intersecting(6, 3, seed, true);
    CHECK(is_intersecting(sub));
    for (const auto& m : sub.members()) CHECK(a.contains(m));
  }

  // 2k > n: the whole layer is intersecting, so maximal means everything.
  CHECK(random_intersecting(5, 3, 9) == complete(5, 3));

  // Maximal intersecting 2-uniform families on [5] are stars or triangles.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto f = random_intersecting(5, 2, seed);
    if (f.size() == 4) {
      VertexSet common = VertexSet::full(5);
      for (const auto& m : f.members()) common = common & m;
      CHECK(common.size() == 1);
    } else {
      REQUIRE(f.size() == 3);
      CHECK(f.support().size() == 3);
    }
  }
}

TEST_CASE("random_cross_pair is deterministic, cross, maximal") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto [f, g] = random_cross_pair(6, 3, 2, seed);
    auto [f2, g2] = random_cross_pair(6, 3, 2, seed);
    CHECK(f == f2);
    CHECK(g == g2);
    CHECK(f.uniformity() == 3);
    CHECK(g.uniformity() == 2);
    CHECK(is_cross_intersecting(f, g));

    // Nothing further fits on either side.
    for (const auto& c : k_subsets(VertexSet::full(6), 3)) {
      if (f.contains(c)) continue;
      bool clashes = false;
      for (const auto& m : g.members())
        if (!m.intersects(c)) clashes = true;
      CHECK(clashes);
    }
    for (const auto& c : k_subsets(VertexSet::full(6), 2)) {
      if (g.contains(c)) continue;
      bool clashes = false;
      for (const auto& m : f.members())
        if (!m.intersects(c)) clashes = true;
      CHECK(clashes);
    }

    auto [sf, sg] = random_cross_pair(6, 3, 2, seed, true);
    CHECK(is_cross_intersecting(sf, sg));
  }
}

TEST_CASE("structured_families carry the classical examples") {
  auto fams = structured_families(5, 2);
  std::vector<std::string> tags;
  for (const auto& s : fams) {
    tags.push_back(s.tag);
    CHECK(is_intersecting(s.family));
    CHECK(!s.family.empty());
  }
  CHECK(tags == std::vector<std::string>{"star", "hilton-milner", "triangle"});
  CHECK(fams[0].family == star(5, 2));

  auto big = structured_families(5, 3);
  tags.clear();
  for (const auto& s : big) tags.push_back(s.tag);
  CHECK(tags ==
        std::vector<std::string>{"star", "complete", "hilton-milner"});
  CHECK(big[1].family == complete(5, 3));
}

TEST_CASE("sweep: exhaustive intersecting space") {
  SearchSpace space;
  space.n = 4;
  space.k = 2;
  auto report = sweep(space, {"katona", "local", "kk-bound"});
  CHECK(report.examined == 27);
  CHECK(report.violations.empty());
  CHECK(!report.budget_exhausted);
  REQUIRE(report.regimes.has_value());
  // Every nonempty family has a witness here; the empty family is skipped.
  CHECK(report.regimes->guaranteed == 26);
  CHECK(report.regimes->conjectured == 0);
  CHECK(report.regimes->neither == 0);
  CHECK(!report.rng.has_value());

  // Claims default to everything allowed on the space.
  auto dflt = sweep(space, {});
  CHECK(dflt.claims == std::vector<std::string>{"katona", "local", "kk-bound"});
  CHECK(dflt.examined == 27);

  // Without "local" no regime tally appears.
  auto quiet = sweep(space, {"katona"});
  CHECK(!quiet.regimes.has_value());
}

TEST_CASE("sweep: cross and antichain spaces") {
  SearchSpace cross;
  cross.n = 4;
  cross.k = 2;
  cross.constraint = SearchSpace::Constraint::cross_intersecting;
  auto report = sweep(cross, {});
  CHECK(report.claims == std::vector<std::string>{"frankl-cross"});
  CHECK(report.examined == 729);
  CHECK(report.violations.empty());

  SearchSpace anti;
  anti.n = 5;
  anti.ell = 1;
  anti.constraint = SearchSpace::Constraint::union_antichain;
  auto areport = sweep(anti, {});
  CHECK(areport.claims == std::vector<std::string>{"union-antichain"});
  CHECK(areport.examined == 328);
  CHECK(areport.violations.empty());
}

TEST_CASE("sweep: random mode is reproducible and tallies regimes") {
  SearchSpace space;
  space.n = 7;
  space.k = 3;
  space.mode = SearchSpace::Mode::random;
  space.samples = 30;
  space.seed = 7;
  auto report = sweep(space, {"local"});
  CHECK(report.examined == 30);
  CHECK(report.rng == "splitmix64");
  REQUIRE(report.regimes.has_value());
  CHECK(report.regimes->guaranteed +
            report.regimes->conjectured +
            report.regimes->neither <= 30);
  CHECK(report.regimes->guaranteed > 0);
  CHECK(report.violations.empty());

  auto again = sweep(space, {"local"});
  CHECK(report_sans_timing(report) == report_sans_timing(again));
}

TEST_CASE("sweep: parallel runs reproduce the sequential report") {
  SearchSpace space;
  space.n = 5;
  space.k = 2;
  auto seq = sweep(space, {}, 1);
  auto par = sweep(space, {}, 4);
  CHECK(seq.examined == 76);
  CHECK(report_sans_timing(seq) == report_sans_timing(par));

  SearchSpace rnd;
  rnd.n = 7;
  rnd.k = 3;
  rnd.mode = SearchSpace::Mode::random;
  rnd.samples = 17;
  rnd.seed = 3;
  CHECK(report_sans_timing(sweep(rnd, {}, 1)) ==
        report_sans_timing(sweep(rnd, {}, 3)));

  SearchSpace cross;
  cross.n = 4;
  cross.k = 2;
  cross.constraint = SearchSpace::Constraint::cross_intersecting;
  CHECK(report_sans_timing(sweep(cross, {}, 1)) ==
        report_sans_timing(sweep(cross, {}, 4)));
}

TEST_CASE("sweep: budget exhaustion yields a flagged partial report") {
  SearchSpace space;
  space.n = 5;
  space.k = 2;
  space.node_budget = 10;
  auto seq = sweep(space, {}, 1);
  CHECK(seq.budget_exhausted);
  CHECK(seq.examined == 10);

  auto par = sweep(space, {}, 4);
  CHECK(report_sans_timing(seq) == report_sans_timing(par));
}

TEST_CASE("sweep: claim and space validation") {
  SearchSpace space;
  space.n = 4;
  space.k = 2;
  CHECK_THROWS_AS(sweep(space, {"moonshine"}), DomainError);
  CHECK_THROWS_AS(sweep(space, {"frankl-cross"}), DomainError);
  CHECK_THROWS_AS(sweep(space, {}, 0), DomainError);

  SearchSpace cross = space;
  cross.constraint = SearchSpace::Constraint::cross_intersecting;
  cross.ell = 3;  // must match k
  CHECK_THROWS_AS(sweep(cross, {}), DomainError);

  SearchSpace anti;
  anti.n = 5;
  anti.constraint = SearchSpace::Constraint::union_antichain;
  CHECK_THROWS_AS(sweep(anti, {}), DomainError);  // no l given

  anti.ell = 1;
  anti.mode = SearchSpace::Mode::random;
  anti.samples = 3;
  CHECK_THROWS_AS(sweep(anti, {}), DomainError);  // random needs k-uniform

  SearchSpace structcross = cross;
  structcross.ell = 2;
  structcross.mode = SearchSpace::Mode::structured;
  CHECK_THROWS_AS(sweep(structcross, {}), DomainError);
}

TEST_CASE("report JSON carries the full search context") {
  SearchSpace space;
  space.n = 4;
  space.k = 2;
  space.mode = SearchSpace::Mode::random;
  space.samples = 5;
  space.seed = 11;
  auto j = report_to_json(sweep(space, {"katona", "local"}));
  CHECK(j.at("space").at("n") == 4);
  CHECK(j.at("space").at("mode") == "random");
  CHECK(j.at("space").at("constraint") == "intersecting");
  CHECK(j.at("space").at("seed") == 11);
  CHECK(j.at("claims") == nlohmann::json({"katona", "local"}));
  CHECK(j.at("families_examined") == 5);
  CHECK(j.at("violations").is_array());
  CHECK(j.at("regimes").at("guaranteed").is_number());
  CHECK(j.at("rng") == "splitmix64");
  CHECK(j.at("budget_exhausted") == false);
  CHECK(j.at("wall_ms").is_number());
}
