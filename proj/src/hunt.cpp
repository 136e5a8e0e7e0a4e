#include "shadowlab/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

namespace shadowlab {

using nlohmann::json;

std::uint64_t SplitMixRng::below(std::uint64_t m) {
  if (m == 0) throw DomainError("empty draw range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % m;
}

namespace {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t i) {
  // one splitmix64 round over a distinct lane per sample
  std::uint64_t x = seed ^ ((i + 1) * 0xD1342543DE82EF95ull);
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct BranchOut {
  std::uint64_t nodes = 0;
  bool capped = false;  // stopped at `cap` with nodes left unvisited
};

struct StopEnum {};

// DFS over subfamilies of `cands` (colex-ordered) that satisfy a hereditary
// pairwise constraint, visiting in pre-order: branch 0 is the empty family
// alone, branch j >= 1 the subtree whose least member is cands[j-1]. The
// canonical sequence is branch 0, then 1, 2, ... — independent of how the
// branches are scheduled.
class FamilyDfs {
 public:
  using Ok = std::function<bool(const std::vector<VertexSet>&, VertexSet)>;
  using Visit = std::function<void(const std::vector<VertexSet>&)>;

  FamilyDfs(std::vector<VertexSet> cands, Ok ok, std::optional<int> max_size)
      : cands_(std::move(cands)), ok_(std::move(ok)), max_size_(max_size) {}

  std::size_t branch_count() const { return cands_.size() + 1; }

  BranchOut run_branch(std::size_t j, std::uint64_t cap,
                       const Visit& visit) const {
    Walk w{*this, visit, cap, 0, {}};
    try {
      if (j == 0) {
        w.take();
      } else {
        w.current.push_back(cands_[j - 1]);
        w.take();
        w.extend(j);
      }
    } catch (const StopEnum&) {
      return {w.nodes, true};
    }
    return {w.nodes, false};
  }

 private:
  struct Walk {
    const FamilyDfs& dfs;
    const Visit& visit;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    std::vector<VertexSet> current;

    void take() {
      if (nodes == cap) throw StopEnum{};
      visit(current);
      ++nodes;
    }
    void extend(std::size_t from) {
      if (dfs.max_size_ &&
          current.size() >= static_cast<std::size_t>(*dfs.max_size_))
        return;
      for (std::size_t t = from; t < dfs.cands_.size(); ++t) {
        if (!dfs.ok_(current, dfs.cands_[t])) continue;
        current.push_back(dfs.cands_[t]);
        take();
        extend(t + 1);
        current.pop_back();
      }
    }
  };

  std::vector<VertexSet> cands_;
  Ok ok_;
  std::optional<int> max_size_;
};

// Pair DFS: F runs over all subfamilies of `k_cands` in the same pre-order;
// at every F-node, G runs over all subfamilies of the l-sets that meet every
// member of F. Each (F, G) pair is one node.
class PairDfs {
 public:
  using Visit = std::function<void(const std::vector<VertexSet>&,
                                   const std::vector<VertexSet>&)>;

  PairDfs(std::vector<VertexSet> k_cands, std::vector<VertexSet> l_cands,
          std::optional<int> max_size)
      : k_cands_(std::move(k_cands)),
        l_cands_(std::move(l_cands)),
        max_size_(max_size) {}

  std::size_t branch_count() const { return k_cands_.size() + 1; }

  BranchOut run_branch(std::size_t j, std::uint64_t cap,
                       const Visit& visit) const {
    Walk w{*this, visit, cap, 0, {}, {}};
    try {
      if (j == 0) {
        w.sweep_g();
      } else {
        w.f.push_back(k_cands_[j - 1]);
        w.sweep_g();
        w.extend_f(j);
      }
    } catch (const StopEnum&) {
      return {w.nodes, true};
    }
    return {w.nodes, false};
  }

 private:
  struct Walk {
    const PairDfs& dfs;
    const Visit& visit;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    std::vector<VertexSet> f, g;

    void take() {
      if (nodes == cap) throw StopEnum{};
      visit(f, g);
      ++nodes;
    }
    void sweep_g() {
      std::vector<VertexSet> compat;
      for (VertexSet c : dfs.l_cands_) {
        bool ok = true;
        for (VertexSet m : f)
          if (!m.intersects(c)) {
            ok = false;
            break;
          }
        if (ok) compat.push_back(c);
      }
      g.clear();
      take();  // (F, ∅)
      extend_g(compat, 0);
    }
    void extend_g(const std::vector<VertexSet>& compat, std::size_t from) {
      if (dfs.max_size_ &&
          g.size() >= static_cast<std::size_t>(*dfs.max_size_))
        return;
      for (std::size_t t = from; t < compat.size(); ++t) {
        g.push_back(compat[t]);
        take();
        extend_g(compat, t + 1);
        g.pop_back();
      }
    }
    void extend_f(std::size_t from) {
      if (dfs.max_size_ &&
          f.size() >= static_cast<std::size_t>(*dfs.max_size_))
        return;
      for (std::size_t t = from; t < dfs.k_cands_.size(); ++t) {
        f.push_back(dfs.k_cands_[t]);
        sweep_g();
        extend_f(t + 1);
        f.pop_back();
      }
    }
  };

  std::vector<VertexSet> k_cands_;
  std::vector<VertexSet> l_cands_;
  std::optional<int> max_size_;
};

// Sequential streaming over branches with a global budget; the canonical
// node order every other execution strategy must reproduce.
template <typename RunBranch>
std::uint64_t run_all_branches(std::size_t count, std::uint64_t budget,
                               RunBranch&& rb) {
  std::uint64_t done = 0;
  for (std::size_t j = 0; j < count; ++j) {
    BranchOut out = rb(j, budget - done);
    done += out.nodes;
    if (out.capped) throw BudgetExceeded(done);
  }
  return done;
}

void guard_candidate_count(std::uint64_t count) {
  if (count > 5'000'000ull)
    throw DomainError("candidate list has " + std::to_string(count) +
                      " sets; this search space is out of reach");
}

std::vector<VertexSet> intersecting_candidates(int n, int k) {
  GroundSpec gs(n);
  if (k < 1 || k > n)
    throw DomainError("need 1 <= k <= n, got k = " + std::to_string(k));
  guard_candidate_count(binom(n, k));
  return k_subsets(VertexSet::full(n), k);
}

bool all_meet(const std::vector<VertexSet>& cur, VertexSet c) {
  for (VertexSet m : cur)
    if (!m.intersects(c)) return false;
  return true;
}

// Hereditary constraint for (2l+1)-union antichains: bounded pairwise
// unions, no containments. Singleton families are checked against t by the
// claim itself (|m| <= t holds for every candidate by construction).
FamilyDfs::Ok antichain_ok(int t) {
  return [t](const std::vector<VertexSet>& cur, VertexSet c) {
    for (VertexSet m : cur) {
      if ((m | c).size() > t) return false;
      if (m.subset_of(c) || c.subset_of(m)) return false;
    }
    return true;
  };
}

std::vector<VertexSet> antichain_candidates(int n, int ell) {
  GroundSpec gs(n);
  if (ell < 1 || 2 * ell + 1 >= n)
    throw DomainError("need 1 <= l and 2l+1 < n");
  const int t = 2 * ell + 1;
  std::uint64_t count = 0;
  for (int s = 0; s <= t; ++s) count += binom(n, s);
  guard_candidate_count(count);
  // mask order = colex; sizes mixed
  std::vector<VertexSet> cands;
  cands.reserve(count);
  for_each_subset(VertexSet::full(n), [&](VertexSet s) {
    if (s.size() <= t) cands.push_back(s);
  });
  return cands;
}

}  // namespace

std::uint64_t enumerate_intersecting(
    int n, int k, const std::function<void(const Family&)>& visit,
    std::uint64_t budget, std::optional<int> max_size) {
  FamilyDfs dfs(intersecting_candidates(n, k), all_meet, max_size);
  auto wrapped = [&](const std::vector<VertexSet>& members) {
    visit(Family::uniform(n, k, members));
  };
  return run_all_branches(
      dfs.branch_count(), budget,
      [&](std::size_t j, std::uint64_t cap) {
        return dfs.run_branch(j, cap, wrapped);
      });
}

std::uint64_t enumerate_cross_pairs(
    int n, int k, int ell,
    const std::function<void(const Family&, const Family&)>& visit,
    std::uint64_t budget, std::optional<int> max_size) {
  auto k_cands = intersecting_candidates(n, k);
  auto l_cands = intersecting_candidates(n, ell);
  PairDfs dfs(std::move(k_cands), std::move(l_cands), max_size);
  auto wrapped = [&](const std::vector<VertexSet>& fm,
                     const std::vector<VertexSet>& gm) {
    visit(Family::uniform(n, k, fm), Family::uniform(n, ell, gm));
  };
  return run_all_branches(
      dfs.branch_count(), budget,
      [&](std::size_t j, std::uint64_t cap) {
        return dfs.run_branch(j, cap, wrapped);
      });
}

std::uint64_t enumerate_union_antichains(
    int n, int ell, const std::function<void(const Family&)>& visit,
    std::uint64_t budget, std::optional<int> max_size) {
  FamilyDfs dfs(antichain_candidates(n, ell), antichain_ok(2 * ell + 1),
                max_size);
  auto wrapped = [&](const std::vector<VertexSet>& members) {
    visit(Family::of(n, members));
  };
  return run_all_branches(
      dfs.branch_count(), budget,
      [&](std::size_t j, std::uint64_t cap) {
        return dfs.run_branch(j, cap, wrapped);
      });
}

Family random_intersecting(int n, int k, std::uint64_t seed, bool subsample) {
  auto cands = intersecting_candidates(n, k);
  SplitMixRng rng(substream_seed(seed, 0));
  rng.shuffle(cands);
  std::vector<VertexSet> picked;
  for (VertexSet c : cands)
    if (all_meet(picked, c)) picked.push_back(c);
  if (subsample) {
    std::vector<VertexSet> kept;
    for (VertexSet c : picked)
      if (rng.below(2) == 1) kept.push_back(c);
    picked = std::move(kept);
  }
  return Family::uniform(n, k, std::move(picked));
}

std::pair<Family, Family> random_cross_pair(int n, int k, int ell,
                                            std::uint64_t seed,
                                            bool subsample) {
  auto k_cands = intersecting_candidates(n, k);
  auto l_cands = intersecting_candidates(n, ell);
  // one shuffled pass over both sides tagged together
  struct Tagged {
    VertexSet set;
    bool g_side;
  };
  std::vector<Tagged> cands;
  cands.reserve(k_cands.size() + l_cands.size());
  for (VertexSet c : k_cands) cands.push_back({c, false});
  for (VertexSet c : l_cands) cands.push_back({c, true});
  SplitMixRng rng(substream_seed(seed, 1));
  rng.shuffle(cands);

  std::vector<VertexSet> f, g;
  for (const Tagged& c : cands) {
    if (c.g_side) {
      if (all_meet(f, c.set)) g.push_back(c.set);
    } else {
      if (all_meet(g, c.set)) f.push_back(c.set);
    }
  }
  if (subsample) {
    std::vector<VertexSet> fk, gk;
    for (VertexSet c : f)
      if (rng.below(2) == 1) fk.push_back(c);
    for (VertexSet c : g)
      if (rng.below(2) == 1) gk.push_back(c);
    f = std::move(fk);
    g = std::move(gk);
  }
  return {Family::uniform(n, k, std::move(f)),
          Family::uniform(n, ell, std::move(g))};
}

std::vector<StructuredFamily> structured_families(int n, int k) {
  GroundSpec gs(n);
  if (k < 1 || k > n)
    throw DomainError("need 1 <= k <= n, got k = " + std::to_string(k));
  std::vector<StructuredFamily> out;

  std::vector<VertexSet> star;
  for (VertexSet s : k_subsets(VertexSet::full(n), k))
    if (s.contains(1)) star.push_back(s);
  out.push_back({"star", Family::uniform(n, k, std::move(star))});

  if (2 * k > n)
    out.push_back(
        {"complete", Family::uniform(n, k, k_subsets(VertexSet::full(n), k))});

  if (k >= 2 && n >= k + 1) {
    VertexSet base;                       // {2, ..., k+1}
    for (int v = 2; v <= k + 1; ++v) base = base.with(v);
    std::vector<VertexSet> hm{base};
    for (VertexSet s : k_subsets(VertexSet::full(n), k))
      if (s.contains(1) && s.intersects(base)) hm.push_back(s);
    out.push_back({"hilton-milner", Family::uniform(n, k, std::move(hm))});
  }

  if (k == 2 && n >= 3)
    out.push_back({"triangle", Family::uniform(n, 2,
                                               {VertexSet::of({1, 2}),
                                                VertexSet::of({1, 3}),
                                                VertexSet::of({2, 3})})});

  for (const auto& sf : out)
    if (!is_intersecting(sf.family))
      throw CertificationError("structured family '" + sf.tag +
                               "' is not intersecting");
  return out;
}

// --- sweep -------------------------------------------------------------

namespace {

struct BranchResult {
  std::uint64_t nodes = 0;
  bool capped = false;
  std::vector<HuntViolation> violations;
  RegimeTally regimes;
};

void absorb(HuntReport& into, RegimeTally& tally, BranchResult&& r) {
  into.examined += r.nodes;
  for (auto& v : r.violations) into.violations.push_back(std::move(v));
  tally.guaranteed += r.regimes.guaranteed;
  tally.conjectured += r.regimes.conjectured;
  tally.neither += r.regimes.neither;
}

// Runs `runner(j, cap)` over all branches under the global budget. jobs == 1
// streams with the exact running remainder; jobs > 1 computes branches
// concurrently (each capped at budget+1 so crossing is detectable) and the
// merge re-runs at most one branch to place the canonical cut. Both paths
// produce identical reports.
void run_branches_into(
    HuntReport& report, RegimeTally& tally, std::size_t count, int jobs,
    std::uint64_t budget,
    const std::function<BranchResult(std::size_t, std::uint64_t)>& runner) {
  std::uint64_t remaining = budget;
  if (jobs <= 1 || count <= 1) {
    for (std::size_t j = 0; j < count; ++j) {
      BranchResult r = runner(j, remaining);
      remaining -= r.nodes;
      bool capped = r.capped;
      absorb(report, tally, std::move(r));
      if (capped) {
        report.budget_exhausted = true;
        return;
      }
    }
    return;
  }

  const std::uint64_t worker_cap =
      budget == std::numeric_limits<std::uint64_t>::max() ? budget
                                                          : budget + 1;
  std::vector<BranchResult> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t j = next.fetch_add(1);
      if (j >= count) return;
      try {
        results[j] = runner(j, worker_cap);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs, count);
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (std::size_t j = 0; j < count; ++j)
    if (errors[j]) std::rethrow_exception(errors[j]);

  for (std::size_t j = 0; j < count; ++j) {
    BranchResult& r = results[j];
    if (!r.capped && r.nodes <= remaining) {
      remaining -= r.nodes;
      absorb(report, tally, std::move(r));
      continue;
    }
    // the canonical cut lands inside this branch: replay its exact prefix
    BranchResult rr = runner(j, remaining);
    remaining -= rr.nodes;
    absorb(report, tally, std::move(rr));
    report.budget_exhausted = true;
    return;
  }
}

const std::vector<std::string>& allowed_claims(SearchSpace::Constraint c) {
  static const std::vector<std::string> intersecting_claims{
      "katona", "local", "kk-bound"};
  static const std::vector<std::string> cross_claims{"frankl-cross"};
  static const std::vector<std::string> antichain_claims{"union-antichain"};
  switch (c) {
    case SearchSpace::Constraint::intersecting:
      return intersecting_claims;
    case SearchSpace::Constraint::cross_intersecting:
      return cross_claims;
    case SearchSpace::Constraint::union_antichain:
      return antichain_claims;
  }
  throw DomainError("unknown constraint");
}

std::string inline_fam(const Family& f) { return to_fam(f); }

// Claim checks for one visited family. Proved claims that fail abort the
// whole sweep: that is an implementation bug, not a finding.
void check_family_claims(const Family& fam,
                         const std::vector<std::string>& claims,
                         std::optional<int> ell, BranchResult& out) {
  for (const std::string& claim : claims) {
    if (claim == "katona") {
      auto v = check_katona(fam);
      if (!v.holds)
        throw CertificationError("a proved inequality failed on:\n" +
                                 inline_fam(fam));
    } else if (claim == "kk-bound") {
      auto v = check_kk_bound(fam);
      if (!v.holds)
        throw CertificationError("the cascade bound failed on:\n" +
                                 inline_fam(fam));
    } else if (claim == "local") {
      if (fam.empty()) continue;  // vacuous
      auto v = check_local(fam);
      std::string regime = v.stats.at("regime").get<std::string>();
      if (regime == "guaranteed")
        ++out.regimes.guaranteed;
      else if (regime == "conjectured")
        ++out.regimes.conjectured;
      else
        ++out.regimes.neither;
      if (!v.holds) {
        if (regime == "guaranteed")
          throw CertificationError(
              "the guaranteed local inequality failed on:\n" +
              inline_fam(fam));
        out.violations.push_back({inline_fam(fam), std::nullopt, v});
      }
    } else if (claim == "union-antichain") {
      auto v = check_union_antichain_conjecture(fam, ell.value());
      if (!v.holds)
        out.violations.push_back({inline_fam(fam), std::nullopt, v});
    }
  }
}

void check_pair_claims(const Family& f, const Family& g,
                       const std::vector<std::string>& claims) {
  for (const std::string& claim : claims) {
    if (claim == "frankl-cross") {
      auto v = check_frankl_cross(f, g);
      if (!v.holds)
        throw CertificationError("the cross inequality failed on:\n" +
                                 inline_fam(f) + "and:\n" + inline_fam(g));
    }
  }
}

}  // namespace

HuntReport sweep(const SearchSpace& space, std::vector<std::string> claims,
                 int jobs) {
  GroundSpec gs(space.n);
  if (jobs < 1) throw DomainError("jobs must be positive");

  const auto& allowed = allowed_claims(space.constraint);
  if (claims.empty()) claims = allowed;
  for (const auto& c : claims)
    if (std::find(allowed.begin(), allowed.end(), c) == allowed.end())
      throw DomainError("claim '" + c +
                        "' is unknown or not checkable on this search space");

  using Constraint = SearchSpace::Constraint;
  using Mode = SearchSpace::Mode;

  SearchSpace sp = space;  // echoed back with defaults resolved
  if (sp.constraint == Constraint::cross_intersecting) {
    if (!sp.ell) sp.ell = sp.k;
    if (*sp.ell != sp.k)
      throw DomainError(
          "the cross shadow inequality needs matching uniformities");
  }
  if (sp.constraint == Constraint::union_antichain) {
    if (!sp.ell) throw DomainError("this search space needs l");
    sp.k = 0;
  }

  HuntReport report;
  report.claims = claims;
  RegimeTally tally;
  const auto t0 = std::chrono::steady_clock::now();

  auto family_check = [&](const Family& fam, BranchResult& out) {
    check_family_claims(fam, claims, sp.ell, out);
  };

  switch (sp.mode) {
    case Mode::exhaustive: {
      if (sp.constraint == Constraint::intersecting) {
        FamilyDfs dfs(intersecting_candidates(sp.n, sp.k), all_meet,
                      sp.max_family_size);
        auto runner = [&](std::size_t j, std::uint64_t cap) {
          BranchResult out;
          auto visit = [&](const std::vector<VertexSet>& members) {
            family_check(Family::uniform(sp.n, sp.k, members), out);
          };
          BranchOut b = dfs.run_branch(j, cap, visit);
          out.nodes = b.nodes;
          out.capped = b.capped;
          return out;
        };
        run_branches_into(report, tally, dfs.branch_count(), jobs,
                          sp.node_budget, runner);
      } else if (sp.constraint == Constraint::cross_intersecting) {
        PairDfs dfs(intersecting_candidates(sp.n, sp.k),
                    intersecting_candidates(sp.n, *sp.ell),
                    sp.max_family_size);
        auto runner = [&](std::size_t j, std::uint64_t cap) {
          BranchResult out;
          auto visit = [&](const std::vector<VertexSet>& fm,
                           const std::vector<VertexSet>& gm) {
            check_pair_claims(Family::uniform(sp.n, sp.k, fm),
                              Family::uniform(sp.n, *sp.ell, gm), claims);
          };
          BranchOut b = dfs.run_branch(j, cap, visit);
          out.nodes = b.nodes;
          out.capped = b.capped;
          return out;
        };
        run_branches_into(report, tally, dfs.branch_count(), jobs,
                          sp.node_budget, runner);
      } else {
        FamilyDfs dfs(antichain_candidates(sp.n, *sp.ell),
                      antichain_ok(2 * *sp.ell + 1), sp.max_family_size);
        auto runner = [&](std::size_t j, std::uint64_t cap) {
          BranchResult out;
          auto visit = [&](const std::vector<VertexSet>& members) {
            family_check(Family::of(sp.n, members), out);
          };
          BranchOut b = dfs.run_branch(j, cap, visit);
          out.nodes = b.nodes;
          out.capped = b.capped;
          return out;
        };
        run_branches_into(report, tally, dfs.branch_count(), jobs,
                          sp.node_budget, runner);
      }
      break;
    }
    case Mode::random: {
      report.rng = "splitmix64";
      auto runner = [&](std::size_t i, std::uint64_t cap) {
        BranchResult out;
        if (cap == 0) {
          out.capped = true;
          return out;
        }
        bool subsample = i % 2 == 1;
        if (sp.constraint == Constraint::intersecting) {
          family_check(random_intersecting(sp.n, sp.k,
                                           substream_seed(sp.seed, i),
                                           subsample),
                       out);
        } else if (sp.constraint == Constraint::cross_intersecting) {
          auto [f, g] = random_cross_pair(
              sp.n, sp.k, *sp.ell, substream_seed(sp.seed, i), subsample);
          check_pair_claims(f, g, claims);
        } else {
          throw DomainError(
              "random sampling is defined for intersecting families and "
              "cross pairs only");
        }
        out.nodes = 1;
        return out;
      };
      run_branches_into(report, tally, sp.samples, jobs, sp.node_budget,
                        runner);
      break;
    }
    case Mode::structured: {
      if (sp.constraint != Constraint::intersecting)
        throw DomainError("structured families are intersecting families");
      auto fams = structured_families(sp.n, sp.k);
      auto runner = [&](std::size_t j, std::uint64_t cap) {
        BranchResult out;
        if (cap == 0) {
          out.capped = true;
          return out;
        }
        family_check(fams[j].family, out);
        out.nodes = 1;
        return out;
      };
      run_branches_into(report, tally, fams.size(), jobs, sp.node_budget,
                        runner);
      break;
    }
  }

  if (std::find(claims.begin(), claims.end(), "local") != claims.end())
    report.regimes = tally;
  report.space = sp;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

json report_to_json(const HuntReport& r) {
  json space;
  space["n"] = r.space.n;
  space["k"] = r.space.k;
  space["ell"] = r.space.ell ? json(*r.space.ell) : json(nullptr);
  switch (r.space.mode) {
    case SearchSpace::Mode::exhaustive: space["mode"] = "exhaustive"; break;
    case SearchSpace::Mode::random: space["mode"] = "random"; break;
    case SearchSpace::Mode::structured: space["mode"] = "structured"; break;
  }
  switch (r.space.constraint) {
    case SearchSpace::Constraint::intersecting:
      space["constraint"] = "intersecting";
      break;
    case SearchSpace::Constraint::cross_intersecting:
      space["constraint"] = "cross-intersecting";
      break;
    case SearchSpace::Constraint::union_antichain:
      space["constraint"] = "union-antichain";
      break;
  }
  space["samples"] = r.space.samples;
  space["seed"] = r.space.seed;
  space["max_family_size"] =
      r.space.max_family_size ? json(*r.space.max_family_size) : json(nullptr);
  space["node_budget"] = r.space.node_budget;

  json j;
  j["space"] = std::move(space);
  j["claims"] = r.claims;
  j["families_examined"] = r.examined;
  json viols = json::array();
  for (const auto& v : r.violations) {
    json jv;
    jv["family"] = v.family;
    jv["family2"] = v.family2 ? json(*v.family2) : json(nullptr);
    jv["verdict"] = verdict_to_json(v.verdict);
    viols.push_back(std::move(jv));
  }
  j["violations"] = std::move(viols);
  if (r.regimes)
    j["regimes"] = {{"guaranteed", r.regimes->guaranteed},
                    {"conjectured", r.regimes->conjectured},
                    {"neither", r.regimes->neither}};
  else
    j["regimes"] = nullptr;
  j["rng"] = r.rng ? json(*r.rng) : json(nullptr);
  j["budget_exhausted"] = r.budget_exhausted;
  j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace shadowlab
