#include "shadowlab/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace shadowlab {

using nlohmann::json;

json verdict_to_json(const Verdict& v) {
  json j;
  j["claim"] = v.claim;
  j["holds"] = v.holds;
  j["witness"] = v.witness;
  j["stats"] = v.stats;
  return j;
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw Error("binomial C(" + std::to_string(n) + "," + std::to_string(k) +
                  ") does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

namespace {
// binom that saturates instead of throwing, for search bounds.
std::uint64_t binom_sat(long long n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = static_cast<int>(std::min<long long>(k, n - k));
  unsigned __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<unsigned>(j);
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}
}  // namespace

std::uint64_t kk_lower_bound(std::uint64_t m, int k) {
  if (k < 1) throw DomainError("cascade needs k >= 1");
  unsigned __int128 total = 0;
  std::uint64_t rem = m;
  int j = k;
  while (rem > 0) {
    if (j < 1)
      throw CertificationError("cascade expansion ran out of levels");
    // largest a with C(a, j) <= rem
    long long a;
    if (j == 1) {
      a = static_cast<long long>(rem);
    } else {
      long long lo = j, hi = j;
      while (binom_sat(hi + 1, j) <= rem) hi = hi * 2 + 1;
      while (lo < hi) {  // invariant: C(lo,j) <= rem < C(hi+1,j)
        long long mid = lo + (hi - lo + 1) / 2;
        if (binom_sat(mid, j) <= rem)
          lo = mid;
        else
          hi = mid - 1;
      }
      a = lo;
    }
    total += binom_sat(a, j - 1);
    rem -= binom_sat(a, j);
    --j;
  }
  if (total > std::numeric_limits<std::uint64_t>::max())
    throw Error("cascade bound does not fit in 64 bits");
  return static_cast<std::uint64_t>(total);
}

namespace {
int require_uniform(const Family& f, const char* what, int least) {
  auto k = f.uniformity();
  if (!k || *k < least)
    throw UniformityError(std::string(what) + " needs a k-uniform family, "
                          "k >= " + std::to_string(least));
  return *k;
}
}  // namespace

Verdict check_katona(const Family& f) {
  int k = require_uniform(f, "the shadow inequality", 1);
  if (!is_intersecting(f))
    throw DomainError("the shadow inequality needs an intersecting family");
  Verdict v;
  v.claim = "katona";
  std::uint64_t fsz = f.size();
  std::uint64_t dsz = f.empty() ? 0 : shadow(f).size();
  v.holds = dsz >= fsz;
  v.stats = {{"family_size", fsz}, {"shadow_size", dsz}, {"k", k}};
  if (!v.holds)
    v.witness = {{"family_size", fsz}, {"shadow_size", dsz}};
  return v;
}

Verdict check_frankl_cross(const Family& f, const Family& g) {
  require_uniform(f, "the cross shadow inequality", 1);
  int k2 = require_uniform(g, "the cross shadow inequality", 1);
  if (f.uniformity() != g.uniformity())
    throw UniformityError(
        "the cross shadow inequality needs two families of the same "
        "uniformity");
  if (!is_cross_intersecting(f, g))
    throw DomainError(
        "the cross shadow inequality needs a cross-intersecting pair");
  (void)k2;
  Verdict v;
  v.claim = "frankl-cross";
  std::uint64_t fsz = f.size(), gsz = g.size();
  std::uint64_t dsz = f.empty() ? 0 : shadow(f).size();
  std::uint64_t need = std::min(fsz, gsz);
  v.holds = dsz >= need;
  v.stats = {{"f_size", fsz},
             {"g_size", gsz},
             {"f_shadow_size", dsz},
             {"required", need}};
  if (!v.holds) v.witness = v.stats;
  return v;
}

Verdict check_local(const Family& f) {
  int k = require_uniform(f, "the local shadow inequality", 1);
  if (!is_intersecting(f))
    throw DomainError("the local shadow inequality needs an intersecting "
                      "family");
  const int n = f.n();
  std::string regime;
  if (binom(k + 1, 2) < static_cast<std::uint64_t>(n))
    regime = "guaranteed";
  else if (n > 2 * k)
    regime = "conjectured";
  else
    regime = "neither";

  Verdict v;
  v.claim = "local";
  auto i = local_witness(f);
  v.holds = i.has_value();
  v.stats = {{"n", n}, {"k", k}, {"regime", regime}};
  if (i) {
    auto view = link(f, LinkSpec(VertexSet::single(*i), VertexSet()));
    v.witness = {{"i", *i},
                 {"link_size", view.size()},
                 {"link_shadow_size", view_shadow_size(view.members())}};
  }
  return v;
}

Verdict check_union_antichain_conjecture(const Family& f, int ell) {
  if (ell < 1) throw DomainError("the union-antichain bound needs l >= 1");
  const int n = f.n();
  const int t = 2 * ell + 1;
  if (t >= n)
    throw DomainError("the union-antichain bound needs 2l+1 < n, got l = " +
                      std::to_string(ell) + ", n = " + std::to_string(n));
  if (!is_t_union(f, t))
    throw DomainError("not a " + std::to_string(t) + "-union family");
  if (!is_antichain(f)) throw DomainError("not an antichain");

  // min_degree rejects the empty family; an empty family has degree 0
  // everywhere, which satisfies any bound.
  std::uint64_t delta = f.empty() ? 0 : min_degree(f);
  std::uint64_t bound = binom(n - 1, ell - 1);
  Verdict v;
  v.claim = "union-antichain";
  v.holds = delta <= bound;
  v.stats = {{"min_degree", delta}, {"bound", bound}, {"n", n}, {"ell", ell}};
  if (!v.holds) v.witness = v.stats;
  return v;
}

Verdict check_kk_bound(const Family& f) {
  int k = require_uniform(f, "the cascade bound", 1);
  Verdict v;
  v.claim = "kk-bound";
  std::uint64_t fsz = f.size();
  std::uint64_t dsz = f.empty() ? 0 : shadow(f).size();
  std::uint64_t bound = kk_lower_bound(fsz, k);
  v.holds = dsz >= bound;
  v.stats = {{"family_size", fsz}, {"shadow_size", dsz}, {"bound", bound}};
  if (!v.holds) v.witness = v.stats;
  return v;
}

// --- certificate replay ------------------------------------------------

namespace {
struct ReplayFailure {
  std::string what;
  json detail;
};
}  // namespace

Verdict replay_certificate(const ChainCertificate& cert, const Family& f,
                           const Family* g) {
  // Structural/arity problems are the caller's misuse; everything after the
  // preamble reports through the verdict instead of throwing.
  if (cert.mode == ChainMode::cross && g == nullptr)
    throw DomainError("a cross certificate needs both families to replay");
  if (cert.mode == ChainMode::intersecting && g != nullptr)
    throw DomainError("an intersecting certificate replays against one "
                      "family");
  if (static_cast<int>(cert.chain.size()) != cert.k)
    throw DomainError("malformed certificate: chain size != k");
  if (static_cast<int>(cert.size_bound_ok.size()) != cert.k)
    throw DomainError("malformed certificate: size_bound_ok size != k");
  if (cert.mode == ChainMode::cross && !cert.ell)
    throw DomainError("malformed certificate: cross mode without ell");

  Verdict v;
  v.claim = "replay";
  std::uint64_t entries_checked = 0;
  std::optional<ReplayFailure> failure;
  auto fail = [&](const std::string& what, json detail = nullptr) {
    if (!failure) failure = ReplayFailure{what, std::move(detail)};
  };

  // Parameters must describe the families.
  if (cert.n != f.n()) fail("certificate n does not match the family");
  if (f.uniformity() != std::optional<int>(cert.k))
    fail("certificate k does not match the family's uniformity");
  if (cert.mode == ChainMode::intersecting) {
    if (!is_intersecting(f)) fail("the family is not intersecting");
  } else {
    if (g->n() != f.n()) fail("the two families have different ground sets");
    if (g->uniformity() != cert.ell)
      fail("certificate ell does not match the second family's uniformity");
    if (!is_cross_intersecting(f, *g))
      fail("the pair is not cross-intersecting");
  }

  const VertexSet ground = VertexSet::full(cert.n);
  for (int i = 1; i <= cert.k && !failure; ++i) {
    VertexSet m = cert.chain[i - 1];
    if (!m.subset_of(ground))
      fail("chain level " + std::to_string(i) + " leaves the ground set");
    else if (i < cert.k && !m.subset_of(cert.chain[i]))
      fail("chain is not nested at level " + std::to_string(i),
           {{"level", i}});
    else if (m.size() < cert.size_bound(i))
      fail("size bound violated at level " + std::to_string(i),
           {{"level", i},
            {"size", m.size()},
            {"bound", cert.size_bound(i)}});
    else if (!cert.size_bound_ok[i - 1])
      fail("size_bound_ok understates level " + std::to_string(i));
  }

  // The chain must be explained by the recorded removals.
  if (!failure) {
    std::set<int> removal_levels;
    for (const auto& r : cert.removals) {
      if (r.level < 1 || r.level >= cert.k) {
        fail("removal at impossible level " + std::to_string(r.level));
        break;
      }
      if (!removal_levels.insert(r.level).second) {
        fail("two removals recorded at level " + std::to_string(r.level));
        break;
      }
    }
    for (int i = cert.k; i >= 2 && !failure; --i) {
      const VertexSet floor = cert.chain[i - 1];
      const Removal* r = nullptr;
      for (const auto& cand : cert.removals)
        if (cand.level == i - 1) r = &cand;
      VertexSet expect = floor;
      if (r) {
        if (!r->removed.subset_of(floor))
          fail("removed set at level " + std::to_string(i - 1) +
               " is not inside the floor above");
        int want = cert.mode == ChainMode::intersecting ? i - 1 : -1;
        if (want >= 0 && r->removed.size() != want)
          fail("removed set at level " + std::to_string(i - 1) +
               " has the wrong size");
        if (cert.mode == ChainMode::cross &&
            r->removed.size() > *cert.ell)
          fail("removed set at level " + std::to_string(i - 1) +
               " is larger than ell");
        expect = floor - r->removed;
        // Replay the recorded violation at the witnessing restriction.
        if (!failure) {
          if (!floor.subset_of(r->violating_m)) {
            fail("removal witness at level " + std::to_string(i - 1) +
                 " does not contain the floor");
          } else {
            const Family& side =
                cert.mode == ChainMode::intersecting ? f : *g;
            auto view = link(
                side, LinkSpec(r->removed, r->violating_m - r->removed));
            if (view_shadow_size(view.members()) >= view.size())
              fail("removal witness at level " + std::to_string(i - 1) +
                   " does not actually violate",
                   {{"set", to_string(r->removed)},
                    {"violating_m", to_string(r->violating_m)}});
          }
        }
      }
      if (!failure && !(cert.chain[i - 2] == expect))
        fail("chain level " + std::to_string(i - 1) +
             " does not follow from the level above and the removals");
    }
  }

  // F-side evidence: the listed levels carry complete coverage, and every
  // entry re-verifies by a fresh sweep.
  if (!failure) {
    if (cert.outcome == ChainOutcome::f_chain) {
      std::vector<int> want(cert.k);
      for (int i = 0; i < cert.k; ++i) want[i] = i + 1;
      if (cert.f_levels != want)
        fail("an F-chain must certify every level 1..k");
    }
    for (int lvl : cert.f_levels)
      if (lvl < 1 || lvl > cert.k) fail("f_levels entry out of range");
  }
  if (!failure) {
    std::set<std::uint64_t> listed;
    std::vector<std::size_t> per_level(cert.k + 1, 0);
    for (const auto& e : cert.f_evidence) {
      int sz = e.anchor.size();
      bool level_known =
          std::find(cert.f_levels.begin(), cert.f_levels.end(), sz) !=
          cert.f_levels.end();
      if (!level_known) {
        fail("evidence anchor " + braces(e.anchor) +
             " at a level the certificate does not claim");
        break;
      }
      if (!e.anchor.subset_of(cert.chain[sz - 1])) {
        fail("evidence anchor " + braces(e.anchor) +
             " is not inside its chain level");
        break;
      }
      if (!listed.insert(e.anchor.mask()).second) {
        fail("duplicate evidence anchor " + braces(e.anchor));
        break;
      }
      if (!e.verdict.holds) {
        fail("evidence entry at " + braces(e.anchor) +
             " does not even claim to hold");
        break;
      }
      auto fresh = is_link_pseudo_intersecting(f, LinkSpec(e.anchor, {}));
      ++entries_checked;
      if (!fresh.holds) {
        fail("the link at " + braces(e.anchor) +
             " is not pseudo-intersecting",
             {{"anchor", to_string(e.anchor)},
              {"witness_x", to_string(fresh.witness.value())}});
        break;
      }
      ++per_level[sz];
    }
    if (!failure)
      for (int lvl : cert.f_levels)
        if (per_level[lvl] !=
            static_cast<std::size_t>(binom(cert.chain[lvl - 1].size(), lvl)))
          fail("incomplete evidence at level " + std::to_string(lvl),
               {{"level", lvl}});
  }

  // G-side: a G-certificate must cover every B ⊆ M_low with |B| <= ell.
  if (!failure && cert.outcome == ChainOutcome::g_certificate) {
    const VertexSet low = cert.chain.front();
    std::set<std::uint64_t> listed;
    for (const auto& e : cert.g_evidence) {
      if (e.anchor.size() > *cert.ell || !e.anchor.subset_of(low)) {
        fail("second-family evidence anchor " + braces(e.anchor) +
             " is outside the certified range");
        break;
      }
      if (!listed.insert(e.anchor.mask()).second) {
        fail("duplicate second-family evidence anchor " + braces(e.anchor));
        break;
      }
      if (!e.verdict.holds) {
        fail("second-family evidence at " + braces(e.anchor) +
             " does not even claim to hold");
        break;
      }
      auto fresh = is_link_pseudo_intersecting(*g, LinkSpec(e.anchor, {}));
      ++entries_checked;
      if (!fresh.holds) {
        fail("the second family's link at " + braces(e.anchor) +
             " is not pseudo-intersecting",
             {{"anchor", to_string(e.anchor)}});
        break;
      }
    }
    if (!failure) {
      std::uint64_t want = 0;
      for (int j = 0; j <= *cert.ell; ++j) want += binom(low.size(), j);
      if (listed.size() != want)
        fail("incomplete second-family evidence",
             {{"have", listed.size()}, {"need", want}});
    }
  }
  if (!failure && cert.outcome == ChainOutcome::f_chain &&
      !cert.g_evidence.empty())
    fail("an F-chain certificate should carry no second-family evidence");

  v.holds = !failure.has_value();
  if (failure) {
    v.witness = {{"reason", failure->what}};
    if (!failure->detail.is_null()) v.witness["detail"] = failure->detail;
  }
  v.stats = {{"entries_checked", entries_checked},
             {"removals", cert.removals.size()},
             {"levels", cert.k}};
  return v;
}

}  // namespace shadowlab
