#pragma once

#include <cstdint>
#include <string>

#include "shadowlab/chain.hpp"
#include "shadowlab/family.hpp"

#include <json.hpp>

namespace shadowlab {

// Outcome of a named check. `witness` is null when there is nothing to show;
// `stats` always carries the counts the check compared.
struct Verdict {
  std::string claim;
  bool holds = false;
  nlohmann::json witness = nullptr;
  nlohmann::json stats = nlohmann::json::object();
};

nlohmann::json verdict_to_json(const Verdict& v);

// Exact C(n,k); 0 outside the triangle; throws Error if the exact value
// does not fit in 64 bits.
std::uint64_t binom(int n, int k);

// Minimum possible shadow size of m distinct k-sets: expand m greedily as
// C(a_k,k) + C(a_{k-1},k-1) + ... and sum C(a_j, j-1). Attained exactly by
// colex segments.
std::uint64_t kk_lower_bound(std::uint64_t m, int k);

// claim "katona": |∂F| >= |F| for an intersecting k-uniform family.
// Hypothesis violations (non-uniform, not intersecting) are DomainErrors.
Verdict check_katona(const Family& f);

// claim "frankl-cross": |∂F| >= min(|F|, |G|) for a cross-intersecting pair
// of k-uniform families over the same ground set.
Verdict check_frankl_cross(const Family& f, const Family& g);

// claim "local": some i ∈ [n] has |∂F(i)| >= |F(i)|. Never errors on an
// intersecting family: stats.regime records "guaranteed" (n > C(k+1,2)),
// "conjectured" (n > 2k), or "neither"; holds reports what the scan found.
Verdict check_local(const Family& f);

// claim "union-antichain": min_degree(F) <= C(n-1, l-1) for a (2l+1)-union
// antichain over [n], 2l+1 < n. The empty family counts as degree 0.
Verdict check_union_antichain_conjecture(const Family& f, int ell);

// claim "kk-bound": |∂F| >= kk_lower_bound(|F|, k) for any k-uniform family,
// k >= 1.
Verdict check_kk_bound(const Family& f);

// claim "replay": re-derives every statement a certificate makes against the
// families it claims to describe: chain shape and nesting, size bounds,
// removal witnesses, evidence coverage (no gaps, no extras), and a fresh
// sweep for every evidence entry. Structural garbage (wrong mode/arity,
// mismatched parameters) is a DomainError; any mathematical mismatch makes
// the verdict fail with the first offending statement as witness.
Verdict replay_certificate(const ChainCertificate& cert, const Family& f,
                           const Family* g = nullptr);

}  // namespace shadowlab
