#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowlab/pseudo.hpp"

#include <json.hpp>

namespace shadowlab {

enum class ChainMode { intersecting, cross };
enum class ChainOutcome { f_chain, g_certificate };

// One certified pseudo-intersecting claim: the link of the relevant family at
// `anchor` (with no exclusions) is pseudo-intersecting. `via` records how it
// was established: "direct" (full sweep) or "lemma" (hypotheses swept, the
// conclusion inferred).
struct EvidenceEntry {
  VertexSet anchor;
  PseudoVerdict verdict;
  std::string via;
};

// A set dropped while descending from level `level`+1 to `level`, together
// with the restriction set that witnessed the failure.
struct Removal {
  int level = 0;
  VertexSet removed;
  VertexSet violating_m;
};

// Certificate for the nested chain M_1 ⊆ M_2 ⊆ ... ⊆ M_k produced by the
// descent. chain[i-1] = M_i. Outcome f_chain carries complete F-side evidence
// for levels `f_levels` = {1,...,k}; outcome g_certificate (cross mode only)
// stops the descent early and instead certifies every G(B), B ⊆ M_low with
// |B| <= l, where M_low is the level the descent stopped at (all chain
// entries below it are equal).
struct ChainCertificate {
  ChainMode mode = ChainMode::intersecting;
  int n = 0;
  int k = 0;
  std::optional<int> ell;  // cross mode: uniformity of G
  ChainOutcome outcome = ChainOutcome::f_chain;
  std::vector<VertexSet> chain;
  std::vector<Removal> removals;
  std::vector<bool> size_bound_ok;   // per level, index i-1
  std::vector<int> f_levels;         // levels with complete F-side evidence
  std::vector<EvidenceEntry> f_evidence;  // sorted by (|anchor|, colex)
  std::vector<EvidenceEntry> g_evidence;  // g_certificate outcomes only

  // Lower bound the level-i chain entry must meet: n - sum_{i<=j<=k} j for
  // the intersecting mode, n - (k+1-i)*l for the cross mode. May be negative.
  long long size_bound(int level) const;
};

nlohmann::json certificate_to_json(const ChainCertificate& cert);
ChainCertificate certificate_from_json(const nlohmann::json& j);

// One descent step at anchor `a` over floor `m` (a ⊆ m): verifies by direct
// sweeps that (1) the view at `a` excluding the rest of the floor stays
// pseudo-intersecting under every further restriction and (2) every
// one-vertex extension of the anchor inside the floor has a pseudo-
// intersecting link; concludes that the link at `a` itself is pseudo-
// intersecting without sweeping it. Returns true; a failed hypothesis throws
// DomainError naming which one. With audit set, additionally runs the sweep
// the lemma avoided and throws CertificationError on any mismatch.
bool lemma_step(const Family& f, VertexSet a, VertexSet m, bool audit = false);

// Builds the chain for an intersecting k-uniform family, k >= 2. At each
// descent the (i-1)-subsets of M_i are scanned in colex order; the first
// failing one is removed (at most one removal per level is ever needed — a
// second would be an internal error). Every claim the certificate states is
// verified before it is recorded.
ChainCertificate build_chain_intersecting(const Family& f, bool audit = false);

// Cross variant for (F, G) cross-intersecting, F k-uniform (k >= 2), G
// l-uniform (l >= 1). Descent scans B ⊆ M_i with |B| <= l in size-then-colex
// order against G; if no B fails, the descent stops and the certificate
// switches to the G side. G = ∅ certifies trivially (every view of G is
// empty) with the full chain.
ChainCertificate build_chain_cross(const Family& f, const Family& g,
                                   bool audit = false);

// Least i ∈ [n] with |∂F(i)| >= |F(i)|, if any. Requires an intersecting
// uniform family, k >= 1 (the empty family returns 1 vacuously).
std::optional<int> local_witness(const Family& f);

// Least i ∈ [n] with |∂F(i)| >= |F(i)| or |∂G(i)| >= |G(i)|, for a
// cross-intersecting pair of uniform families.
std::optional<int> cross_local_witness(const Family& f, const Family& g);

}  // namespace shadowlab
