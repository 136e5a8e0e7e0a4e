#include "shadowlab/chain.hpp"

#include <algorithm>

#include <json.hpp>

namespace shadowlab {

using nlohmann::json;

long long ChainCertificate::size_bound(int level) const {
  if (level < 1 || level > k) throw DomainError("level out of range");
  if (mode == ChainMode::intersecting) {
    long long s = 0;
    for (int j = level; j <= k; ++j) s += j;
    return static_cast<long long>(n) - s;
  }
  return static_cast<long long>(n) -
         static_cast<long long>(k + 1 - level) * ell.value();
}

namespace {

PseudoVerdict lemma_inferred_verdict(const Family& fam, VertexSet anchor) {
  PseudoVerdict v;
  v.holds = true;
  v.checked_universe = link(fam, LinkSpec(anchor, VertexSet())).support();
  return v;
}

void sort_evidence(std::vector<EvidenceEntry>& ev) {
  std::sort(ev.begin(), ev.end(),
            [](const EvidenceEntry& a, const EvidenceEntry& b) {
              if (a.anchor.size() != b.anchor.size())
                return a.anchor.size() < b.anchor.size();
              return a.anchor < b.anchor;
            });
}

void finalize_bounds(ChainCertificate& cert) {
  cert.size_bound_ok.assign(cert.k, false);
  for (int i = 1; i <= cert.k; ++i)
    cert.size_bound_ok[i - 1] =
        cert.chain[i - 1].size() >= cert.size_bound(i);
}

[[noreturn]] void certification_bug(const std::string& what) {
  throw CertificationError(what + " — this contradicts a certified claim");
}

}  // namespace

bool lemma_step(const Family& f, VertexSet a, VertexSet m, bool audit) {
  int k = [&] {
    auto u = f.uniformity();
    if (!u || *u < 1)
      throw UniformityError("lemma step needs a k-uniform family, k >= 1");
    return *u;
  }();
  if (a.size() > k)
    throw DomainError("anchor " + braces(a) +
                      " is larger than the uniformity " + std::to_string(k));
  if (!a.subset_of(m))
    throw DomainError("anchor " + braces(a) + " must lie inside the floor " +
                      braces(m));
  if (!m.subset_of(VertexSet::full(f.n())))
    throw DomainError("floor " + braces(m) +
                      " is not a subset of the ground set");

  auto h1 = is_link_pseudo_intersecting(f, LinkSpec(a, m - a));
  if (!h1.holds)
    throw DomainError(
        "hypothesis 1 failed: the view at " + braces(a) + " excluding " +
        braces(m - a) + " is not pseudo-intersecting (restriction " +
        braces(h1.witness.value()) + " violates)");
  for (int x : m - a) {
    auto h2 = is_link_pseudo_intersecting(f, LinkSpec(a.with(x), VertexSet()));
    if (!h2.holds)
      throw DomainError("hypothesis 2 failed: the link at " +
                        braces(a.with(x)) + " is not pseudo-intersecting");
  }
  if (audit) {
    auto direct = is_link_pseudo_intersecting(f, LinkSpec(a, VertexSet()));
    if (!direct.holds)
      certification_bug("audit sweep at anchor " + braces(a) +
                        " contradicts the inferred conclusion");
  }
  return true;
}

namespace {

// Certifies "the link at every `level`-subset of `members_of` is pseudo-
// intersecting" through the lemma, with `floor` the level-above chain entry
// (the lemma's hypotheses are stated against it). A hypothesis failing here
// is an internal error: the descent already scanned this floor.
void certify_level(ChainCertificate& cert, const Family& f, int level,
                   VertexSet members_of, VertexSet floor, bool audit) {
  for (VertexSet a : k_subsets(members_of, level)) {
    try {
      lemma_step(f, a, floor, audit);
    } catch (const DomainError& e) {
      certification_bug("level " + std::to_string(level) +
                        ": descent hypothesis failed at anchor " + braces(a) +
                        " (" + e.what() + ")");
    }
    cert.f_evidence.push_back({a, lemma_inferred_verdict(f, a), "lemma"});
  }
  cert.f_levels.push_back(level);
}

void certify_top_level(ChainCertificate& cert, const Family& f) {
  for (VertexSet a : k_subsets(cert.chain[cert.k - 1], cert.k)) {
    auto v = is_link_pseudo_intersecting(f, LinkSpec(a, VertexSet()));
    if (!v.holds)
      certification_bug("the link at top-level anchor " + braces(a) +
                        " is not pseudo-intersecting");
    cert.f_evidence.push_back({a, v, "direct"});
  }
  cert.f_levels.push_back(cert.k);
}

void finalize(ChainCertificate& cert) {
  sort_evidence(cert.f_evidence);
  sort_evidence(cert.g_evidence);
  std::sort(cert.f_levels.begin(), cert.f_levels.end());
  finalize_bounds(cert);
}

}  // namespace

ChainCertificate build_chain_intersecting(const Family& f, bool audit) {
  auto ku = f.uniformity();
  if (!ku || *ku < 2)
    throw UniformityError(
        "chain construction needs a k-uniform family, k >= 2");
  if (!is_intersecting(f))
    throw DomainError("chain construction needs an intersecting family");
  const int k = *ku;
  const int n = f.n();

  ChainCertificate cert;
  cert.mode = ChainMode::intersecting;
  cert.n = n;
  cert.k = k;
  cert.outcome = ChainOutcome::f_chain;
  cert.chain.assign(k, VertexSet());

  // Empty family: every link is empty, the full chain works as-is.
  cert.chain[k - 1] =
      f.empty() ? VertexSet::full(n) : VertexSet::full(n) - f.members().front();
  certify_top_level(cert, f);

  for (int i = k; i >= 2; --i) {
    const VertexSet floor = cert.chain[i - 1];
    std::optional<Removal> removal;
    for (VertexSet b : k_subsets(floor, i - 1)) {
      auto v = is_view_pseudo_intersecting_over(f, LinkSpec(b, floor - b),
                                                floor);
      if (!v.holds) {
        removal = Removal{i - 1, b, v.witness.value()};
        break;
      }
    }
    VertexSet next = floor;
    if (removal) {
      next = floor - removal->removed;
      cert.removals.push_back(*removal);
    }
    cert.chain[i - 2] = next;
    // At most one set can fail per level; lemma_step throwing here for a
    // second one is an internal error, surfaced by certify_level.
    certify_level(cert, f, i - 1, next, floor, audit);
  }

  finalize(cert);
  return cert;
}

ChainCertificate build_chain_cross(const Family& f, const Family& g,
                                   bool audit) {
  auto ku = f.uniformity();
  if (!ku || *ku < 2)
    throw UniformityError(
        "cross chain construction needs a k-uniform family, k >= 2");
  auto lu = g.uniformity();
  if (!lu || *lu < 1)
    throw UniformityError(
        "cross chain construction needs an l-uniform second family, l >= 1");
  if (!is_cross_intersecting(f, g))
    throw DomainError("cross chain construction needs a cross-intersecting "
                      "pair");
  const int k = *ku;
  const int ell = *lu;
  const int n = f.n();

  ChainCertificate cert;
  cert.mode = ChainMode::cross;
  cert.n = n;
  cert.k = k;
  cert.ell = ell;
  cert.chain.assign(k, VertexSet());

  auto certify_g_side = [&](VertexSet low) {
    // G(B) is pseudo-intersecting for every B ⊆ low with |B| <= l: directly
    // at |B| = l (the view there ignores restrictions entirely), then by
    // descending size through the lemma, each round's hypothesis sweeps
    // re-verifying the previous round's conclusions.
    for (int j = ell; j >= 0; --j) {
      for (VertexSet b : k_subsets(low, j)) {
        if (j == ell) {
          auto v = is_link_pseudo_intersecting(g, LinkSpec(b, VertexSet()));
          if (!v.holds)
            certification_bug("the second family's link at " + braces(b) +
                              " is not pseudo-intersecting");
          cert.g_evidence.push_back({b, v, "direct"});
        } else {
          try {
            lemma_step(g, b, low, audit);
          } catch (const DomainError& e) {
            certification_bug("second-family descent failed at " + braces(b) +
                              " (" + e.what() + ")");
          }
          cert.g_evidence.push_back({b, lemma_inferred_verdict(g, b),
                                     "lemma"});
        }
      }
    }
  };

  if (g.empty()) {
    // Nothing constrains the chain; every view of G is empty, so the G side
    // certifies trivially over the full ground set.
    for (int i = 1; i <= k; ++i) cert.chain[i - 1] = VertexSet::full(n);
    cert.outcome = ChainOutcome::g_certificate;
    certify_g_side(VertexSet::full(n));
    finalize(cert);
    return cert;
  }

  cert.outcome = ChainOutcome::f_chain;
  cert.chain[k - 1] = VertexSet::full(n) - g.members().front();
  certify_top_level(cert, f);

  for (int i = k; i >= 2; --i) {
    const VertexSet floor = cert.chain[i - 1];
    std::optional<Removal> removal;
    for (VertexSet b : subsets_up_to(floor, ell)) {
      auto v = is_view_pseudo_intersecting_over(g, LinkSpec(b, floor - b),
                                                floor);
      if (!v.holds) {
        removal = Removal{i - 1, b, v.witness.value()};
        break;
      }
    }
    if (!removal) {
      // The second family's views all survive every restriction: stop the
      // descent and certify the G side over this floor instead.
      for (int j = i - 1; j >= 1; --j) cert.chain[j - 1] = floor;
      cert.outcome = ChainOutcome::g_certificate;
      certify_g_side(floor);
      finalize(cert);
      return cert;
    }
    VertexSet next = floor - removal->removed;
    cert.removals.push_back(*removal);
    cert.chain[i - 2] = next;
    certify_level(cert, f, i - 1, next, floor, audit);
  }

  finalize(cert);
  return cert;
}

std::optional<int> local_witness(const Family& f) {
  auto ku = f.uniformity();
  if (!ku || *ku < 1)
    throw UniformityError("local witness needs a k-uniform family, k >= 1");
  if (!is_intersecting(f))
    throw DomainError("local witness needs an intersecting family");
  for (int i = 1; i <= f.n(); ++i) {
    auto view = link(f, LinkSpec(VertexSet::single(i), VertexSet()));
    if (view_shadow_size(view.members()) >= view.size()) return i;
  }
  return std::nullopt;
}

std::optional<int> cross_local_witness(const Family& f, const Family& g) {
  auto ku = f.uniformity();
  auto lu = g.uniformity();
  if (!ku || !lu || *ku < 1 || *lu < 1)
    throw UniformityError("cross local witness needs two uniform families");
  if (!is_cross_intersecting(f, g))
    throw DomainError("cross local witness needs a cross-intersecting pair");
  for (int i = 1; i <= f.n(); ++i) {
    LinkSpec at(VertexSet::single(i), VertexSet());
    auto fv = link(f, at);
    if (view_shadow_size(fv.members()) >= fv.size()) return i;
    auto gv = link(g, at);
    if (view_shadow_size(gv.members()) >= gv.size()) return i;
  }
  return std::nullopt;
}

// --- JSON -------------------------------------------------------------------

namespace {

json set_to_json(VertexSet s) {
  json a = json::array();
  for (int v : s) a.push_back(v);
  return a;
}

VertexSet set_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("certificate: expected a vertex array");
  VertexSet s;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw DomainError("certificate: expected integer vertices");
    int x = v.get<int>();
    if (x < 1 || x > kMaxGroundSize)
      throw DomainError("certificate: vertex out of range");
    s = s.with(x);
  }
  return s;
}

json verdict_json(const PseudoVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["witness_x"] = v.witness ? set_to_json(*v.witness) : json(nullptr);
  j["checked_universe"] = set_to_json(v.checked_universe);
  return j;
}

PseudoVerdict verdict_from(const json& j) {
  PseudoVerdict v;
  v.holds = j.at("holds").get<bool>();
  if (!j.at("witness_x").is_null()) v.witness = set_from_json(j.at("witness_x"));
  v.checked_universe = set_from_json(j.at("checked_universe"));
  return v;
}

json evidence_json(const std::vector<EvidenceEntry>& ev) {
  json a = json::array();
  for (const auto& e : ev) {
    json j = verdict_json(e.verdict);
    j["anchor"] = set_to_json(e.anchor);
    j["via"] = e.via;
    a.push_back(std::move(j));
  }
  return a;
}

std::vector<EvidenceEntry> evidence_from(const json& a) {
  if (!a.is_array()) throw DomainError("certificate: evidence must be a list");
  std::vector<EvidenceEntry> out;
  for (const auto& j : a) {
    EvidenceEntry e;
    e.anchor = set_from_json(j.at("anchor"));
    e.verdict = verdict_from(j);
    e.via = j.at("via").get<std::string>();
    if (e.via != "direct" && e.via != "lemma")
      throw DomainError("certificate: unknown evidence origin '" + e.via +
                        "'");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

json certificate_to_json(const ChainCertificate& cert) {
  json j;
  j["mode"] =
      cert.mode == ChainMode::intersecting ? "intersecting" : "cross";
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["ell"] = cert.ell ? json(*cert.ell) : json(nullptr);
  j["outcome"] = cert.outcome == ChainOutcome::f_chain ? "F_CHAIN"
                                                       : "G_CERTIFICATE";
  json chain = json::array();
  for (VertexSet m : cert.chain) chain.push_back(set_to_json(m));
  j["chain"] = std::move(chain);
  json removals = json::array();
  for (const auto& r : cert.removals)
    removals.push_back({{"level", r.level},
                        {"set", set_to_json(r.removed)},
                        {"violating_m", set_to_json(r.violating_m)}});
  j["removals"] = std::move(removals);
  j["size_bound_ok"] = cert.size_bound_ok;
  j["f_levels"] = cert.f_levels;
  j["f_evidence"] = evidence_json(cert.f_evidence);
  j["g_evidence"] = evidence_json(cert.g_evidence);
  return j;
}

ChainCertificate certificate_from_json(const json& j) {
  try {
    ChainCertificate cert;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "intersecting")
      cert.mode = ChainMode::intersecting;
    else if (mode == "cross")
      cert.mode = ChainMode::cross;
    else
      throw DomainError("certificate: unknown mode '" + mode + "'");
    cert.n = GroundSpec(j.at("n").get<int>()).n;
    cert.k = j.at("k").get<int>();
    if (cert.k < 1 || cert.k > cert.n)
      throw DomainError("certificate: k out of range");
    if (!j.at("ell").is_null()) {
      cert.ell = j.at("ell").get<int>();
      if (*cert.ell < 1 || *cert.ell > cert.n)
        throw DomainError("certificate: ell out of range");
    }
    if (cert.mode == ChainMode::cross && !cert.ell)
      throw DomainError("certificate: cross mode needs ell");
    std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "F_CHAIN")
      cert.outcome = ChainOutcome::f_chain;
    else if (outcome == "G_CERTIFICATE")
      cert.outcome = ChainOutcome::g_certificate;
    else
      throw DomainError("certificate: unknown outcome '" + outcome + "'");
    if (cert.mode == ChainMode::intersecting &&
        cert.outcome == ChainOutcome::g_certificate)
      throw DomainError(
          "certificate: G_CERTIFICATE is only meaningful in cross mode");
    for (const auto& m : j.at("chain")) cert.chain.push_back(set_from_json(m));
    if (static_cast<int>(cert.chain.size()) != cert.k)
      throw DomainError("certificate: chain must have exactly k levels");
    for (const auto& r : j.at("removals"))
      cert.removals.push_back(Removal{r.at("level").get<int>(),
                                      set_from_json(r.at("set")),
                                      set_from_json(r.at("violating_m"))});
    cert.size_bound_ok = j.at("size_bound_ok").get<std::vector<bool>>();
    if (static_cast<int>(cert.size_bound_ok.size()) != cert.k)
      throw DomainError("certificate: size_bound_ok must have k entries");
    cert.f_levels = j.at("f_levels").get<std::vector<int>>();
    cert.f_evidence = evidence_from(j.at("f_evidence"));
    cert.g_evidence = evidence_from(j.at("g_evidence"));
    return cert;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace shadowlab
