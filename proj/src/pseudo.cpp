#include "shadowlab/pseudo.hpp"

#include <algorithm>

namespace shadowlab {

std::size_t view_shadow_size(const std::vector<VertexSet>& view) {
  std::vector<std::uint64_t> drops;
  drops.reserve(view.size() * 4);
  for (VertexSet w : view) {
    std::uint64_t m = w.mask();
    std::uint64_t rest = m;
    while (rest) {
      std::uint64_t low = rest & (rest - 1);
      drops.push_back(m ^ (rest ^ low));  // m minus the lowest bit of rest
      rest = low;
    }
  }
  std::sort(drops.begin(), drops.end());
  drops.erase(std::unique(drops.begin(), drops.end()), drops.end());
  return drops.size();
}

namespace {

struct SweepResult {
  bool holds = true;
  std::optional<VertexSet> violating_y;
  VertexSet universe;
};

// Sweeps every restriction Y ⊆ support(base) in colex order, comparing the
// shadow and member counts of { w ∈ base : w ∩ Y = ∅ }. Dropping vertices
// outside the support never changes the restricted view, so this is exact;
// the first violation found is the colex-least one.
SweepResult sweep_restrictions(const std::vector<VertexSet>& base) {
  SweepResult r;
  for (VertexSet w : base) r.universe = r.universe | w;

  std::vector<VertexSet> restricted;
  restricted.reserve(base.size());
  const std::uint64_t u = r.universe.mask();
  std::uint64_t y = 0;
  while (true) {
    restricted.clear();
    for (VertexSet w : base)
      if (!(w.mask() & y)) restricted.push_back(w);
    if (view_shadow_size(restricted) < restricted.size()) {
      r.holds = false;
      r.violating_y = VertexSet::from_mask(y);
      return r;
    }
    if (y == u) break;
    y = (y - u) & u;
  }
  return r;
}

int require_pseudo_input(const Family& f) {
  auto k = f.uniformity();
  if (!k || *k < 1)
    throw UniformityError(
        "pseudo-intersecting checks need a k-uniform family, k >= 1");
  return *k;
}

}  // namespace

PseudoVerdict is_pseudo_intersecting(const Family& f) {
  require_pseudo_input(f);
  auto r = sweep_restrictions(f.members());
  return {r.holds, r.violating_y, r.universe};
}

PseudoVerdict is_link_pseudo_intersecting(const Family& f,
                                          const LinkSpec& spec) {
  int k = require_pseudo_input(f);
  if (spec.anchor.size() > k)
    throw DomainError("link anchor " + braces(spec.anchor) +
                      " is larger than the uniformity " + std::to_string(k));
  Family view = link(f, spec);
  auto r = sweep_restrictions(view.members());
  return {r.holds, r.violating_y, r.universe};
}

PseudoVerdict is_view_pseudo_intersecting_over(const Family& f,
                                               const LinkSpec& spec,
                                               VertexSet floor) {
  int k = require_pseudo_input(f);
  if (spec.anchor.size() > k)
    throw DomainError("link anchor " + braces(spec.anchor) +
                      " is larger than the uniformity " + std::to_string(k));
  if (!floor.subset_of(VertexSet::full(f.n())))
    throw DomainError("floor " + braces(floor) +
                      " is not a subset of the ground set");
  if (!spec.excluded.subset_of(floor))
    throw DomainError("exclusion set " + braces(spec.excluded) +
                      " must lie inside the floor " + braces(floor));

  // The quantified views are { w : anchor ⊆ w ∈ f, w ∩ M = ∅ } over all
  // M ⊇ floor; their base (M = floor) already avoids the floor, and every
  // larger M only drops further support vertices. One sweep over the base
  // covers them all.
  Family base = link(f, spec);
  std::vector<VertexSet> view;
  view.reserve(base.size());
  for (VertexSet w : base.members())
    if (!w.intersects(floor)) view.push_back(w);
  auto r = sweep_restrictions(view);
  PseudoVerdict v;
  v.holds = r.holds;
  if (r.violating_y) v.witness = floor | *r.violating_y;
  v.checked_universe = floor | r.universe;
  return v;
}

}  // namespace shadowlab
