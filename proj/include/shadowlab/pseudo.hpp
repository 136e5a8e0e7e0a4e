#pragma once

#include <optional>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab {

// Outcome of a pseudo-intersecting check. When the property fails, `witness`
// is the colex-least violating restriction set; `checked_universe` bounds the
// sets the sweep had to look at (violations outside it are impossible, which
// is what makes the pruned sweep exact).
struct PseudoVerdict {
  bool holds = true;
  std::optional<VertexSet> witness;
  VertexSet checked_universe;
};

// |{ w \ {x} : x ∈ w ∈ view }|, computed directly. Members may have mixed
// sizes; empty members contribute nothing.
std::size_t view_shadow_size(const std::vector<VertexSet>& view);

// F is pseudo-intersecting iff |∂F(X̄)| >= |F(X̄)| for every X ⊆ [n], where
// F(X̄) keeps the members disjoint from X. Requires uniformity k >= 1.
//
// Only X ⊆ support(F) can matter: adding a vertex outside every member never
// changes F(X̄). The sweep therefore runs over subsets of the support in
// colex order, and a reported witness is the globally colex-least violator.
PseudoVerdict is_pseudo_intersecting(const Family& f);

// The view F(A, B̄) is pseudo-intersecting (as a family in its own right:
// |∂ of the view restricted by X| >= |view restricted by X| for all X).
// Requires uniformity k >= |anchor|; |anchor| = k makes the view 0-uniform,
// where {∅} fails (its shadow is empty) and ∅ holds.
PseudoVerdict is_link_pseudo_intersecting(const Family& f,
                                          const LinkSpec& spec);

// Quantifies over supersets of a floor: holds iff for every M with
// floor ⊆ M ⊆ [n], |∂F(anchor, (M\anchor)‾)| >= |F(anchor, (M\anchor)‾)|.
// Requires excluded ⊆ floor ⊆ [n]. A witness is the colex-least failing M
// (floor included in it). This is the primitive the chain builder sweeps.
PseudoVerdict is_view_pseudo_intersecting_over(const Family& f,
                                               const LinkSpec& spec,
                                               VertexSet floor);

}  // namespace shadowlab
