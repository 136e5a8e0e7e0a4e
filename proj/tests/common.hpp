#pragma once

// Shared fixtures for the test binaries: canonical families and conversions
// between Family and the raw masks the oracles work with.

#include <vector>

#include "oracles.hpp"
#include "shadowlab/family.hpp"
#include "shadowlab/hunt.hpp"

namespace fixtures {

using shadowlab::Family;
using shadowlab::VertexSet;

inline Family star(int n, int k) {
  std::vector<VertexSet> members;
  for (auto rest : shadowlab::k_subsets(VertexSet::full(n).without(1), k - 1))
    members.push_back(rest.with(1));
  return Family::uniform(n, k, members);
}

inline Family complete(int n, int k) {
  return Family::uniform(n, k, shadowlab::k_subsets(VertexSet::full(n), k));
}

inline std::vector<oracle::Mask> masks_of(const Family& f) {
  std::vector<oracle::Mask> out;
  for (const auto& m : f.members()) out.push_back(m.mask());
  return out;
}

inline Family from_masks(int n, const std::vector<oracle::Mask>& masks) {
  std::vector<VertexSet> members;
  for (auto m : masks) members.push_back(VertexSet::from_mask(m));
  return Family::of(n, members);
}

// A random k-uniform family: each k-subset of [n] kept with probability 1/d.
inline Family random_uniform(shadowlab::SplitMixRng& rng, int n, int k,
                             int d = 3) {
  std::vector<VertexSet> pick;
  for (const auto& c : shadowlab::k_subsets(VertexSet::full(n), k))
    if (rng.below(d) == 0) pick.push_back(c);
  return Family::uniform(n, k, pick);
}

inline VertexSet random_subset_of(shadowlab::SplitMixRng& rng, VertexSet u) {
  VertexSet out;
  for (int v : u)
    if (rng.below(2) == 0) out = out.with(v);
  return out;
}

}  // namespace fixtures
