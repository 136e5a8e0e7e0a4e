#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shadowlab/vertex_set.hpp"

namespace shadowlab {

// Selects the view "members containing every vertex of `anchor` and avoiding
// every vertex of `excluded`, with the anchor removed". The two parts must be
// disjoint.
struct LinkSpec {
  VertexSet anchor;
  VertexSet excluded;

  LinkSpec() = default;
  LinkSpec(VertexSet a, VertexSet b) : anchor(a), excluded(b) {
    if (anchor.intersects(excluded))
      throw SpecError("link anchor " + braces(anchor) +
                      " meets its exclusion set " + braces(excluded));
  }
};

// A finite family of subsets of [n]. Members are deduplicated and kept in
// colex order. Uniformity (all members the same size k) is tracked: it can be
// declared (and is then checked) or inferred from the members.
class Family {
 public:
  // Declares k-uniformity; throws UniformityError if some member disagrees.
  // k = 0 is the family {∅} or ∅ only.
  static Family uniform(int n, int k, std::vector<VertexSet> members);

  // Infers uniformity: all members the same size -> that size; empty or
  // mixed-size -> none.
  static Family of(int n, std::vector<VertexSet> members);

  int n() const { return n_; }
  std::optional<int> uniformity() const { return k_; }
  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexSet s) const;
  // Union of all members.
  VertexSet support() const;

  // Semantic equality: same ground set, same member set. Declared-vs-inferred
  // uniformity bookkeeping does not participate.
  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  Family(int n, std::optional<int> k, std::vector<VertexSet> members);

  int n_ = 1;
  std::optional<int> k_;
  std::vector<VertexSet> members_;
};

// ∂F = { F \ {x} : x ∈ F ∈ F }. Requires declared/inferred uniformity k >= 1;
// the result is (k-1)-uniform.
Family shadow(const Family& f);

// F(A, B̄) = { F \ A : A ⊆ F ∈ F, F ∩ B = ∅ }. Requires uniformity
// k >= |anchor|; the result is (k-|anchor|)-uniform. F(A) is spec {A, ∅}.
Family link(const Family& f, const LinkSpec& spec);

// { H ∪ {x} : H ∈ H }; errors if some member already contains x.
Family join_vertex(const Family& h, int x);

// Every two members meet. A family containing ∅ is never intersecting; the
// empty family is.
bool is_intersecting(const Family& f);

// Every member of f meets every member of g. Ground sets must agree.
bool is_cross_intersecting(const Family& f, const Family& g);

// |F ∪ F'| <= t for all members F, F' (including F = F').
bool is_t_union(const Family& f, int t);

// No member contains another.
bool is_antichain(const Family& f);

// min over i ∈ [n] of |{F ∈ F : i ∈ F}|; errors on the empty family.
std::uint64_t min_degree(const Family& f);

// --- ".fam" text format ------------------------------------------------
//
//   line 1:  n k        (k = 0 marks a non-uniform family)
//   then:    one member per line, vertices strictly increasing, space-
//            separated. '#' starts a comment line; the first blank line
//            terminates the family; duplicates and unsorted lines are errors.

Family parse_fam(std::istream& in);
Family parse_fam_string(const std::string& text);
Family parse_fam_file(const std::string& path);

// Errors if some member is ∅ (an empty line would read as the terminator).
std::string to_fam(const Family& f);

}  // namespace shadowlab
