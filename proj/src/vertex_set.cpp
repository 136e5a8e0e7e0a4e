#include "shadowlab/vertex_set.hpp"

namespace shadowlab {

std::string to_string(VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string braces(VertexSet s) { return "{" + to_string(s) + "}"; }

std::vector<VertexSet> k_subsets(VertexSet universe, int k) {
  if (k < 0) throw DomainError("subset size must be nonnegative");
  std::vector<int> verts;
  for (int v : universe) verts.push_back(v);
  const int m = static_cast<int>(verts.size());
  std::vector<VertexSet> out;
  if (k > m) return out;
  if (k == 0) {
    out.push_back(VertexSet());
    return out;
  }
  // Index combinations c[0] < ... < c[k-1] in colex order: advance the lowest
  // index that can move up without hitting the next one, reset those below.
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    VertexSet s;
    for (int i = 0; i < k; ++i) s = s.with(verts[c[i]]);
    out.push_back(s);
    int i = 0;
    while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : m)) ++i;
    if (i == k) break;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
  return out;
}

std::vector<VertexSet> subsets_up_to(VertexSet universe, int cap) {
  std::vector<VertexSet> out;
  for (int k = 0; k <= cap && k <= universe.size(); ++k) {
    auto layer = k_subsets(universe, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace shadowlab
