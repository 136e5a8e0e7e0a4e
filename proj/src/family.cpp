#include "shadowlab/family.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace shadowlab {

Family::Family(int n, std::optional<int> k, std::vector<VertexSet> members)
    : n_(GroundSpec(n).n), k_(k), members_(std::move(members)) {
  const VertexSet ground = VertexSet::full(n_);
  for (VertexSet m : members_)
    if (!m.subset_of(ground))
      throw DomainError("member " + braces(m) + " is not a subset of [" +
                        std::to_string(n_) + "]");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (k_) {
    if (*k_ < 0 || *k_ > n_)
      throw UniformityError("uniformity " + std::to_string(*k_) +
                            " out of range for ground set [" +
                            std::to_string(n_) + "]");
    for (VertexSet m : members_)
      if (m.size() != *k_)
        throw UniformityError("member " + braces(m) + " has size " +
                              std::to_string(m.size()) +
                              ", declared uniformity is " +
                              std::to_string(*k_));
  }
}

Family Family::uniform(int n, int k, std::vector<VertexSet> members) {
  return Family(n, k, std::move(members));
}

Family Family::of(int n, std::vector<VertexSet> members) {
  std::optional<int> k;
  if (!members.empty()) {
    int sz = members.front().size();
    bool same = std::all_of(members.begin(), members.end(),
                            [sz](VertexSet m) { return m.size() == sz; });
    if (same) k = sz;
  }
  return Family(n, k, std::move(members));
}

bool Family::contains(VertexSet s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

VertexSet Family::support() const {
  VertexSet u;
  for (VertexSet m : members_) u = u | m;
  return u;
}

namespace {
int require_uniformity(const Family& f, const char* op, int least) {
  auto k = f.uniformity();
  if (!k)
    throw UniformityError(std::string(op) + " requires a uniform family");
  if (*k < least)
    throw UniformityError(std::string(op) + " requires uniformity >= " +
                          std::to_string(least) + ", got " +
                          std::to_string(*k));
  return *k;
}
}  // namespace

Family shadow(const Family& f) {
  int k = require_uniformity(f, "shadow", 1);
  std::vector<VertexSet> out;
  out.reserve(f.size() * static_cast<std::size_t>(k));
  for (VertexSet m : f.members())
    for (int v : m) out.push_back(m.without(v));
  return Family::uniform(f.n(), k - 1, std::move(out));
}

Family link(const Family& f, const LinkSpec& spec) {
  int k = require_uniformity(f, "link", 0);
  if (spec.anchor.size() > k)
    throw DomainError("link anchor " + braces(spec.anchor) +
                      " is larger than the uniformity " + std::to_string(k));
  if (!(spec.anchor | spec.excluded).subset_of(VertexSet::full(f.n())))
    throw DomainError("link spec uses vertices outside the ground set [1," +
                      std::to_string(f.n()) + "]");
  std::vector<VertexSet> out;
  for (VertexSet m : f.members())
    if (spec.anchor.subset_of(m) && !m.intersects(spec.excluded))
      out.push_back(m - spec.anchor);
  return Family::uniform(f.n(), k - spec.anchor.size(), std::move(out));
}

Family join_vertex(const Family& h, int x) {
  if (x < 1 || x > h.n())
    throw DomainError("vertex " + std::to_string(x) +
                      " is outside the ground set [" + std::to_string(h.n()) +
                      "]");
  std::vector<VertexSet> out;
  out.reserve(h.size());
  for (VertexSet m : h.members()) {
    if (m.contains(x))
      throw DomainError("member " + braces(m) + " already contains " +
                        std::to_string(x));
    out.push_back(m.with(x));
  }
  auto k = h.uniformity();
  return k ? Family::uniform(h.n(), *k + 1, std::move(out))
           : Family::of(h.n(), std::move(out));
}

bool is_intersecting(const Family& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].empty()) return false;  // ∅ meets nothing, itself included
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].intersects(ms[j])) return false;
  }
  return true;
}

bool is_cross_intersecting(const Family& f, const Family& g) {
  if (f.n() != g.n())
    throw DomainError("cross-intersection needs a common ground set, got [" +
                      std::to_string(f.n()) + "] and [" +
                      std::to_string(g.n()) + "]");
  for (VertexSet a : f.members())
    for (VertexSet b : g.members())
      if (!a.intersects(b)) return false;
  return true;
}

bool is_t_union(const Family& f, int t) {
  if (t < 0) throw DomainError("union cap must be nonnegative");
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j)
      if ((ms[i] | ms[j]).size() > t) return false;
  return true;
}

bool is_antichain(const Family& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (i != j && ms[i].subset_of(ms[j])) return false;
  return true;
}

std::uint64_t min_degree(const Family& f) {
  if (f.empty()) throw DomainError("min_degree of the empty family");
  std::uint64_t best = f.size() + 1;
  for (int i = 1; i <= f.n(); ++i) {
    std::uint64_t deg = 0;
    for (VertexSet m : f.members())
      if (m.contains(i)) ++deg;
    best = std::min(best, deg);
  }
  return best;
}

// --- ".fam" ---------------------------------------------------------------

namespace {
bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

std::vector<long long> parse_ints(const std::string& s, int lineno) {
  std::vector<long long> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "not an integer: '" + tok + "'");
    }
  }
  return out;
}
}  // namespace

Family parse_fam(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = 0, k = -1;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header) || blank(header))
    throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n k' header");
  {
    auto vals = parse_ints(header, lineno);
    if (vals.size() != 2)
      throw ParseError(lineno, "header must be exactly 'n k'");
    if (vals[0] < 1 || vals[0] > kMaxGroundSize)
      throw ParseError(lineno, "n must be in [1," +
                                   std::to_string(kMaxGroundSize) + "], got " +
                                   std::to_string(vals[0]));
    n = static_cast<int>(vals[0]);
    if (vals[1] < 0 || vals[1] > n)
      throw ParseError(lineno, "k must be in [0,n], got " +
                                   std::to_string(vals[1]));
    k = static_cast<int>(vals[1]);
  }

  std::vector<VertexSet> members;
  std::set<std::uint64_t> seen;
  std::string body;
  while (next_line(body)) {
    if (blank(body)) break;  // terminator
    auto vals = parse_ints(body, lineno);
    VertexSet m;
    long long prev = 0;
    for (long long v : vals) {
      if (v < 1 || v > n)
        throw ParseError(lineno, "vertex " + std::to_string(v) +
                                     " outside the ground set [1," +
                                     std::to_string(n) + "]");
      if (v <= prev)
        throw ParseError(lineno, "vertices must be strictly increasing");
      prev = v;
      m = m.with(static_cast<int>(v));
    }
    if (k > 0 && m.size() != k)
      throw ParseError(lineno, "member has " + std::to_string(m.size()) +
                                   " vertices, header says k = " +
                                   std::to_string(k));
    if (!seen.insert(m.mask()).second)
      throw ParseError(lineno, "duplicate member " + braces(m));
    members.push_back(m);
  }

  return k > 0 ? Family::uniform(n, k, std::move(members))
               : Family::of(n, std::move(members));
}

Family parse_fam_string(const std::string& text) {
  std::istringstream iss(text);
  return parse_fam(iss);
}

Family parse_fam_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_fam(in);
}

std::string to_fam(const Family& f) {
  std::string out = std::to_string(f.n()) + " " +
                    std::to_string(f.uniformity().value_or(0)) + "\n";
  for (VertexSet m : f.members()) {
    if (m.empty())
      throw DomainError(
          "the empty set has no '.fam' representation (an empty line is the "
          "terminator)");
    out += to_string(m);
    out += '\n';
  }
  return out;
}

}  // namespace shadowlab
