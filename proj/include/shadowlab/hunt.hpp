#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowlab/verify.hpp"

#include <json.hpp>

namespace shadowlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ull;

// Deterministic, cross-platform RNG: a splitmix64 stream. Substreams for
// sample i are seeded with splitmix64(seed ^ i * odd-constant), so parallel
// sampling draws the same values as sequential.
class SplitMixRng {
 public:
  explicit SplitMixRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Unbiased draw from [0, m); rejection sampling. m must be positive.
  std::uint64_t below(std::uint64_t m);

  // Fisher–Yates with `below`, so the permutation is reproducible anywhere.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

struct SearchSpace {
  enum class Mode { exhaustive, random, structured };
  enum class Constraint { intersecting, cross_intersecting, union_antichain };

  int n = 0;
  int k = 0;
  std::optional<int> ell;  // cross pairs: uniformity of G; antichains: the l
  Mode mode = Mode::exhaustive;
  Constraint constraint = Constraint::intersecting;
  std::uint64_t samples = 0;          // random mode
  std::uint64_t seed = 0;             // random mode
  std::optional<int> max_family_size; // exhaustive: cap the DFS depth
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct RegimeTally {
  std::uint64_t guaranteed = 0;
  std::uint64_t conjectured = 0;
  std::uint64_t neither = 0;
};

// A family (pair) some claim failed on, with the failing verdict. Families
// are stored inline in ".fam" text so reports are self-contained.
struct HuntViolation {
  std::string family;
  std::optional<std::string> family2;
  Verdict verdict;
};

struct HuntReport {
  SearchSpace space;
  std::vector<std::string> claims;
  std::uint64_t examined = 0;
  std::vector<HuntViolation> violations;
  std::optional<RegimeTally> regimes;  // present when "local" was checked
  std::optional<std::string> rng;      // random mode: generator name
  bool budget_exhausted = false;
  double wall_ms = 0.0;
};

nlohmann::json report_to_json(const HuntReport& r);

// Every intersecting subfamily of the k-subsets of [n] exactly once (the
// empty family first, then DFS over colex-ordered candidates, each branch
// extending with later candidates only). Throws BudgetExceeded once `budget`
// families have been visited and more remain.
std::uint64_t enumerate_intersecting(
    int n, int k, const std::function<void(const Family&)>& visit,
    std::uint64_t budget = kDefaultNodeBudget,
    std::optional<int> max_size = std::nullopt);

// Every cross-intersecting pair (F, G), F over k-subsets and G over
// l-subsets of [n], exactly once: F runs over all subfamilies in DFS order,
// G over subfamilies of the l-sets meeting every member of F.
std::uint64_t enumerate_cross_pairs(
    int n, int k, int ell,
    const std::function<void(const Family&, const Family&)>& visit,
    std::uint64_t budget = kDefaultNodeBudget,
    std::optional<int> max_size = std::nullopt);

// Every (2l+1)-union antichain over [n] (members of size <= 2l+1) exactly
// once, same DFS discipline.
std::uint64_t enumerate_union_antichains(
    int n, int ell, const std::function<void(const Family&)>& visit,
    std::uint64_t budget = kDefaultNodeBudget,
    std::optional<int> max_size = std::nullopt);

// Greedy maximal intersecting family over a seeded shuffle of the k-sets;
// with `subsample`, each chosen member is then kept with probability 1/2
// (yielding non-maximal families). Deterministic in (n, k, seed, subsample).
Family random_intersecting(int n, int k, std::uint64_t seed,
                           bool subsample = false);

// Same pattern for a cross-intersecting pair: one shuffled pass over the
// tagged union of k-sets and l-sets, greedily keeping sets that preserve the
// cross property.
std::pair<Family, Family> random_cross_pair(int n, int k, int ell,
                                            std::uint64_t seed,
                                            bool subsample = false);

struct StructuredFamily {
  std::string tag;
  Family family;
};

// The classical intersecting families at (n, k): the star at 1, the complete
// family [n]^(k) when 2k > n, the Hilton–Milner family when it exists, and
// the triangle for k = 2.
std::vector<StructuredFamily> structured_families(int n, int k);

// Runs `claims` over the whole search space. Claims proved in this setting
// ("katona", "kk-bound", "frankl-cross", and "local" in its guaranteed
// regime) abort with CertificationError if they ever fail — that is a bug,
// not a discovery. Conjectured claims collect violations. A blown node
// budget yields the partial report with budget_exhausted set. `jobs` > 1
// splits top-level DFS branches across threads; the report is byte-identical
// to the sequential one.
HuntReport sweep(const SearchSpace& space, std::vector<std::string> claims,
                 int jobs = 1);

}  // namespace shadowlab
