#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ldt/fan.hpp"
#include "ldt/policy.hpp"

namespace ldt {

constexpr int kInfDepth = std::numeric_limits<int>::max() / 4;

// Identity of a synthesis node: the set of dividers with decided signs.
// Entry +(id+1) means the divider was resolved to its >0 side, -(id+1) to its
// <0 side; entries are sorted by divider id. Depth is the entry count.
struct NodeKey {
  std::vector<int32_t> signed_ids;

  int depth() const { return static_cast<int>(signed_ids.size()); }
  bool contains(int divider) const;
  NodeKey child(int divider, bool hi) const;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  size_t operator()(const NodeKey& k) const;
};

struct SynthConfig {
  std::vector<int> schedule;    // empty: 1,2,...,|H(X)|
  double budget_seconds = 0.0;  // 0 = unlimited
  bool early_stop = true;       // stop once the incumbent matches the root lower bound
  bool infer = true;            // cone/divider inference rules from the position table
  bool sort_dividers = true;    // discrepancy sort (off: divider-id order)
  std::string instance;         // descriptor copied into the policy meta
};

struct SynthReport {
  int depth = kInfDepth;
  bool completed = false;
  uint64_t nodes_processed = 0;  // distinct node keys evaluated
  uint64_t lp_solved = 0;
  uint64_t lp_cache_hits = 0;
  int root_cones = 0;
  int root_dividers = 0;
  int dividers_total = 0;
  std::vector<int> schedule_run;
  struct Iteration {
    int kappa;
    int depth;  // incumbent after the iteration
    double seconds;
  };
  std::vector<Iteration> iterations;
  double seconds = 0.0;
};

// Minimal-height lower bound: every branching at best halves the candidates.
int ceil_log2(size_t k);

// Squared deviation of a split from a perfectly balanced partition of the
// parent's candidate cones (child sets may overlap; exact in quarters).
double split_discrepancy(size_t parent, size_t lo, size_t hi);

// Strict rows of the region of `key` over `domain` (region rows plus signed
// domain coordinate rows).
std::vector<IntVec> region_strict_rows(const NormalFan& fan, const CostDomain& domain,
                                       const NodeKey& key);

// Candidate cones of one child region, from the parent's candidates. With
// inference on, only cones straddling the divider are checked by the oracle.
std::vector<uint16_t> child_side_cones(const NormalFan& fan, const CostDomain& domain,
                                       const NodeKey& child_key,
                                       const std::vector<uint16_t>& parent_cones,
                                       int divider, bool hi, FeasibilityOracle& oracle,
                                       bool infer = true);

// Both children at once (test and ablation support).
std::pair<std::vector<uint16_t>, std::vector<uint16_t>> child_candidates(
    const NormalFan& fan, const CostDomain& domain, const NodeKey& key,
    const std::vector<uint16_t>& cones, int divider, FeasibilityOracle& oracle,
    bool infer = true);

// Direct emptiness test of region(key) intersected with the divider
// hyperplane (used with inference off and by validation tests).
bool divider_crosses_region(const NormalFan& fan, const CostDomain& domain,
                            const NodeKey& key, int divider, FeasibilityOracle& oracle);

// Root candidate cones over the open domain orthant.
std::vector<uint16_t> root_candidate_cones(const NormalFan& fan, const CostDomain& domain,
                                           FeasibilityOracle& oracle);

// Iterative dynamic-programming synthesis over the divider-based binary LDT
// class. With the full schedule the reported depth is the exact minimum.
std::pair<LdtPolicy, SynthReport> synthesize(const NormalFan& fan, const CostDomain& domain,
                                             FeasibilityOracle& oracle,
                                             const SynthConfig& config = {});

// Single pass with kappa = 1: one (best-sorted) divider explored per node.
std::pair<LdtPolicy, SynthReport> synthesize_greedy(const NormalFan& fan,
                                                    const CostDomain& domain,
                                                    FeasibilityOracle& oracle,
                                                    SynthConfig config = {});

}  // namespace ldt
