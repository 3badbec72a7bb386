#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldt/feasible_set.hpp"

namespace ldt {

class BallSampler;

// Linear decision tree policy: internal nodes test the sign of an integer
// linear form of the cost vector, leaves return a solution from the feasible
// set. Routing sends h(c) >= 0 to the hi child and h(c) < 0 to the lo child.
struct LdtPolicy {
  struct Node {
    bool leaf = false;
    IntVec vec;             // branch: normal; leaf: solution
    int32_t lo = -1, hi = -1;
  };

  int dim = 0;
  std::vector<Node> nodes;
  int32_t root = 0;
  FeasibleSet set;  // the feasible set the policy answers for

  struct Meta {
    std::string instance;
    std::string mode;  // greedy | iterative
    int depth = 0;     // max root-to-leaf edge count
  } meta;
};

struct EvalResult {
  const IntVec* solution;
  int leaf_depth;
};

// Query-time traversal in double arithmetic (benchmark path).
EvalResult evaluate(const LdtPolicy& policy, const std::vector<double>& c);
// Exact-rational traversal for correctness checks.
EvalResult evaluate_exact(const LdtPolicy& policy, const RatVec& c);

struct EvalStats {
  int queries = 0;
  int depth_max = 0;
  int depth_min = 0;
  double depth_avg = 0.0;
  double nanos_per_query = 0.0;  // benchmark mode only
};

EvalStats eval_stats(const LdtPolicy& policy, BallSampler& sampler, int num_queries,
                     bool benchmark = false);

// Structural validation: single root, acyclic, every node reachable, leaf
// solutions members of the recorded set, meta.depth equal to the tree depth.
// Throws std::runtime_error describing the first violation.
void validate_policy(const LdtPolicy& policy);

int tree_depth(const LdtPolicy& policy);
int leaf_count(const LdtPolicy& policy);

// Self-describing text serialization with content hashes over the point block
// and the node block. load_policy re-validates structure and integrity.
void save_policy(const LdtPolicy& policy, const std::string& path);
LdtPolicy load_policy(const std::string& path);
std::string policy_text(const LdtPolicy& policy);
LdtPolicy parse_policy_text(const std::string& text);

}  // namespace ldt
