#pragma once

#include <string>
#include <vector>

#include "ldt/policy.hpp"

namespace ldt {

// Flattens a policy into a standalone C function of nested if-else
// statements: each branch tests a signed integer combination of the cost
// entries against 0.0 (the < side routes to the lo child), each leaf returns
// a static solution array. Output is byte-deterministic.
std::string emit_flat_source(const LdtPolicy& policy);

// Re-interpreter of the emitted text, used to check semantic equivalence
// against the tree traversal without compiling the output.
class FlatInterpreter {
 public:
  explicit FlatInterpreter(const std::string& source);

  std::vector<int> run(const std::vector<double>& c) const;
  int dim() const { return dim_; }

 private:
  struct Node {
    std::vector<std::pair<int, long long>> terms;  // (index, coefficient)
    int lo = -1, hi = -1;
    std::vector<int> solution;
    bool leaf = false;
  };
  int parse_block(const std::string& src, size_t& pos);

  int dim_ = 0;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace ldt
