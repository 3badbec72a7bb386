#pragma once

#include <cstdint>
#include <vector>

#include "ldt/feasible_set.hpp"

namespace ldt {

// Image of a binary feasible set under x -> 2x - 1. Every point lies on the
// sphere of squared radius n, so nearest-neighbor queries against it solve
// the original maximization exactly.
struct SignedPointSet {
  int n = 0;
  std::vector<std::vector<int8_t>> points;  // entries in {-1, +1}
  std::vector<int> source;                  // indices back into the feasible set
};

// Entrywise map 0 -> -1, 1 -> +1, order preserving. Throws on non-binary X.
SignedPointSet phi(const FeasibleSet& set);

// Exact nearest neighbor by linear scan, smallest-index tie-break.
int nns_linear_scan(const SignedPointSet& pts, const std::vector<double>& c);
// Same in exact rational arithmetic (squared distances compared exactly).
int nns_linear_scan_exact(const SignedPointSet& pts, const RatVec& c);

// Exact KD-tree with branch-and-bound. Ties resolved to the smallest source
// index; equal-distance boxes are never pruned, so results match the linear
// scan on every query.
class KdIndex {
 public:
  explicit KdIndex(SignedPointSet pts);

  int query(const std::vector<double>& c) const;  // feasible-set index
  const SignedPointSet& points() const { return pts_; }

 private:
  struct Node {
    int split_dim = -1;     // -1 for leaves
    int32_t left = -1, right = -1;
    int32_t begin = 0, end = 0;  // leaf range into order_
    std::vector<int8_t> box_lo, box_hi;
  };

  int32_t build(int32_t begin, int32_t end, std::vector<int32_t>& scratch);
  void search(int32_t node, const std::vector<double>& c, double& best_d2,
              int& best_idx) const;

  SignedPointSet pts_;
  std::vector<int32_t> order_;
  std::vector<Node> nodes_;
  int32_t root_ = -1;
};

}  // namespace ldt
