#pragma once

#include <vector>

#include "ldt/feasibility.hpp"
#include "ldt/feasible_set.hpp"

namespace ldt {

// Relative position of an optimality cone against a divider hyperplane
// h(c) = normal'c = 0: Below means the cone lies in {h <= 0}, Above in
// {h >= 0}, Straddles means it meets both open half-spaces.
enum class Position : uint8_t { Below, Above, Straddles };

struct Cone {
  int solution;  // index into FeasibleSet.points
};

// Oriented generating pair of a divider: the Above cone's solution minus the
// Below cone's solution is a positive multiple of the canonical normal.
struct DividerPair {
  int above_cone;
  int below_cone;
};

struct Divider {
  IntVec normal;  // canonical form
  std::vector<DividerPair> pairs;
};

struct NormalFan {
  FeasibleSet set;
  std::vector<Cone> cones;
  std::vector<Divider> dividers;  // ids assigned lexicographically on normal
  // position[divider][cone]
  std::vector<std::vector<Position>> position;
  int raw_divider_count = 0;  // adjacent unordered cone pairs before merging

  int cone_count() const { return static_cast<int>(cones.size()); }
  int divider_count() const { return static_cast<int>(dividers.size()); }
  // Dominance rows (x - x~) of the cone's solution against every other point.
  const std::vector<IntVec>& cone_rows(int cone) const { return cone_rows_[cone]; }
  int64_t straddle_count() const;

  std::vector<std::vector<IntVec>> cone_rows_;
};

// Indices of points whose optimality cone is full-dimensional, i.e. the
// vertices of the convex hull that are uniquely optimal for some cost vector.
std::vector<int> detect_vertex_cones(const FeasibleSet& set, FeasibilityOracle& oracle);

// Whether F(x_a) and F(x_b) share a ray (their intersection has positive
// dimension). Decided by at most 2n coordinate-direction probes. a != b.
bool cones_share_ray(const FeasibleSet& set, int sol_a, int sol_b, FeasibilityOracle& oracle);

// Position of a full-dimensional cone (given by its dominance rows) against a
// divider normal. Asserts that at least one side is reachable.
Position cone_position(const std::vector<IntVec>& cone_rows, const IntVec& normal,
                       int n, FeasibilityOracle& oracle);

// Builds the full normal fan: cones, dividers merged by co-linearity, and the
// complete cone-vs-divider position table. Requires |X| >= 2.
NormalFan build_fan(const FeasibleSet& set, FeasibilityOracle& oracle);

}  // namespace ldt
