#include "ldt/fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ldt {

namespace {

std::vector<IntVec> dominance_rows(const FeasibleSet& set, int sol) {
  std::vector<IntVec> rows;
  rows.reserve(set.points.size() - 1);
  for (int j = 0; j < set.size(); ++j) {
    if (j == sol) continue;
    rows.push_back(sub(set.points[sol], set.points[j]));
  }
  return rows;
}

}  // namespace

int64_t NormalFan::straddle_count() const {
  int64_t c = 0;
  for (const auto& row : position)
    for (Position p : row)
      if (p == Position::Straddles) ++c;
  return c;
}

std::vector<int> detect_vertex_cones(const FeasibleSet& set, FeasibilityOracle& oracle) {
  std::vector<int> out;
  for (int i = 0; i < set.size(); ++i) {
    // full-dimensional iff some c strictly dominates every other point
    LinSystem sys(set.n);
    for (IntVec& row : dominance_rows(set, i)) sys.add(std::move(row), Rel::GeOne);
    if (oracle.is_feasible(sys)) out.push_back(i);
  }
  return out;
}

bool cones_share_ray(const FeasibleSet& set, int sol_a, int sol_b, FeasibilityOracle& oracle) {
  if (sol_a == sol_b) throw std::invalid_argument("cones_share_ray: identical cones");
  const std::vector<IntVec> rows_a = dominance_rows(set, sol_a);
  const std::vector<IntVec> rows_b = dominance_rows(set, sol_b);
  // A nonzero point of the intersection can be rescaled so that some
  // coordinate is +-1, so 2n sign probes decide positive-dimensionality.
  for (int k = 0; k < set.n; ++k) {
    for (int s = 0; s < 2; ++s) {
      LinSystem sys(set.n);
      for (const IntVec& r : rows_a) sys.add(r, Rel::GeZero);
      for (const IntVec& r : rows_b) sys.add(r, Rel::GeZero);
      IntVec e(set.n, Int(0));
      e[k] = s ? -1 : 1;
      sys.add(std::move(e), Rel::GeOne);
      if (oracle.is_feasible(sys)) return true;
    }
  }
  return false;
}

Position cone_position(const std::vector<IntVec>& cone_rows, const IntVec& normal,
                       int n, FeasibilityOracle& oracle) {
  LinSystem above(n);
  for (const IntVec& r : cone_rows) above.add(r, Rel::GeZero);
  LinSystem below = above;
  above.add(normal, Rel::GeOne);
  below.add(negated(normal), Rel::GeOne);
  const bool hi = oracle.is_feasible(above);
  const bool lo = oracle.is_feasible(below);
  if (hi && lo) return Position::Straddles;
  if (hi) return Position::Above;
  if (lo) return Position::Below;
  throw std::logic_error("cone_position: cone reaches neither side of a divider");
}

NormalFan build_fan(const FeasibleSet& set, FeasibilityOracle& oracle) {
  if (set.size() < 2) throw std::invalid_argument("build_fan: need at least 2 points");
  NormalFan fan;
  fan.set = set;

  const std::vector<int> vertices = detect_vertex_cones(set, oracle);
  if (vertices.empty()) throw std::runtime_error("build_fan: no full-dimensional cones");
  for (int v : vertices) fan.cones.push_back({v});
  fan.cone_rows_.reserve(fan.cones.size());
  for (const Cone& c : fan.cones) fan.cone_rows_.push_back(dominance_rows(set, c.solution));

  // adjacent pairs, merged by co-linearity of their difference vectors
  std::map<IntVec, std::vector<DividerPair>> by_normal;
  const int nc = fan.cone_count();
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      if (!cones_share_ray(set, fan.cones[a].solution, fan.cones[b].solution, oracle)) continue;
      ++fan.raw_divider_count;
      IntVec diff = sub(set.points[fan.cones[a].solution], set.points[fan.cones[b].solution]);
      IntVec normal = canonical_normal(diff);
      int i = 0;
      while (diff[i] == 0) ++i;
      // orient the pair so the Above cone's solution minus the Below cone's
      // solution is a positive multiple of the canonical normal
      const DividerPair pair = diff[i] > 0 ? DividerPair{a, b} : DividerPair{b, a};
      by_normal[normal].push_back(pair);
    }
  }
  for (auto& [normal, pairs] : by_normal) fan.dividers.push_back({normal, std::move(pairs)});

  fan.position.assign(fan.dividers.size(), std::vector<Position>(nc));
  for (size_t h = 0; h < fan.dividers.size(); ++h) {
    const Divider& div = fan.dividers[h];
    for (int c = 0; c < nc; ++c) {
      // a co-linear dominance row of the cone pins its side without a solve
      Position pos;
      bool known = false;
      const IntVec& xc = set.points[fan.cones[c].solution];
      for (int j = 0; j < set.size() && !known; ++j) {
        if (j == fan.cones[c].solution) continue;
        IntVec diff = sub(xc, set.points[j]);
        int i = 0;
        while (i < set.n && diff[i] == 0) ++i;
        if (i == set.n) continue;
        // check diff == lambda * normal exactly
        const Int& lead = diff[i];
        const Int& nlead = div.normal[i];
        if (nlead == 0) continue;
        bool colinear = true;
        for (int k = 0; k < set.n && colinear; ++k)
          colinear = diff[k] * nlead == div.normal[k] * lead;
        if (!colinear) continue;
        pos = sign_of(lead) == sign_of(nlead) ? Position::Above : Position::Below;
        known = true;
      }
      if (!known) pos = cone_position(fan.cone_rows(c), div.normal, set.n, oracle);
      fan.position[h][c] = pos;
    }
  }
  return fan;
}

}  // namespace ldt
