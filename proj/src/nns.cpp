#include "ldt/nns.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ldt {

SignedPointSet phi(const FeasibleSet& set) {
  SignedPointSet out;
  out.n = set.n;
  out.points.reserve(set.points.size());
  out.source.reserve(set.points.size());
  for (int i = 0; i < set.size(); ++i) {
    std::vector<int8_t> q(set.n);
    for (int j = 0; j < set.n; ++j) {
      const Int& x = set.points[i][j];
      if (x == 0)
        q[j] = -1;
      else if (x == 1)
        q[j] = 1;
      else
        throw std::invalid_argument("phi: non-binary entry in feasible set");
    }
    out.points.push_back(std::move(q));
    out.source.push_back(i);
  }
  return out;
}

namespace {

double dist2(const std::vector<int8_t>& p, const std::vector<double>& c) {
  double acc = 0.0;
  for (size_t j = 0; j < p.size(); ++j) {
    const double diff = c[j] - static_cast<double>(p[j]);
    acc += diff * diff;
  }
  return acc;
}

}  // namespace

int nns_linear_scan(const SignedPointSet& pts, const std::vector<double>& c) {
  if (static_cast<int>(c.size()) != pts.n)
    throw std::invalid_argument("nns_linear_scan: dimension mismatch");
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.points.size(); ++i) {
    const double d2 = dist2(pts.points[i], c);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = static_cast<int>(i);
    }
  }
  return pts.source[best];
}

int nns_linear_scan_exact(const SignedPointSet& pts, const RatVec& c) {
  if (static_cast<int>(c.size()) != pts.n)
    throw std::invalid_argument("nns_linear_scan_exact: dimension mismatch");
  int best = -1;
  Rat best_d2;
  for (size_t i = 0; i < pts.points.size(); ++i) {
    Rat d2;
    for (int j = 0; j < pts.n; ++j) {
      const Rat diff = c[j] - Rat(static_cast<int>(pts.points[i][j]));
      d2 += diff * diff;
    }
    if (best < 0 || d2 < best_d2) {
      best_d2 = d2;
      best = static_cast<int>(i);
    }
  }
  return pts.source[best];
}

KdIndex::KdIndex(SignedPointSet pts) : pts_(std::move(pts)) {
  if (pts_.points.empty()) throw std::invalid_argument("KdIndex: empty point set");
  order_.resize(pts_.points.size());
  for (size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int32_t>(i);
  std::vector<int32_t> scratch;
  root_ = build(0, static_cast<int32_t>(order_.size()), scratch);
}

int32_t KdIndex::build(int32_t begin, int32_t end, std::vector<int32_t>& scratch) {
  const auto id = static_cast<int32_t>(nodes_.size());
  nodes_.emplace_back();
  Node nd;
  nd.begin = begin;
  nd.end = end;
  nd.box_lo.assign(pts_.n, 1);
  nd.box_hi.assign(pts_.n, -1);
  for (int32_t k = begin; k < end; ++k) {
    const auto& p = pts_.points[order_[k]];
    for (int j = 0; j < pts_.n; ++j) {
      nd.box_lo[j] = std::min(nd.box_lo[j], p[j]);
      nd.box_hi[j] = std::max(nd.box_hi[j], p[j]);
    }
  }
  // split on the lowest spread coordinate index (all spreads are 0 or 2 on
  // sign vectors, so max spread with low-index tie-break is the first split)
  int split = -1;
  for (int j = 0; j < pts_.n; ++j) {
    if (nd.box_lo[j] < nd.box_hi[j]) {
      split = j;
      break;
    }
  }
  constexpr int32_t kLeafSize = 8;
  if (split < 0 || end - begin <= kLeafSize) {
    nodes_[id] = std::move(nd);
    return id;  // leaf: constant box or small range
  }
  nd.split_dim = split;
  scratch.clear();
  std::vector<int32_t> left;
  for (int32_t k = begin; k < end; ++k) {
    if (pts_.points[order_[k]][split] < 0)
      left.push_back(order_[k]);
    else
      scratch.push_back(order_[k]);
  }
  const auto mid = static_cast<int32_t>(begin + left.size());
  std::copy(left.begin(), left.end(), order_.begin() + begin);
  std::copy(scratch.begin(), scratch.end(), order_.begin() + mid);
  nodes_[id] = std::move(nd);
  std::vector<int32_t> sub_scratch;
  const int32_t l = build(begin, mid, sub_scratch);
  const int32_t r = build(mid, end, sub_scratch);
  nodes_[id].left = l;
  nodes_[id].right = r;
  return id;
}

void KdIndex::search(int32_t node, const std::vector<double>& c, double& best_d2,
                     int& best_idx) const {
  const Node& nd = nodes_[node];
  // equal-distance boxes are explored so index ties resolve globally
  double box_d2 = 0.0;
  for (int j = 0; j < pts_.n; ++j) {
    double diff = 0.0;
    if (c[j] < nd.box_lo[j])
      diff = nd.box_lo[j] - c[j];
    else if (c[j] > nd.box_hi[j])
      diff = c[j] - nd.box_hi[j];
    box_d2 += diff * diff;
  }
  if (box_d2 > best_d2) return;
  if (nd.split_dim < 0) {
    for (int32_t k = nd.begin; k < nd.end; ++k) {
      const int32_t i = order_[k];
      const double d2 = dist2(pts_.points[i], c);
      if (d2 < best_d2 || (d2 == best_d2 && i < best_idx)) {
        best_d2 = d2;
        best_idx = i;
      }
    }
    return;
  }
  const bool left_first = c[nd.split_dim] <= 0.0;
  search(left_first ? nd.left : nd.right, c, best_d2, best_idx);
  search(left_first ? nd.right : nd.left, c, best_d2, best_idx);
}

int KdIndex::query(const std::vector<double>& c) const {
  if (static_cast<int>(c.size()) != pts_.n)
    throw std::invalid_argument("KdIndex::query: dimension mismatch");
  double best_d2 = std::numeric_limits<double>::infinity();
  int best_idx = std::numeric_limits<int>::max();
  search(root_, c, best_d2, best_idx);
  return pts_.source[best_idx];
}

}  // namespace ldt
