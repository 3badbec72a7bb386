#include "ldt/synth.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ldt {

bool NodeKey::contains(int divider) const {
  for (int32_t s : signed_ids)
    if (std::abs(s) - 1 == divider) return true;
  return false;
}

NodeKey NodeKey::child(int divider, bool hi) const {
  NodeKey out;
  out.signed_ids.reserve(signed_ids.size() + 1);
  const int32_t v = hi ? divider + 1 : -(divider + 1);
  bool placed = false;
  for (int32_t s : signed_ids) {
    if (!placed && std::abs(s) - 1 > divider) {
      out.signed_ids.push_back(v);
      placed = true;
    }
    out.signed_ids.push_back(s);
  }
  if (!placed) out.signed_ids.push_back(v);
  return out;
}

size_t NodeKeyHash::operator()(const NodeKey& k) const {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (int32_t s : k.signed_ids) {
    h ^= static_cast<uint32_t>(s);
    h *= 0x100000001b3ULL;
  }
  return static_cast<size_t>(h);
}

int ceil_log2(size_t k) {
  if (k == 0) throw std::invalid_argument("ceil_log2: zero");
  return static_cast<int>(std::bit_width(k - 1));
}

double split_discrepancy(size_t parent, size_t lo, size_t hi) {
  const double t = static_cast<double>(parent) / 2.0;
  const double a = static_cast<double>(lo) - t, b = static_cast<double>(hi) - t;
  return a * a + b * b;
}

std::vector<IntVec> region_strict_rows(const NormalFan& fan, const CostDomain& domain,
                                       const NodeKey& key) {
  std::vector<IntVec> rows;
  const int n = fan.set.n;
  for (int i = 0; i < domain.dim(); ++i) {
    if (domain.signs[i] == Sign::Free) continue;
    IntVec e(n, Int(0));
    e[i] = domain.signs[i] == Sign::Positive ? 1 : -1;
    rows.push_back(std::move(e));
  }
  for (int32_t s : key.signed_ids) {
    const IntVec& normal = fan.dividers[std::abs(s) - 1].normal;
    rows.push_back(s > 0 ? normal : negated(normal));
  }
  return rows;
}

namespace {

LinSystem member_system(const NormalFan& fan, const CostDomain& domain, const NodeKey& key,
                        int cone) {
  LinSystem sys(fan.set.n);
  for (const IntVec& r : fan.cone_rows(cone)) sys.add(r, Rel::GeZero);
  for (IntVec& r : region_strict_rows(fan, domain, key)) sys.add(std::move(r), Rel::GeOne);
  return sys;
}

}  // namespace

std::vector<uint16_t> child_side_cones(const NormalFan& fan, const CostDomain& domain,
                                       const NodeKey& child_key,
                                       const std::vector<uint16_t>& parent_cones,
                                       int divider, bool hi, FeasibilityOracle& oracle,
                                       bool infer) {
  std::vector<uint16_t> out;
  const Position keep = hi ? Position::Above : Position::Below;
  const Position drop = hi ? Position::Below : Position::Above;
  for (uint16_t f : parent_cones) {
    if (infer) {
      const Position p = fan.position[divider][f];
      if (p == keep) {
        out.push_back(f);
        continue;
      }
      if (p == drop) continue;
    }
    if (oracle.is_feasible(member_system(fan, domain, child_key, f))) out.push_back(f);
  }
  return out;
}

std::pair<std::vector<uint16_t>, std::vector<uint16_t>> child_candidates(
    const NormalFan& fan, const CostDomain& domain, const NodeKey& key,
    const std::vector<uint16_t>& cones, int divider, FeasibilityOracle& oracle, bool infer) {
  return {child_side_cones(fan, domain, key.child(divider, false), cones, divider, false,
                           oracle, infer),
          child_side_cones(fan, domain, key.child(divider, true), cones, divider, true,
                           oracle, infer)};
}

bool divider_crosses_region(const NormalFan& fan, const CostDomain& domain,
                            const NodeKey& key, int divider, FeasibilityOracle& oracle) {
  LinSystem sys(fan.set.n);
  sys.add(fan.dividers[divider].normal, Rel::EqZero);
  for (IntVec& r : region_strict_rows(fan, domain, key)) sys.add(std::move(r), Rel::GeOne);
  return oracle.is_feasible(sys);
}

std::vector<uint16_t> root_candidate_cones(const NormalFan& fan, const CostDomain& domain,
                                           FeasibilityOracle& oracle) {
  std::vector<uint16_t> out;
  const NodeKey root{};
  for (uint16_t f = 0; f < fan.cone_count(); ++f) {
    // over the whole space every full-dimensional cone qualifies
    if (domain.all_free() || oracle.is_feasible(member_system(fan, domain, root, f)))
      out.push_back(f);
  }
  return out;
}

namespace {

constexpr int32_t kMemoUnset = INT32_MIN;

struct NodeData {
  std::vector<uint16_t> cones;     // candidate cones, set at creation
  std::vector<uint16_t> dividers;  // candidate dividers in exploration order
  int32_t memo = kMemoUnset;
  int32_t memo_best = -1;
  int32_t last_kappa = -1;
  int32_t last_val = kInfDepth;
  int32_t last_best = -1;
  bool h_init = false;
  bool counted = false;
};

class Synthesizer {
 public:
  Synthesizer(const NormalFan& fan, const CostDomain& domain, FeasibilityOracle& oracle,
              SynthConfig cfg)
      : fan_(fan), domain_(domain), oracle_(oracle), cfg_(std::move(cfg)) {
    if (domain_.dim() != fan_.set.n)
      throw std::invalid_argument("synthesize: domain dimension mismatch");
    if (fan_.divider_count() > 60000)
      throw std::invalid_argument("synthesize: too many dividers for node keys");
  }

  std::pair<LdtPolicy, SynthReport> run(bool greedy);

 private:
  struct BudgetExceeded {};

  int evaluate(const NodeKey& key, NodeData& nd, int kappa, int ub_root,
               const std::vector<uint16_t>& parent_dividers);
  void init_dividers(const NodeKey& key, NodeData& nd,
                     const std::vector<uint16_t>& parent_dividers);
  LdtPolicy extract(int claimed_depth, const std::string& mode);
  int32_t build_policy_node(LdtPolicy& p, const NodeKey& key, const NodeData& nd);

  void check_budget() {
    if (cfg_.budget_seconds <= 0) return;
    if (++budget_tick_ % 512 != 0) return;
    const auto now = std::chrono::steady_clock::now();
    if (std::chrono::duration<double>(now - t_start_).count() > cfg_.budget_seconds)
      throw BudgetExceeded{};
  }

  const NormalFan& fan_;
  const CostDomain& domain_;
  FeasibilityOracle& oracle_;
  SynthConfig cfg_;
  std::unordered_map<NodeKey, NodeData, NodeKeyHash> table_;
  std::chrono::steady_clock::time_point t_start_;
  uint64_t nodes_processed_ = 0;
  uint64_t budget_tick_ = 0;
};

void Synthesizer::init_dividers(const NodeKey& key, NodeData& nd,
                                const std::vector<uint16_t>& parent_dividers) {
  struct Scored {
    int64_t score4;  // 4x discrepancy, exact in integers
    uint16_t id;
  };
  std::vector<Scored> kept;
  const auto f_size = static_cast<int64_t>(nd.cones.size());
  for (uint16_t h : parent_dividers) {
    if (key.contains(h)) continue;  // decided dividers cannot cross the region
    const NodeKey lo_key = key.child(h, false);
    const NodeKey hi_key = key.child(h, true);
    auto it_lo = table_.find(lo_key);
    auto it_hi = table_.find(hi_key);
    std::vector<uint16_t> lo_tmp, hi_tmp;
    const std::vector<uint16_t>* lo;
    const std::vector<uint16_t>* hi;
    if (it_lo != table_.end()) {
      lo = &it_lo->second.cones;
    } else {
      lo_tmp = child_side_cones(fan_, domain_, lo_key, nd.cones, h, false, oracle_, cfg_.infer);
      lo = &lo_tmp;
    }
    if (it_hi != table_.end()) {
      hi = &it_hi->second.cones;
    } else {
      hi_tmp = child_side_cones(fan_, domain_, hi_key, nd.cones, h, true, oracle_, cfg_.infer);
      hi = &hi_tmp;
    }
    const auto lo_size = static_cast<int64_t>(lo->size());
    const auto hi_size = static_cast<int64_t>(hi->size());
    bool crosses;
    if (cfg_.infer) {
      crosses = lo_size > 0 && hi_size > 0;
    } else {
      crosses = divider_crosses_region(fan_, domain_, key, h, oracle_);
    }
    if (!crosses) continue;
    if (it_lo == table_.end()) table_.emplace(lo_key, NodeData{.cones = std::move(lo_tmp)});
    if (it_hi == table_.end()) table_.emplace(hi_key, NodeData{.cones = std::move(hi_tmp)});
    const int64_t a = 2 * lo_size - f_size;
    const int64_t b = 2 * hi_size - f_size;
    kept.push_back({a * a + b * b, h});
  }
  if (cfg_.sort_dividers) {
    std::sort(kept.begin(), kept.end(), [](const Scored& x, const Scored& y) {
      return x.score4 != y.score4 ? x.score4 < y.score4 : x.id < y.id;
    });
  } else {
    std::sort(kept.begin(), kept.end(),
              [](const Scored& x, const Scored& y) { return x.id < y.id; });
  }
  nd.dividers.reserve(kept.size());
  for (const Scored& s : kept) nd.dividers.push_back(s.id);
  nd.h_init = true;
}

int Synthesizer::evaluate(const NodeKey& key, NodeData& nd, int kappa, int ub_root,
                          const std::vector<uint16_t>& parent_dividers) {
  check_budget();
  if (nd.memo != kMemoUnset) return nd.memo;
  if (!nd.counted) {
    nd.counted = true;
    ++nodes_processed_;
  }
  if (nd.cones.size() == 1) {
    nd.memo = 0;
    return 0;
  }
  const int depth = key.depth();
  if (depth + ceil_log2(nd.cones.size()) >= ub_root) {
    nd.memo = kInfDepth;
    return kInfDepth;
  }
  if (!nd.h_init) init_dividers(key, nd, parent_dividers);
  if (nd.dividers.empty())
    throw std::logic_error("synthesize: interior node with no crossing divider");
  if (nd.last_kappa == kappa) return nd.last_val;
  int best = kInfDepth;
  int32_t best_div = -1;
  const int limit = static_cast<int>(std::min<size_t>(kappa, nd.dividers.size()));
  for (int i = 0; i < limit; ++i) {
    const uint16_t h = nd.dividers[i];
    const NodeKey lo_key = key.child(h, false);
    const NodeKey hi_key = key.child(h, true);
    const int lo_v = evaluate(lo_key, table_.at(lo_key), kappa, ub_root, nd.dividers);
    const int hi_v = evaluate(hi_key, table_.at(hi_key), kappa, ub_root, nd.dividers);
    int v = std::max(lo_v, hi_v);
    if (v < kInfDepth) ++v;
    if (v < best) {
      best = v;
      best_div = h;
    }
  }
  if (kappa >= static_cast<int>(nd.dividers.size())) {
    nd.memo = best;
    nd.memo_best = best_div;
  }
  nd.last_kappa = kappa;
  nd.last_val = best;
  nd.last_best = best_div;
  return best;
}

int32_t Synthesizer::build_policy_node(LdtPolicy& p, const NodeKey& key, const NodeData& nd) {
  const auto id = static_cast<int32_t>(p.nodes.size());
  p.nodes.emplace_back();
  if (nd.cones.size() == 1) {
    p.nodes[id].leaf = true;
    p.nodes[id].vec = fan_.set.points[fan_.cones[nd.cones[0]].solution];
    return id;
  }
  const int32_t h = nd.memo != kMemoUnset && nd.memo < kInfDepth ? nd.memo_best : nd.last_best;
  if (h < 0) throw std::logic_error("synthesize: no recorded divider during extraction");
  p.nodes[id].vec = fan_.dividers[h].normal;
  const NodeKey lo_key = key.child(h, false);
  const NodeKey hi_key = key.child(h, true);
  const int32_t lo = build_policy_node(p, lo_key, table_.at(lo_key));
  const int32_t hi = build_policy_node(p, hi_key, table_.at(hi_key));
  p.nodes[id].lo = lo;
  p.nodes[id].hi = hi;
  return id;
}

LdtPolicy Synthesizer::extract(int claimed_depth, const std::string& mode) {
  LdtPolicy p;
  p.dim = fan_.set.n;
  p.set = fan_.set;
  p.meta.instance = cfg_.instance;
  p.meta.mode = mode;
  build_policy_node(p, NodeKey{}, table_.at(NodeKey{}));
  p.root = 0;
  p.meta.depth = tree_depth(p);
  if (p.meta.depth != claimed_depth)
    throw std::logic_error("synthesize: extracted depth disagrees with the DP value");
  validate_policy(p);
  return p;
}

std::pair<LdtPolicy, SynthReport> Synthesizer::run(bool greedy) {
  t_start_ = std::chrono::steady_clock::now();
  const FeasibilityStats s0 = oracle_.stats();
  SynthReport rep;
  rep.dividers_total = fan_.divider_count();
  const std::string mode = greedy ? "greedy" : "iterative";

  std::vector<uint16_t> root_cones = root_candidate_cones(fan_, domain_, oracle_);
  if (root_cones.empty())
    throw std::runtime_error("synthesize: no cone intersects the open domain");
  rep.root_cones = static_cast<int>(root_cones.size());
  table_.emplace(NodeKey{}, NodeData{.cones = std::move(root_cones)});
  NodeData& root = table_.at(NodeKey{});

  std::vector<uint16_t> all_dividers(fan_.divider_count());
  std::iota(all_dividers.begin(), all_dividers.end(), 0);

  auto finish = [&](int depth) {
    const auto now = std::chrono::steady_clock::now();
    rep.seconds = std::chrono::duration<double>(now - t_start_).count();
    rep.depth = depth;
    rep.nodes_processed = nodes_processed_;
    const FeasibilityStats s1 = oracle_.stats();
    rep.lp_solved = s1.solves - s0.solves;
    rep.lp_cache_hits = s1.cache_hits - s0.cache_hits;
    rep.root_dividers = root.h_init ? static_cast<int>(root.dividers.size()) : 0;
  };

  if (root.cones.size() == 1) {
    // the whole domain maps to one solution
    rep.completed = true;
    LdtPolicy p;
    p.dim = fan_.set.n;
    p.set = fan_.set;
    p.meta.instance = cfg_.instance;
    p.meta.mode = mode;
    p.meta.depth = 0;
    p.nodes.push_back({true, fan_.set.points[fan_.cones[root.cones[0]].solution], -1, -1});
    p.root = 0;
    finish(0);
    return {std::move(p), std::move(rep)};
  }

  std::vector<int> schedule;
  if (greedy) {
    schedule = {1};
  } else if (cfg_.schedule.empty()) {
    schedule.resize(fan_.divider_count());
    std::iota(schedule.begin(), schedule.end(), 1);
  } else {
    schedule = cfg_.schedule;
    if (schedule.empty()) throw std::invalid_argument("synthesize: empty schedule");
    for (size_t i = 0; i < schedule.size(); ++i) {
      if (schedule[i] < 1 || (i && schedule[i] <= schedule[i - 1]))
        throw std::invalid_argument("synthesize: schedule must be strictly increasing");
    }
  }

  const int root_lb = ceil_log2(root.cones.size());
  int ub = kInfDepth;
  LdtPolicy best_policy;
  bool have_policy = false;
  for (int kappa : schedule) {
    const auto it0 = std::chrono::steady_clock::now();
    int ret;
    try {
      ret = evaluate(NodeKey{}, root, kappa, ub, all_dividers);
    } catch (const BudgetExceeded&) {
      if (!have_policy)
        throw std::runtime_error("synthesize: budget exhausted before any iteration finished");
      rep.completed = false;
      finish(ub);
      return {std::move(best_policy), std::move(rep)};
    }
    const auto it1 = std::chrono::steady_clock::now();
    if (ret < ub) {
      ub = ret;
      best_policy = extract(ub, mode);
      have_policy = true;
    }
    rep.schedule_run.push_back(kappa);
    rep.iterations.push_back({kappa, ub, std::chrono::duration<double>(it1 - it0).count()});
    if (cfg_.early_stop && ub == root_lb) {
      rep.completed = true;  // incumbent meets the information lower bound
      break;
    }
    if (root.h_init && kappa >= static_cast<int>(root.dividers.size())) {
      rep.completed = true;  // every divider explored at every surviving node
      break;
    }
  }
  if (!have_policy) throw std::logic_error("synthesize: no policy produced");
  finish(ub);
  return {std::move(best_policy), std::move(rep)};
}

}  // namespace

std::pair<LdtPolicy, SynthReport> synthesize(const NormalFan& fan, const CostDomain& domain,
                                             FeasibilityOracle& oracle,
                                             const SynthConfig& config) {
  Synthesizer s(fan, domain, oracle, config);
  return s.run(false);
}

std::pair<LdtPolicy, SynthReport> synthesize_greedy(const NormalFan& fan,
                                                    const CostDomain& domain,
                                                    FeasibilityOracle& oracle,
                                                    SynthConfig config) {
  config.schedule.clear();
  Synthesizer s(fan, domain, oracle, std::move(config));
  return s.run(true);
}

}  // namespace ldt
