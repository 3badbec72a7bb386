#include "ldt/policy.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ldt/report.hpp"
#include "ldt/sampling.hpp"
#include "ldt/vec.hpp"

namespace ldt {

EvalResult evaluate(const LdtPolicy& policy, const std::vector<double>& c) {
  if (static_cast<int>(c.size()) != policy.dim)
    throw std::invalid_argument("evaluate: dimension mismatch");
  int32_t cur = policy.root;
  int depth = 0;
  while (!policy.nodes[cur].leaf) {
    const LdtPolicy::Node& nd = policy.nodes[cur];
    cur = dot_d(nd.vec, c) >= 0.0 ? nd.hi : nd.lo;
    ++depth;
  }
  return {&policy.nodes[cur].vec, depth};
}

EvalResult evaluate_exact(const LdtPolicy& policy, const RatVec& c) {
  if (static_cast<int>(c.size()) != policy.dim)
    throw std::invalid_argument("evaluate_exact: dimension mismatch");
  int32_t cur = policy.root;
  int depth = 0;
  while (!policy.nodes[cur].leaf) {
    const LdtPolicy::Node& nd = policy.nodes[cur];
    cur = dot(nd.vec, c) >= 0 ? nd.hi : nd.lo;
    ++depth;
  }
  return {&policy.nodes[cur].vec, depth};
}

EvalStats eval_stats(const LdtPolicy& policy, BallSampler& sampler, int num_queries,
                     bool benchmark) {
  if (num_queries < 1) throw std::invalid_argument("eval_stats: need at least one query");
  EvalStats st;
  st.queries = num_queries;
  long long total_depth = 0;
  std::vector<std::vector<double>> costs;
  if (benchmark) {
    costs.reserve(num_queries);
    for (int i = 0; i < num_queries; ++i) costs.push_back(sampler.sample(i));
  }
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < num_queries; ++i) {
    const std::vector<double> c = benchmark ? costs[i] : sampler.sample(i);
    const EvalResult r = evaluate(policy, c);
    if (i == 0) {
      st.depth_max = st.depth_min = r.leaf_depth;
    } else {
      st.depth_max = std::max(st.depth_max, r.leaf_depth);
      st.depth_min = std::min(st.depth_min, r.leaf_depth);
    }
    total_depth += r.leaf_depth;
  }
  const auto t1 = std::chrono::steady_clock::now();
  st.depth_avg = static_cast<double>(total_depth) / num_queries;
  if (benchmark)
    st.nanos_per_query =
        std::chrono::duration<double, std::nano>(t1 - t0).count() / num_queries;
  return st;
}

int tree_depth(const LdtPolicy& policy) {
  std::function<int(int32_t)> rec = [&](int32_t id) -> int {
    const LdtPolicy::Node& nd = policy.nodes[id];
    if (nd.leaf) return 0;
    return 1 + std::max(rec(nd.lo), rec(nd.hi));
  };
  return rec(policy.root);
}

int leaf_count(const LdtPolicy& policy) {
  int leaves = 0;
  for (const auto& nd : policy.nodes)
    if (nd.leaf) ++leaves;
  return leaves;
}

void validate_policy(const LdtPolicy& policy) {
  const auto count = static_cast<int32_t>(policy.nodes.size());
  if (count == 0) throw std::runtime_error("policy: empty node array");
  if (policy.root < 0 || policy.root >= count) throw std::runtime_error("policy: bad root id");
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<uint8_t> state(count, 0);
  int max_depth = 0;
  std::function<void(int32_t, int)> dfs = [&](int32_t id, int depth) {
    if (id < 0 || id >= count) throw std::runtime_error("policy: dangling child id");
    if (state[id] == 1) throw std::runtime_error("policy: cycle detected");
    if (state[id] == 2) throw std::runtime_error("policy: node shared by two parents");
    state[id] = 1;
    const LdtPolicy::Node& nd = policy.nodes[id];
    if (nd.leaf) {
      if (static_cast<int>(nd.vec.size()) != policy.dim)
        throw std::runtime_error("policy: leaf dimension mismatch");
      bool member = false;
      for (const IntVec& p : policy.set.points)
        if (p == nd.vec) {
          member = true;
          break;
        }
      if (!member) throw std::runtime_error("policy: leaf solution not in the feasible set");
      max_depth = std::max(max_depth, depth);
    } else {
      if (static_cast<int>(nd.vec.size()) != policy.dim)
        throw std::runtime_error("policy: branch dimension mismatch");
      if (is_zero(nd.vec)) throw std::runtime_error("policy: zero branch normal");
      dfs(nd.lo, depth + 1);
      dfs(nd.hi, depth + 1);
    }
    state[id] = 2;
  };
  dfs(policy.root, 0);
  for (int32_t i = 0; i < count; ++i)
    if (state[i] != 2) throw std::runtime_error("policy: unreachable node");
  if (max_depth != policy.meta.depth)
    throw std::runtime_error("policy: recorded depth disagrees with the tree");
}

namespace {

std::string points_block(const FeasibleSet& set) {
  std::ostringstream os;
  for (const IntVec& p : set.points) {
    for (int j = 0; j < set.n; ++j) {
      if (j) os << ' ';
      os << p[j];
    }
    os << '\n';
  }
  return os.str();
}

std::string nodes_block(const LdtPolicy& policy) {
  std::ostringstream os;
  os << "root " << policy.root << '\n';
  for (const auto& nd : policy.nodes) {
    if (nd.leaf) {
      os << "leaf";
    } else {
      os << "branch " << nd.lo << ' ' << nd.hi;
    }
    for (const Int& x : nd.vec) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string policy_text(const LdtPolicy& policy) {
  std::ostringstream os;
  os << "ldt-policy v1\n";
  os << "instance " << (policy.meta.instance.empty() ? "unknown" : policy.meta.instance) << '\n';
  os << "mode " << (policy.meta.mode.empty() ? "unknown" : policy.meta.mode) << '\n';
  os << "dim " << policy.dim << '\n';
  os << "depth " << policy.meta.depth << '\n';
  os << "points " << policy.set.size() << '\n';
  const std::string pts = points_block(policy.set);
  os << pts;
  os << "xhash " << hex16(fnv1a64(pts)) << '\n';
  os << "nodes " << policy.nodes.size() << '\n';
  const std::string nodes = nodes_block(policy);
  os << nodes;
  os << "treehash " << hex16(fnv1a64(nodes)) << '\n';
  os << "end\n";
  return os.str();
}

void save_policy(const LdtPolicy& policy, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write policy file: " + path);
  os << policy_text(policy);
}

namespace {

std::string expect_line(std::istream& is, int& lineno) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("policy file truncated at line " + std::to_string(lineno + 1));
  ++lineno;
  return line;
}

}  // namespace

LdtPolicy parse_policy_text(const std::string& text) {
  std::istringstream is(text);
  int lineno = 0;
  LdtPolicy p;
  if (expect_line(is, lineno) != "ldt-policy v1")
    throw std::runtime_error("policy file: bad magic line");
  auto keyed = [&](const std::string& key) {
    std::string line = expect_line(is, lineno);
    if (line.rfind(key + " ", 0) != 0)
      throw std::runtime_error("policy file: expected '" + key + "' at line " +
                               std::to_string(lineno));
    return line.substr(key.size() + 1);
  };
  p.meta.instance = keyed("instance");
  p.meta.mode = keyed("mode");
  p.dim = std::stoi(keyed("dim"));
  if (p.dim < 1) throw std::runtime_error("policy file: bad dimension");
  p.meta.depth = std::stoi(keyed("depth"));
  const int m = std::stoi(keyed("points"));
  if (m < 1) throw std::runtime_error("policy file: bad point count");
  p.set.n = p.dim;
  std::string pts_block;
  for (int i = 0; i < m; ++i) {
    const std::string line = expect_line(is, lineno);
    pts_block += line + '\n';
    std::istringstream rs(line);
    IntVec v;
    std::string tok;
    while (rs >> tok) v.emplace_back(tok);
    if (static_cast<int>(v.size()) != p.dim)
      throw std::runtime_error("policy file: point row dimension mismatch at line " +
                               std::to_string(lineno));
    p.set.points.push_back(std::move(v));
  }
  if (keyed("xhash") != hex16(fnv1a64(pts_block)))
    throw std::runtime_error("policy file: point block integrity hash mismatch");
  const int k = std::stoi(keyed("nodes"));
  if (k < 1) throw std::runtime_error("policy file: bad node count");
  std::string nodes_blk;
  {
    const std::string line = expect_line(is, lineno);
    nodes_blk += line + '\n';
    std::istringstream rs(line);
    std::string head;
    rs >> head;
    if (head != "root" || !(rs >> p.root))
      throw std::runtime_error("policy file: bad root line");
  }
  for (int i = 0; i < k; ++i) {
    const std::string line = expect_line(is, lineno);
    nodes_blk += line + '\n';
    std::istringstream rs(line);
    std::string head;
    rs >> head;
    LdtPolicy::Node nd;
    if (head == "leaf") {
      nd.leaf = true;
    } else if (head == "branch") {
      if (!(rs >> nd.lo >> nd.hi))
        throw std::runtime_error("policy file: bad branch children at line " +
                                 std::to_string(lineno));
    } else {
      throw std::runtime_error("policy file: bad node tag at line " + std::to_string(lineno));
    }
    std::string tok;
    while (rs >> tok) nd.vec.emplace_back(tok);
    if (static_cast<int>(nd.vec.size()) != p.dim)
      throw std::runtime_error("policy file: node vector dimension mismatch at line " +
                               std::to_string(lineno));
    p.nodes.push_back(std::move(nd));
  }
  if (keyed("treehash") != hex16(fnv1a64(nodes_blk)))
    throw std::runtime_error("policy file: node block integrity hash mismatch");
  if (expect_line(is, lineno) != "end") throw std::runtime_error("policy file: missing end");
  validate_policy(p);
  return p;
}

LdtPolicy load_policy(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open policy file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_policy_text(buf.str());
}

}  // namespace ldt
