#include "ldt/instances.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace ldt {

int edge_index(int i, int j, int d) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > d || i == j) throw std::invalid_argument("edge_index: bad endpoints");
  // edges (1,2),(1,3),...,(1,d),(2,3),... ; zero-based result
  return (i - 1) * d - i * (i - 1) / 2 + (j - i) - 1;
}

Instance gen_knp(int d) {
  if (d < 1) throw std::invalid_argument("gen_knp: d must be >= 1");
  if (d > 30) throw std::invalid_argument("gen_knp: d too large to enumerate");
  Instance inst;
  inst.set.n = d;
  inst.domain = CostDomain::positive_orthant(d);
  inst.descriptor = "knp d=" + std::to_string(d);
  // lexicographic on (x_1,...,x_d): x_1 is the most significant bit
  for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
    long long weight = 0;
    IntVec x(d);
    for (int i = 0; i < d; ++i) {
      const int bit = static_cast<int>(mask >> (d - 1 - i) & 1);
      x[i] = bit;
      weight += bit * (i + 1);
    }
    if (weight <= d) inst.set.points.push_back(std::move(x));
  }
  return inst;
}

Instance gen_cut(int d) {
  if (d < 2) throw std::invalid_argument("gen_cut: d must be >= 2");
  if (d > 24) throw std::invalid_argument("gen_cut: d too large to enumerate");
  const int n = d * (d - 1) / 2;
  Instance inst;
  inst.set.n = n;
  inst.domain = CostDomain::positive_orthant(n);
  inst.descriptor = "cut d=" + std::to_string(d);
  // one bipartition per subset of {2..d}; vertex 1 stays outside the subset,
  // which picks a unique representative of each complementary pair
  for (uint32_t mask = 0; mask < (uint32_t{1} << (d - 1)); ++mask) {
    IntVec x(n);
    int e = 0;
    for (int i = 1; i <= d; ++i) {
      const bool si = i >= 2 && (mask >> (i - 2) & 1);
      for (int j = i + 1; j <= d; ++j, ++e) {
        const bool sj = mask >> (j - 2) & 1;
        x[e] = si != sj ? 1 : 0;
      }
    }
    inst.set.points.push_back(std::move(x));
  }
  return inst;
}

Instance gen_tsp(int d) {
  if (d < 3) throw std::invalid_argument("gen_tsp: d must be >= 3");
  if (d > 10) throw std::invalid_argument("gen_tsp: d too large to enumerate");
  const int n = d * (d - 1) / 2;
  Instance inst;
  inst.set.n = n;
  inst.domain = CostDomain::negative_orthant(n);
  inst.descriptor = "tsp d=" + std::to_string(d);
  // cycles (1, p_2, ..., p_d) with p_2 < p_d kill the reflection duplicate
  std::vector<int> perm(d - 1);
  std::iota(perm.begin(), perm.end(), 2);
  do {
    if (perm.front() > perm.back()) continue;
    IntVec x(n);
    x[edge_index(1, perm.front(), d)] = 1;
    for (size_t k = 0; k + 1 < perm.size(); ++k) x[edge_index(perm[k], perm[k + 1], d)] = 1;
    x[edge_index(perm.back(), 1, d)] = 1;
    inst.set.points.push_back(std::move(x));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return inst;
}

Instance load_custom(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open instance file: " + path);
  ParsedSet parsed = parse_set_text(is);
  Instance inst;
  inst.set = std::move(parsed.set);
  inst.domain = std::move(parsed.domain);
  inst.descriptor = "custom " + path;
  return inst;
}

Instance make_instance(const std::string& cls, int d) {
  if (cls == "knp") return gen_knp(d);
  if (cls == "cut") return gen_cut(d);
  if (cls == "tsp") return gen_tsp(d);
  throw std::invalid_argument("unknown instance class: " + cls);
}

}  // namespace ldt
