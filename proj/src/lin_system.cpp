#include "ldt/lin_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldt {

void LinSystem::add(IntVec a, Rel rel) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("LinSystem::add: dimension mismatch");
  rows.push_back({std::move(a), rel});
}

LinSystem strictify(int n, const std::vector<IntVec>& strict_rows,
                    const std::vector<IntVec>& closed_rows,
                    const std::vector<IntVec>& eq_rows) {
  LinSystem sys(n);
  for (const IntVec& a : strict_rows) sys.add(a, Rel::GeOne);
  for (const IntVec& a : closed_rows) sys.add(a, Rel::GeZero);
  for (const IntVec& a : eq_rows) sys.add(a, Rel::EqZero);
  return sys;
}

static bool row_less(const LinRow& x, const LinRow& y) {
  if (x.rel != y.rel) return x.rel < y.rel;
  return x.a < y.a;
}

LinSystem canonicalized(const LinSystem& sys) {
  LinSystem out(sys.n);
  out.rows.reserve(sys.rows.size());
  for (const LinRow& r : sys.rows) {
    if (is_zero(r.a)) {
      // 0 >= 0 and 0 = 0 are vacuous; 0 >= 1 keeps the row to force infeasibility
      if (r.rel != Rel::GeOne) continue;
      out.rows.push_back(r);
      continue;
    }
    LinRow c{canonical_normal(r.a), r.rel};
    if (r.rel != Rel::EqZero) {
      // canonical_normal may have flipped the sign; undo for inequalities
      int i = 0;
      while (r.a[i] == 0) ++i;
      if (r.a[i] < 0)
        for (Int& x : c.a) x = -x;
    }
    out.rows.push_back(std::move(c));
  }
  std::sort(out.rows.begin(), out.rows.end(), row_less);
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end(),
                             [](const LinRow& x, const LinRow& y) {
                               return x.rel == y.rel && x.a == y.a;
                             }),
                 out.rows.end());
  return out;
}

static void hash_mix(uint64_t& h, uint64_t v, uint64_t prime) {
  h ^= v;
  h *= prime;
}

std::pair<uint64_t, uint64_t> system_key(const LinSystem& canonical) {
  static const Int kMax = Int(1) << 62;
  uint64_t h1 = 0xcbf29ce484222325ULL, h2 = 0x9e3779b97f4a7c15ULL;
  hash_mix(h1, static_cast<uint64_t>(canonical.n), 0x100000001b3ULL);
  hash_mix(h2, static_cast<uint64_t>(canonical.n), 0xff51afd7ed558ccdULL);
  for (const LinRow& r : canonical.rows) {
    hash_mix(h1, static_cast<uint64_t>(r.rel) + 0xa5, 0x100000001b3ULL);
    hash_mix(h2, static_cast<uint64_t>(r.rel) + 0x3c, 0xff51afd7ed558ccdULL);
    for (const Int& x : r.a) {
      if (x > -kMax && x < kMax) {
        const auto v = static_cast<uint64_t>(x.convert_to<long long>());
        hash_mix(h1, v, 0x100000001b3ULL);
        hash_mix(h2, v, 0xff51afd7ed558ccdULL);
      } else {
        for (char c : x.str()) {
          hash_mix(h1, static_cast<unsigned char>(c), 0x100000001b3ULL);
          hash_mix(h2, static_cast<unsigned char>(c), 0xff51afd7ed558ccdULL);
        }
      }
      hash_mix(h1, 0x2c, 0x100000001b3ULL);
      hash_mix(h2, 0x7f, 0xff51afd7ed558ccdULL);
    }
  }
  return {h1, h2};
}

bool row_satisfied(const LinRow& row, const RatVec& c) {
  const Rat v = dot(row.a, c);
  switch (row.rel) {
    case Rel::GeZero: return v >= 0;
    case Rel::EqZero: return v == 0;
    case Rel::GeOne: return v >= 1;
  }
  return false;
}

}  // namespace ldt
