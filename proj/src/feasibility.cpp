#include "ldt/feasibility.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ldt {

namespace {

// Fast-path scalar: rationals over int64 with __int128 intermediates. Any
// overflow aborts the solve, which is then rerun on big rationals.
struct Q64Overflow {};

using i128 = __int128;

inline long long checked64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN + 1) throw Q64Overflow{};
  return static_cast<long long>(v);
}

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Q64 {
  long long n = 0, d = 1;  // d > 0, gcd(|n|, d) = 1

  static Q64 make(i128 num, i128 den) {
    if (den == 0) throw std::logic_error("Q64: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return {0, 1};
    const i128 g = gcd128(num, den);
    return {checked64(num / g), checked64(den / g)};
  }

  friend Q64 operator+(const Q64& a, const Q64& b) {
    return make(i128(a.n) * b.d + i128(b.n) * a.d, i128(a.d) * b.d);
  }
  friend Q64 operator-(const Q64& a, const Q64& b) {
    return make(i128(a.n) * b.d - i128(b.n) * a.d, i128(a.d) * b.d);
  }
  friend Q64 operator*(const Q64& a, const Q64& b) {
    return make(i128(a.n) * b.n, i128(a.d) * b.d);
  }
  friend Q64 operator/(const Q64& a, const Q64& b) {
    if (b.n == 0) throw std::logic_error("Q64: division by zero");
    return make(i128(a.n) * b.d, i128(a.d) * b.n);
  }
  Q64 operator-() const { return {-n, d}; }
  friend bool operator==(const Q64& a, const Q64& b) { return a.n == b.n && a.d == b.d; }
  friend bool operator<(const Q64& a, const Q64& b) { return i128(a.n) * b.d < i128(b.n) * a.d; }
  bool negative() const { return n < 0; }
  bool positive() const { return n > 0; }
  bool zero() const { return n == 0; }
};

template <class S>
struct Ops;

template <>
struct Ops<Q64> {
  static Q64 from_int(const Int& x) {
    static const Int kMax = Int(1) << 62;
    if (x >= kMax || x <= -kMax) throw Q64Overflow{};
    return {x.convert_to<long long>(), 1};
  }
  static Rat to_rat(const Q64& q) { return Rat(Int(q.n), Int(q.d)); }
  static bool neg(const Q64& q) { return q.negative(); }
  static bool pos(const Q64& q) { return q.positive(); }
  static bool zero(const Q64& q) { return q.zero(); }
};

template <>
struct Ops<Rat> {
  static Rat from_int(const Int& x) { return Rat(x); }
  static Rat to_rat(const Rat& q) { return q; }
  static bool neg(const Rat& q) { return q < 0; }
  static bool pos(const Rat& q) { return q > 0; }
  static bool zero(const Rat& q) { return q == 0; }
};

// Phase-1 simplex with Bland's rule on mixed {>=0, =0, >=1} rows over free
// variables c = u - v. Rows with relation >=0 are negated so their slack can
// start basic; artificials are added for the remaining rows and their columns
// are retired once they leave the basis.
template <class S>
bool phase1(const LinSystem& sys, RatVec* witness_out) {
  const int n = sys.n;
  const int m = static_cast<int>(sys.rows.size());
  if (m == 0) {
    if (witness_out) witness_out->assign(n, Rat(0));
    return true;
  }
  int n_ineq = 0, n_art = 0;
  for (const LinRow& r : sys.rows) {
    if (r.rel != Rel::EqZero) ++n_ineq;
    if (r.rel != Rel::GeZero) ++n_art;
  }
  const int ncols = 2 * n + n_ineq + n_art;
  const int stride = ncols + 1;  // last column is the rhs
  const S zero{}, one = Ops<S>::from_int(Int(1));

  std::vector<S> T(static_cast<size_t>(m) * stride, zero);
  std::vector<S> R(stride, zero);
  std::vector<int> basis(m, -1);
  std::vector<char> alive(ncols, 1), is_art(ncols, 0);

  int slack_next = 2 * n, art_next = 2 * n + n_ineq;
  for (int i = 0; i < m; ++i) {
    const LinRow& row = sys.rows[i];
    S* t = &T[static_cast<size_t>(i) * stride];
    const bool flip = row.rel == Rel::GeZero;
    for (int j = 0; j < n; ++j) {
      if (row.a[j] == 0) continue;
      S val = Ops<S>::from_int(row.a[j]);
      if (flip) val = -val;
      t[j] = val;
      t[n + j] = -val;
    }
    if (row.rel != Rel::EqZero) {
      const int sc = slack_next++;
      t[sc] = flip ? one : -one;
      if (flip) basis[i] = sc;
    }
    if (row.rel != Rel::GeZero) {
      const int ac = art_next++;
      t[ac] = one;
      is_art[ac] = 1;
      basis[i] = ac;
      if (row.rel == Rel::GeOne) t[ncols] = one;
    }
  }

  // reduced costs of "minimize sum of artificials" under the initial basis
  for (int i = 0; i < m; ++i) {
    if (!is_art[basis[i]]) continue;
    const S* t = &T[static_cast<size_t>(i) * stride];
    for (int j = 0; j <= ncols; ++j) R[j] = R[j] - t[j];
  }
  for (int j = 0; j < ncols; ++j)
    if (is_art[j]) R[j] = R[j] + one;

  const long long max_iters = 2000 + 24LL * m * (m + n);
  for (long long iter = 0;; ++iter) {
    if (iter > max_iters) throw std::logic_error("phase1: iteration cap exceeded");
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (alive[j] && Ops<S>::neg(R[j])) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int lr = -1;
    S best;
    for (int i = 0; i < m; ++i) {
      const S& tie = T[static_cast<size_t>(i) * stride + enter];
      if (!Ops<S>::pos(tie)) continue;
      S ratio = T[static_cast<size_t>(i) * stride + ncols] / tie;
      if (lr < 0 || ratio < best || (ratio == best && basis[i] < basis[lr])) {
        lr = i;
        best = ratio;
      }
    }
    if (lr < 0) throw std::logic_error("phase1: unbounded objective");
    // pivot on (lr, enter)
    S* prow = &T[static_cast<size_t>(lr) * stride];
    const S piv = prow[enter];
    for (int j = 0; j <= ncols; ++j) {
      if (j < ncols && !alive[j]) continue;
      if (!Ops<S>::zero(prow[j])) prow[j] = prow[j] / piv;
    }
    for (int i = 0; i <= m; ++i) {
      S* row = i == m ? R.data() : &T[static_cast<size_t>(i) * stride];
      if (row == prow) continue;
      const S f = row[enter];
      if (Ops<S>::zero(f)) continue;
      for (int j = 0; j <= ncols; ++j) {
        if (j < ncols && !alive[j]) continue;
        if (!Ops<S>::zero(prow[j])) row[j] = row[j] - f * prow[j];
      }
    }
    const int old_basic = basis[lr];
    basis[lr] = enter;
    if (is_art[old_basic]) alive[old_basic] = 0;
  }

  const bool feasible = Ops<S>::zero(R[ncols]);
  if (feasible && witness_out) {
    std::vector<S> x(ncols, zero);
    for (int i = 0; i < m; ++i) x[basis[i]] = T[static_cast<size_t>(i) * stride + ncols];
    witness_out->resize(n);
    for (int j = 0; j < n; ++j)
      (*witness_out)[j] = Ops<S>::to_rat(x[j] - x[n + j]);
  }
  return feasible;
}

void verify(const LinSystem& sys, const RatVec& witness) {
  for (const LinRow& r : sys.rows) {
    if (!row_satisfied(r, witness))
      throw std::logic_error("feasibility witness violates a row");
  }
}

}  // namespace

// Works on any system; canonicalization is only needed for cache keys.
FeasResult solve_system(const LinSystem& canonical, bool verify_witness) {
  FeasResult res;
  try {
    res.feasible = phase1<Q64>(canonical, &res.witness);
  } catch (const Q64Overflow&) {
    res.witness.clear();
    res.feasible = phase1<Rat>(canonical, &res.witness);
  }
  if (!res.feasible) res.witness.clear();
  if (res.feasible && verify_witness) verify(canonical, res.witness);
  return res;
}

FeasibilityOracle::FeasibilityOracle(OracleOptions opt) : opt_(opt) {}

bool FeasibilityOracle::is_feasible(const LinSystem& sys) {
  const LinSystem canon = canonicalized(sys);
  if (!opt_.cache) {
    FeasResult r = solve_system(canon, opt_.verify_witness);
    std::lock_guard lock(mu_);
    ++stats_.solves;
    return r.feasible;
  }
  const auto key = system_key(canon);
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++stats_.cache_hits;
      return it->second;
    }
  }
  FeasResult r = solve_system(canon, opt_.verify_witness);
  std::lock_guard lock(mu_);
  ++stats_.solves;
  cache_.emplace(key, r.feasible);
  return r.feasible;
}

FeasResult FeasibilityOracle::solve(const LinSystem& sys) {
  const LinSystem canon = canonicalized(sys);
  FeasResult r = solve_system(canon, opt_.verify_witness);
  std::lock_guard lock(mu_);
  ++stats_.solves;
  if (opt_.cache) cache_.emplace(system_key(canon), r.feasible);
  return r;
}

FeasibilityStats FeasibilityOracle::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

void FeasibilityOracle::reset_stats() {
  std::lock_guard lock(mu_);
  stats_ = {};
}

void FeasibilityOracle::clear_cache() {
  std::lock_guard lock(mu_);
  cache_.clear();
}

FarkasCertificate farkas_certificate(const LinSystem& canonical) {
  const int m = static_cast<int>(canonical.rows.size());
  FarkasCertificate cert;
  cert.dual = LinSystem(m);
  for (int i = 0; i < m; ++i) {
    if (canonical.rows[i].rel == Rel::EqZero) continue;  // multiplier free
    IntVec e(m, Int(0));
    e[i] = 1;
    cert.dual.add(std::move(e), Rel::GeZero);
  }
  for (int j = 0; j < canonical.n; ++j) {
    IntVec col(m);
    for (int i = 0; i < m; ++i) col[i] = canonical.rows[i].a[j];
    cert.dual.add(std::move(col), Rel::EqZero);
  }
  IntVec strict(m, Int(0));
  for (int i = 0; i < m; ++i)
    if (canonical.rows[i].rel == Rel::GeOne) strict[i] = 1;
  cert.dual.add(std::move(strict), Rel::GeOne);
  // solved uncanonicalized so the multipliers stay positionally aligned
  FeasResult r = solve_system(cert.dual);
  cert.found = r.feasible;
  cert.y = std::move(r.witness);
  return cert;
}

}  // namespace ldt
