#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "ldt/lin_system.hpp"

namespace ldt {

struct FeasibilityStats {
  uint64_t solves = 0;      // fresh simplex runs (cache misses)
  uint64_t cache_hits = 0;  // decisions served from the memo cache
};

struct FeasResult {
  bool feasible = false;
  RatVec witness;  // satisfies every row exactly when feasible
};

struct OracleOptions {
  bool cache = true;
  bool verify_witness = false;  // exact row-by-row recheck after each solve
};

// Exact decision oracle for homogeneous integer linear systems, backed by an
// exact-rational phase-1 simplex with Bland's rule. Deterministic, no
// tolerances. Thread-safe; results are independent of call interleaving.
class FeasibilityOracle {
 public:
  explicit FeasibilityOracle(OracleOptions opt = {});

  // Cached decision. The witness of the underlying solve is not retained.
  bool is_feasible(const LinSystem& sys);

  // Always runs the simplex; returns a witness when feasible.
  FeasResult solve(const LinSystem& sys);

  FeasibilityStats stats() const;
  void reset_stats();
  void clear_cache();

 private:
  struct KeyHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
      return static_cast<size_t>(k.first ^ (k.second * 0x9e3779b97f4a7c15ULL));
    }
  };

  OracleOptions opt_;
  mutable std::mutex mu_;
  std::unordered_map<std::pair<uint64_t, uint64_t>, bool, KeyHash> cache_;
  FeasibilityStats stats_;
};

// Phase-1 simplex on an already-canonicalized system. Exposed for tests.
FeasResult solve_system(const LinSystem& canonical, bool verify_witness = false);

// Infeasibility certificate: multipliers y, one per row of `canonical`, with
// y_i >= 0 on inequality rows, sum_i y_i a_i = 0 and sum over GeOne rows of
// y_i >= 1. Built by solving the dual (Farkas) system with the same solver;
// the returned system is that dual. Only valid when `canonical` is infeasible.
struct FarkasCertificate {
  bool found = false;
  RatVec y;
  LinSystem dual;
};
FarkasCertificate farkas_certificate(const LinSystem& canonical);

}  // namespace ldt
