#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ldt/vec.hpp"

namespace ldt {

// Homogeneous system of integer linear constraints on c.  GeOne rows encode
// strict inequalities "> 0": every system built here is positively
// homogeneous, so a strictly feasible point can be rescaled to clear margin 1.
enum class Rel : uint8_t { GeZero, EqZero, GeOne };

struct LinRow {
  IntVec a;
  Rel rel;
};

struct LinSystem {
  int n = 0;
  std::vector<LinRow> rows;

  LinSystem() = default;
  explicit LinSystem(int dim) : n(dim) {}
  void add(IntVec a, Rel rel);
};

// Homogenization of a mixed strict/closed system: strict rows become GeOne,
// closed rows GeZero, equalities EqZero. Throws on dimension mismatch.
LinSystem strictify(int n, const std::vector<IntVec>& strict_rows,
                    const std::vector<IntVec>& closed_rows,
                    const std::vector<IntVec>& eq_rows);

// Canonical form: rows gcd-reduced (EqZero rows also sign-normalized),
// sorted, deduplicated. Feasibility-equivalent to the input, and a witness of
// the canonical system satisfies the original rows.
LinSystem canonicalized(const LinSystem& sys);

// 128-bit content key of the canonical form, for the oracle memo cache.
std::pair<uint64_t, uint64_t> system_key(const LinSystem& canonical);

// Exact check of one row at a c value.
bool row_satisfied(const LinRow& row, const RatVec& c);

}  // namespace ldt
