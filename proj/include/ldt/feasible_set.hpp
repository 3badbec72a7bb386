#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ldt/vec.hpp"

namespace ldt {

// Explicit finite feasible set X of an integer linear program max c'x.
// Point order is the canonical cone/solution indexing for the whole pipeline.
struct FeasibleSet {
  int n = 0;
  std::vector<IntVec> points;

  int size() const { return static_cast<int>(points.size()); }
};

enum class Sign : uint8_t { Free, Positive, Negative };

// Open sign orthant of cost space: Positive means c_i > 0, Negative c_i < 0.
struct CostDomain {
  std::vector<Sign> signs;

  int dim() const { return static_cast<int>(signs.size()); }
  bool all_free() const;

  static CostDomain all(int n, Sign s);
  static CostDomain free_orthant(int n) { return all(n, Sign::Free); }
  static CostDomain positive_orthant(int n) { return all(n, Sign::Positive); }
  static CostDomain negative_orthant(int n) { return all(n, Sign::Negative); }
};

std::string domain_string(const CostDomain& d);

// Text format: first line "n m", then m rows of n space-separated integers,
// then an optional "domain" line with n tokens from {+, -, free}.
void write_set_text(std::ostream& os, const FeasibleSet& set, const CostDomain& domain);
std::string set_text(const FeasibleSet& set, const CostDomain& domain);

// Parses the text format. Rejects ragged rows and duplicate points; error
// messages name the offending line numbers.
struct ParsedSet {
  FeasibleSet set;
  CostDomain domain;
};
ParsedSet parse_set_text(std::istream& is);

bool is_binary(const FeasibleSet& set);

// FNV-1a content hash of the canonical text serialization.
uint64_t content_hash(const FeasibleSet& set, const CostDomain& domain);

}  // namespace ldt
