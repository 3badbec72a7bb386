#pragma once

#include <string>
#include <vector>

#include "ldt/rational.hpp"

namespace ldt {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Exact inner product a'c. Throws std::invalid_argument on dimension mismatch.
Rat dot(const IntVec& a, const RatVec& c);
Int dot(const IntVec& a, const IntVec& b);
double dot_d(const IntVec& a, const std::vector<double>& c);

bool is_zero(const IntVec& v);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negated(const IntVec& v);

// Divides out the gcd of the entries and flips the sign so the first nonzero
// entry is positive. Two nonzero vectors map to the same output iff they are
// scalar multiples of each other. Throws on the zero vector.
IntVec canonical_normal(IntVec v);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace ldt
