#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace ldt {

// Exact arbitrary-precision scalars. All geometry and synthesis run on these;
// doubles appear only in query-time evaluation and benchmarking.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline int sign_of(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
inline int sign_of(const Rat& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

}  // namespace ldt
