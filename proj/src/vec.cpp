#include "ldt/vec.hpp"

#include <sstream>
#include <stdexcept>

namespace ldt {

Rat dot(const IntVec& a, const RatVec& c) {
  if (a.size() != c.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    acc += Rat(a[i]) * c[i];
  }
  return acc;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double dot_d(const IntVec& a, const std::vector<double>& c) {
  if (a.size() != c.size()) throw std::invalid_argument("dot_d: dimension mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    acc += static_cast<double>(a[i]) * c[i];
  }
  return acc;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVec canonical_normal(IntVec v) {
  Int g = 0;
  int first_sign = 0;
  for (const Int& x : v) {
    if (x == 0) continue;
    if (first_sign == 0) first_sign = sign_of(x);
    g = boost::multiprecision::gcd(g, Int(boost::multiprecision::abs(x)));
  }
  if (first_sign == 0) throw std::invalid_argument("canonical_normal: zero vector");
  for (Int& x : v) {
    x /= g;
    if (first_sign < 0) x = -x;
  }
  return v;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace ldt
