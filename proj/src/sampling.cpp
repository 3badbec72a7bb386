#include "ldt/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ldt {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// uniform in [0, 1) from the raw 64-bit stream; distribution classes are
// avoided because their output is implementation-defined
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

BallSampler::BallSampler(int n, CostDomain domain, uint64_t seed)
    : n_(n), domain_(std::move(domain)), seed_(seed) {
  if (n < 1) throw std::invalid_argument("BallSampler: dimension must be positive");
  if (domain_.dim() != n) throw std::invalid_argument("BallSampler: domain dimension mismatch");
}

std::vector<double> BallSampler::sample(uint64_t index) const {
  std::mt19937_64 rng(splitmix64(seed_ ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL)));
  std::vector<double> c(n_);
  for (;;) {
    // isotropic direction via Box-Muller pairs, radius U^(1/n)
    double norm2 = 0.0;
    for (int i = 0; i < n_; i += 2) {
      double u1 = unit_double(rng);
      while (u1 == 0.0) u1 = unit_double(rng);
      const double u2 = unit_double(rng);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double g0 = r * std::cos(kTwoPi * u2);
      const double g1 = r * std::sin(kTwoPi * u2);
      c[i] = g0;
      norm2 += g0 * g0;
      if (i + 1 < n_) {
        c[i + 1] = g1;
        norm2 += g1 * g1;
      }
    }
    if (norm2 == 0.0) continue;
    const double radius = std::pow(unit_double(rng), 1.0 / n_);
    const double scale = radius / std::sqrt(norm2);
    bool ok = true;
    for (int i = 0; i < n_; ++i) {
      c[i] *= scale;
      switch (domain_.signs[i]) {
        case Sign::Free: break;
        case Sign::Positive: c[i] = std::fabs(c[i]); break;
        case Sign::Negative: c[i] = -std::fabs(c[i]); break;
      }
      if (c[i] == 0.0) ok = false;
    }
    if (ok) return c;
  }
}

std::vector<double> BallSampler::next() { return sample(counter_++); }

RatVec BallSampler::to_exact(const std::vector<double>& c) {
  RatVec out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i])) throw std::invalid_argument("to_exact: non-finite cost entry");
    out[i] = Rat(c[i]);  // doubles are dyadic rationals, conversion is exact
  }
  return out;
}

}  // namespace ldt
