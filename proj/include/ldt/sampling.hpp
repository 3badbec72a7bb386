#pragma once

#include <cstdint>
#include <vector>

#include "ldt/feasible_set.hpp"

namespace ldt {

// Seeded sampler of cost vectors: uniform in the unit n-ball, folded onto the
// open domain orthant (|.| for Positive coordinates, -|.| for Negative).
// Stateless given (seed, index); vectors with an exactly-zero coordinate are
// resampled. The PRNG is mt19937_64 with hand-rolled transforms so the stream
// does not depend on standard-library distribution implementations.
class BallSampler {
 public:
  BallSampler(int n, CostDomain domain, uint64_t seed);

  std::vector<double> sample(uint64_t index) const;
  std::vector<double> next();  // sample(counter++)

  // Exact rational pre-image of a sampled vector (doubles are dyadic).
  static RatVec to_exact(const std::vector<double>& c);

  int dim() const { return n_; }
  const CostDomain& domain() const { return domain_; }
  uint64_t seed() const { return seed_; }

 private:
  int n_;
  CostDomain domain_;
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace ldt
