#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "susp7/invariants.hpp"

namespace susp7 {

// Uniform-ish sampler over valid descriptors, for fuzzing and benchmarks.
struct SamplerBounds {
  int max_rank = 4;      // r and d
  int max_factors = 4;   // cyclic factors in each of H, T
  int max_exponent = 3;
  std::vector<std::int64_t> primes = {3, 5, 7};
  double all_zero_wu_prob = 0.25;  // forces the p1 = 0 branch often enough
};

ManifoldDescriptor random_descriptor(std::mt19937& rng,
                                     const SamplerBounds& bounds = {});

// Same, but with H or T forced trivial so the single suspension applies.
ManifoldDescriptor random_gated_descriptor(std::mt19937& rng,
                                           const SamplerBounds& bounds = {});

}  // namespace susp7
