#include "susp7/sampler.hpp"

#include <utility>

namespace susp7 {
namespace {

AbelianGroup random_torsion(std::mt19937& rng, const SamplerBounds& bounds) {
  std::uniform_int_distribution<int> count(0, bounds.max_factors);
  std::uniform_int_distribution<std::size_t> pick(0, bounds.primes.size() - 1);
  std::uniform_int_distribution<int> exp(1, bounds.max_exponent);
  std::vector<TorsionFactor> factors;
  const int n = count(rng);
  for (int i = 0; i < n; ++i)
    factors.push_back({bounds.primes[pick(rng)], exp(rng)});
  return make_group(0, std::move(factors));
}

ManifoldDescriptor assemble(std::mt19937& rng, const SamplerBounds& bounds,
                            AbelianGroup h, AbelianGroup t) {
  std::uniform_int_distribution<int> rank(0, bounds.max_rank);
  ManifoldDescriptor m;
  m.r = rank(rng);
  m.d = rank(rng);
  m.h2_torsion = std::move(h);
  m.h3_torsion = std::move(t);

  const std::size_t slots = primary_exponents(m.h2_torsion, 3).size() +
                            static_cast<std::size_t>(m.d) +
                            primary_exponents(m.h3_torsion, 3).size();
  m.wu.assign(slots, 0);
  std::bernoulli_distribution all_zero(bounds.all_zero_wu_prob);
  if (!all_zero(rng)) {
    std::uniform_int_distribution<int> unit(0, 2);
    for (auto& v : m.wu) v = unit(rng);
  }
  return m;
}

}  // namespace

ManifoldDescriptor random_descriptor(std::mt19937& rng,
                                     const SamplerBounds& bounds) {
  return assemble(rng, bounds, random_torsion(rng, bounds),
                  random_torsion(rng, bounds));
}

ManifoldDescriptor random_gated_descriptor(std::mt19937& rng,
                                           const SamplerBounds& bounds) {
  AbelianGroup h, t;
  if (std::bernoulli_distribution(0.5)(rng))
    t = random_torsion(rng, bounds);
  else
    h = random_torsion(rng, bounds);
  return assemble(rng, bounds, std::move(h), std::move(t));
}

}  // namespace susp7
