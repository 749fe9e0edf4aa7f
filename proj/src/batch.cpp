#include "susp7/batch.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "susp7/checker.hpp"
#include "susp7/decompose.hpp"
#include "susp7/errors.hpp"
#include "susp7/wedge.hpp"

namespace susp7 {
namespace {

BatchItem run_one(const ManifoldDescriptor& m) {
  BatchItem item;
  try {
    item.gate = m.h2_torsion.is_trivial() || m.h3_torsion.is_trivial();
    item.homology_ok = true;
    if (item.gate) {
      const DecompositionResult one = decompose_sigma(m);
      item.sigma = render(one.wedge);
      item.homology_ok = item.homology_ok && verify_homology(m, one).pass;
    }
    const DecompositionResult two = decompose_sigma2(m);
    item.sigma2 = render(two.wedge);
    item.homology_ok = item.homology_ok && verify_homology(m, two).pass;
  } catch (const std::exception& e) {
    item.error = e.what();
    item.homology_ok = false;
  }
  return item;
}

}  // namespace

std::vector<BatchItem> run_batch(const std::vector<ManifoldDescriptor>& input,
                                 bool parallel) {
  std::vector<BatchItem> out(input.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(input.size()); ++i)
      out[static_cast<std::size_t>(i)] = run_one(input[i]);
    return out;
#endif
  }
  for (std::size_t i = 0; i < input.size(); ++i) out[i] = run_one(input[i]);
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace susp7
