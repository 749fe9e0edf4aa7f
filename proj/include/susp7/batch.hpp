#pragma once

#include <string>
#include <vector>

#include "susp7/invariants.hpp"

namespace susp7 {

// Decompose + homology verification over a batch of descriptors. Each item is
// independent and pure, so the parallel path is a plain OpenMP loop; the
// serial path is kept as the reference the tests compare against.
struct BatchItem {
  bool gate = false;        // single suspension applicable
  std::string sigma;        // canonical text at one suspension ("" if !gate)
  std::string sigma2;       // canonical text at two suspensions
  bool homology_ok = false; // verify_homology passed at every level run
  std::string error;        // nonempty if the item threw
  friend bool operator==(const BatchItem&, const BatchItem&) = default;
};

std::vector<BatchItem> run_batch(const std::vector<ManifoldDescriptor>& input,
                                 bool parallel);

int max_threads();  // 1 without OpenMP

}  // namespace susp7
