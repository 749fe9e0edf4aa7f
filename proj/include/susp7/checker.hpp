#pragma once

#include <map>
#include <string>
#include <vector>

#include "susp7/decompose.hpp"
#include "susp7/invariants.hpp"

namespace susp7 {

// Reduced homology of the manifold itself (2 inverted), recomputed from the
// descriptor alone: Z^r+H, Z^d+T, Z^d+H, Z^r in degrees 2..5 and Z in
// degree 7. Independent of how decompose assembles its wedges.
std::map<int, AbelianGroup> manifold_homology(const ManifoldDescriptor& m);

struct DegreeRow {
  int degree = 0;
  AbelianGroup expected, actual;
  bool ok = false;
};

struct VerificationReport {
  bool pass = false;
  std::vector<DegreeRow> rows;
  std::vector<std::string> trace;  // echoed from the decomposition
};

VerificationReport verify_homology(const ManifoldDescriptor& m,
                                   const DecompositionResult& result);

// Whether two descriptors have the same suspension homotopy type at the given
// suspension level: equal homology data, agreeing p1-vanishing, and (when p1
// is nonzero mod 3) equal p1-radius. For suspensions == 1 both descriptors
// must satisfy the single-suspension gate.
bool rigidity_equal(const ManifoldDescriptor& a, const ManifoldDescriptor& b,
                    int suspensions);

}  // namespace susp7
