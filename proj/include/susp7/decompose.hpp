#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "susp7/invariants.hpp"
#include "susp7/wedge.hpp"

namespace susp7 {

enum class CaseLabel { p1_trivial, h_block, free_block, t_block };
std::string case_text(CaseLabel c);

struct DecompositionResult {
  int suspensions = 1;
  WedgeExpr wedge;
  CaseLabel case_label = CaseLabel::p1_trivial;
  std::vector<std::string> trace;  // audit trail of the results applied
};

// Unique splitting of a complex whose reduced homology lives in degrees
// bottom..bottom+2 into spheres and Moore spaces, away from 2. Torsion in
// degree bottom+2 or homology outside the window throws BadRange.
WedgeExpr chang_split(const std::map<int, AbelianGroup>& homology, int bottom);

// Suspension of the skeleton M_(level), level 3, 4 or 5:
//   3: (v^r S^3) v (v^d S^4) v P^4(H) v P^5(T)
//   4: ... v (v^d S^5) v P^6(H)
//   5: ... v (v^r S^6)
WedgeExpr stage(const ManifoldDescriptor& m, int level);

// Suspension of the bundle M_{rho,3^nu}: splits as P^5(3^nu) v S^8 when
// 3 | rho, and is the i.alpha cone on P^5(3^nu) otherwise.
WedgeExpr suspend_bundle(std::int64_t rho, int nu);

// Single suspension; requires the stored odd-localized H or T to vanish,
// otherwise throws NeedsDoubleSuspension.
DecompositionResult decompose_sigma(const ManifoldDescriptor& m);

// Double suspension; no hypothesis.
DecompositionResult decompose_sigma2(const ManifoldDescriptor& m);

}  // namespace susp7
