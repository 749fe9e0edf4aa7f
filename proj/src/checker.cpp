#include "susp7/checker.hpp"

#include <algorithm>

#include "susp7/errors.hpp"

namespace susp7 {

std::map<int, AbelianGroup> manifold_homology(const ManifoldDescriptor& m) {
  std::map<int, AbelianGroup> h;
  auto put = [&h](int deg, AbelianGroup g) {
    if (!g.is_trivial()) h.emplace(deg, std::move(g));
  };
  put(2, direct_sum(AbelianGroup{m.r, {}}, m.h2_torsion));
  put(3, direct_sum(AbelianGroup{m.d, {}}, m.h3_torsion));
  put(4, direct_sum(AbelianGroup{m.d, {}}, m.h2_torsion));
  put(5, AbelianGroup{m.r, {}});
  put(7, AbelianGroup{1, {}});
  return h;
}

VerificationReport verify_homology(const ManifoldDescriptor& m,
                                   const DecompositionResult& result) {
  VerificationReport report;
  report.trace = result.trace;

  std::map<int, AbelianGroup> expected;
  for (const auto& [deg, g] : manifold_homology(m))
    expected.emplace(deg + result.suspensions, g);
  const std::map<int, AbelianGroup> actual = reduced_homology(result.wedge);

  std::vector<int> degrees;
  for (const auto& [deg, g] : expected) degrees.push_back(deg);
  for (const auto& [deg, g] : actual)
    if (!expected.count(deg)) degrees.push_back(deg);
  std::sort(degrees.begin(), degrees.end());

  report.pass = true;
  for (int deg : degrees) {
    DegreeRow row;
    row.degree = deg;
    if (auto it = expected.find(deg); it != expected.end())
      row.expected = it->second;
    if (auto it = actual.find(deg); it != actual.end()) row.actual = it->second;
    row.ok = row.expected == row.actual;
    report.pass = report.pass && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool rigidity_equal(const ManifoldDescriptor& a, const ManifoldDescriptor& b,
                    int suspensions) {
  if (suspensions != 1 && suspensions != 2)
    throw ValidationError("suspensions must be 1 or 2");
  if (suspensions == 1) {
    for (const auto* m : {&a, &b})
      if (!m->h2_torsion.is_trivial() && !m->h3_torsion.is_trivial())
        throw NeedsDoubleSuspension(
            "rigidity at one suspension needs H or T to vanish for both "
            "inputs");
  }
  if (a.r != b.r || a.d != b.d || a.h2_torsion != b.h2_torsion ||
      a.h3_torsion != b.h3_torsion)
    return false;
  const auto ra = p1_radius(a);
  const auto rb = p1_radius(b);
  if (ra.has_value() != rb.has_value()) return false;
  return !ra || *ra == *rb;
}

}  // namespace susp7
