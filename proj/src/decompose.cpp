#include "susp7/decompose.hpp"

#include <utility>

#include "susp7/errors.hpp"
#include "susp7/reduce.hpp"

namespace susp7 {

std::string case_text(CaseLabel c) {
  switch (c) {
    case CaseLabel::p1_trivial: return "p1-trivial";
    case CaseLabel::h_block: return "h-block";
    case CaseLabel::free_block: return "free-block";
    case CaseLabel::t_block: return "t-block";
  }
  throw Error("unknown case label");
}

WedgeExpr chang_split(const std::map<int, AbelianGroup>& homology, int bottom) {
  if (bottom < 3) throw BadRange("splitting window starts at degree 3");
  std::vector<Atom> atoms;
  for (const auto& [deg, g] : homology) {
    if (g.is_trivial()) continue;
    if (deg < bottom || deg > bottom + 2)
      throw BadRange("homology in degree " + std::to_string(deg) +
                     " is outside " + std::to_string(bottom) + ".." +
                     std::to_string(bottom + 2));
    if (!g.torsion.empty() && deg == bottom + 2)
      throw BadRange("torsion in the top degree is not realizable by a "
                     "complex of dimension " + std::to_string(bottom + 2));
    for (int i = 0; i < g.free_rank; ++i) atoms.push_back(sphere(deg));
    for (const Atom& a : moore_atoms(deg + 1, AbelianGroup{0, g.torsion}))
      atoms.push_back(a);
  }
  return normalize(std::move(atoms));
}

WedgeExpr stage(const ManifoldDescriptor& m, int level) {
  if (level < 3 || level > 5)
    throw ValidationError("stage level must be 3, 4 or 5");
  // Degrees 3 and 4 of the suspension carry Z^r + H and Z^d + T; that window
  // splits uniquely into spheres and Moore spaces.
  std::map<int, AbelianGroup> low;
  low[3] = direct_sum(AbelianGroup{m.r, {}}, m.h2_torsion);
  low[4] = direct_sum(AbelianGroup{m.d, {}}, m.h3_torsion);
  WedgeExpr w = chang_split(low, 3);
  if (level >= 4) {
    std::vector<Atom> extra;
    for (int i = 0; i < m.d; ++i) extra.push_back(sphere(5));
    for (const Atom& a : moore_atoms(6, m.h2_torsion)) extra.push_back(a);
    w = merge(w, normalize(std::move(extra)));
  }
  if (level == 5) {
    std::vector<Atom> extra;
    for (int i = 0; i < m.r; ++i) extra.push_back(sphere(6));
    w = merge(w, normalize(std::move(extra)));
  }
  return w;
}

WedgeExpr suspend_bundle(std::int64_t rho, int nu) {
  if (nu < 1) throw ValidationError("bundle needs nu >= 1");
  if (rho % 3 == 0) return normalize({moore(5, 3, nu), sphere(8)});
  return normalize({cone_iota_alpha(5, nu)});
}

namespace {

struct Block {
  CaseLabel label;
  int exponent = 0;  // mu or nu for the torsion blocks
};

Block classify(const ManifoldDescriptor& m, const CanonicalForm& reduced) {
  if (!reduced.pivot) return {CaseLabel::p1_trivial, 0};
  const std::vector<SummandIndex> summands = summand_list(m);
  if (*reduced.pivot > static_cast<int>(summands.size()))
    throw ValidationError("wu vector is longer than the summand list");
  const SummandIndex s = summands[*reduced.pivot - 1];
  switch (s.kind) {
    case SummandKind::h_part: return {CaseLabel::h_block, s.exponent};
    case SummandKind::free_part: return {CaseLabel::free_block, 0};
    case SummandKind::t_part: return {CaseLabel::t_block, s.exponent};
  }
  throw Error("unknown summand kind");
}

DecompositionResult build(const ManifoldDescriptor& m, int susp) {
  const int s = susp;
  DecompositionResult res;
  res.suspensions = susp;
  res.trace.push_back(
      "reduced homology with 2 inverted: Z^r+H, Z^d+T, Z^d+H, Z^r in degrees "
      "2..5 and Z on top (Poincare duality plus universal coefficients)");
  res.trace.push_back(
      "skeleta through dimension 5 suspend to a unique wedge of spheres and "
      "Moore spaces (Chang splitting away from 2)");

  const CanonicalForm reduced = canonical_form(make_vector(
      std::vector<int>(m.wu.begin(), m.wu.end())));
  if (reduced.pivot) {
    std::string moves;
    for (const Move& mv : reduced.witness) {
      if (!moves.empty()) moves += "; ";
      moves += render_move(mv);
    }
    res.trace.push_back(
        "mod-3 attaching vector reduced along order-respecting moves to e_" +
        std::to_string(*reduced.pivot) + (moves.empty() ? "" : " via " + moves));
  } else {
    res.trace.push_back(
        "mod-3 attaching vector vanishes (p1 = 0 mod 3): the top cell "
        "splits off");
  }

  const Block block = classify(m, reduced);
  res.case_label = block.label;

  AbelianGroup h = m.h2_torsion;
  AbelianGroup t = m.h3_torsion;
  int low_free = m.d;  // plain spheres in degree 3+s
  std::vector<Atom> atoms;

  switch (block.label) {
    case CaseLabel::p1_trivial:
      atoms.push_back(sphere(7 + s));
      break;
    case CaseLabel::h_block:
      h = remove_cyclic_summand(h, 3, block.exponent);
      atoms.push_back(cone_alpha_tilde(3 + s, block.exponent));
      res.trace.push_back(
          "P^1 first acts on a Z/3^" + std::to_string(block.exponent) +
          " summand of H: the top cell rides P^" + std::to_string(3 + s) +
          "(3^" + std::to_string(block.exponent) + ") along alpha~ "
          "(pi_{n+3}(P^n(3^e)) = Z/3{alpha~})");
      break;
    case CaseLabel::free_block:
      low_free -= 1;
      atoms.push_back(cone_alpha(3 + s));
      res.trace.push_back(
          "P^1 first acts on a free summand: the top cell rides S^" +
          std::to_string(3 + s) + " along susp^" + std::to_string(s) +
          " alpha (alpha generates pi_6(S^3) = Z/3, detected by P^1)");
      break;
    case CaseLabel::t_block: {
      t = remove_cyclic_summand(t, 3, block.exponent);
      WedgeExpr b = suspend_bundle(1, block.exponent);
      if (s > 1) b = suspend(b, s - 1);
      for (const Atom& a : b.atoms()) atoms.push_back(a);
      res.trace.push_back(
          "P^1 first acts on a Z/3^" + std::to_string(block.exponent) +
          " summand of T: the block is the suspended S^3-bundle over S^4 "
          "with p1 = 4 (rho = 1 representative, 3 does not divide rho)");
      break;
    }
  }

  for (int i = 0; i < m.r; ++i) {
    atoms.push_back(sphere(2 + s));
    atoms.push_back(sphere(5 + s));
  }
  for (int i = 0; i < low_free; ++i) atoms.push_back(sphere(3 + s));
  for (int i = 0; i < m.d; ++i) atoms.push_back(sphere(4 + s));
  for (const Atom& a : moore_atoms(3 + s, h)) atoms.push_back(a);
  for (const Atom& a : moore_atoms(4 + s, t)) atoms.push_back(a);
  for (const Atom& a : moore_atoms(5 + s, m.h2_torsion)) atoms.push_back(a);

  res.wedge = normalize(std::move(atoms));
  return res;
}

}  // namespace

DecompositionResult decompose_sigma(const ManifoldDescriptor& m) {
  if (!m.h2_torsion.is_trivial() && !m.h3_torsion.is_trivial())
    throw NeedsDoubleSuspension(
        "one suspension splits only when H or T vanishes (away from 2); "
        "use two suspensions");
  return build(m, 1);
}

DecompositionResult decompose_sigma2(const ManifoldDescriptor& m) {
  return build(m, 2);
}

}  // namespace susp7
