#include "susp7/invariants.hpp"

#include <algorithm>

#include "susp7/errors.hpp"

namespace susp7 {

std::string render_radius(Radius r) {
  if (r.num == 0) return "0";
  std::string s = r.num < 0 ? "-1" : "1";
  if (r.den != 1) s += "/" + std::to_string(r.den);
  return s;
}

ManifoldDescriptor validate(const RawDescriptor& raw,
                            std::vector<std::string>* warnings) {
  if (raw.r < 0 || raw.d < 0)
    throw NegativeRank("free ranks r, d must be non-negative");
  ManifoldDescriptor m;
  m.r = static_cast<int>(raw.r);
  m.d = static_cast<int>(raw.d);
  m.h2_torsion = localize_away_from_2(raw.h2_torsion, warnings);
  m.h3_torsion = localize_away_from_2(raw.h3_torsion, warnings);
  if (m.h2_torsion.free_rank != 0 || m.h3_torsion.free_rank != 0)
    throw ValidationError(
        "H and T are the torsion parts; free ranks go in r and d");
  const std::size_t expected =
      primary_exponents(m.h2_torsion, 3).size() + m.d +
      primary_exponents(m.h3_torsion, 3).size();
  if (raw.wu.size() != expected)
    throw WuLengthMismatch("wu has " + std::to_string(raw.wu.size()) +
                           " entries, expected " + std::to_string(expected) +
                           " (3-primary H summands + d + 3-primary T summands)");
  m.wu.reserve(raw.wu.size());
  for (std::int64_t v : raw.wu)
    m.wu.push_back(static_cast<int>(((v % 3) + 3) % 3));
  return m;
}

RawDescriptor to_raw(const ManifoldDescriptor& m) {
  RawDescriptor raw;
  raw.r = m.r;
  raw.d = m.d;
  for (const auto& f : m.h2_torsion.torsion)
    raw.h2_torsion.factors.emplace_back(checked_pow(f.prime, f.exponent), 1);
  for (const auto& f : m.h3_torsion.torsion)
    raw.h3_torsion.factors.emplace_back(checked_pow(f.prime, f.exponent), 1);
  raw.wu.assign(m.wu.begin(), m.wu.end());
  return raw;
}

std::vector<SummandIndex> summand_list(const ManifoldDescriptor& m) {
  std::vector<SummandIndex> out;
  int pos = 1;
  for (int mu : primary_exponents(m.h2_torsion, 3))  // ascending
    out.push_back({pos++, SummandKind::h_part, mu, Radius::negative(mu)});
  for (int i = 0; i < m.d; ++i)
    out.push_back({pos++, SummandKind::free_part, 0, Radius::zero()});
  auto nus = primary_exponents(m.h3_torsion, 3);
  std::reverse(nus.begin(), nus.end());  // descending
  for (int nu : nus)
    out.push_back({pos++, SummandKind::t_part, nu, Radius::positive(nu)});
  return out;
}

std::optional<int> p1_index(const ManifoldDescriptor& m) {
  for (std::size_t i = 0; i < m.wu.size(); ++i)
    if (m.wu[i] != 0) return static_cast<int>(i) + 1;
  return std::nullopt;
}

std::optional<Radius> p1_radius(const ManifoldDescriptor& m) {
  auto idx = p1_index(m);
  if (!idx) return std::nullopt;
  return summand_list(m)[*idx - 1].radius;
}

}  // namespace susp7
