#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "susp7/abelian.hpp"

namespace susp7 {

// Value in the totally ordered set -1/1 < -1/2 < ... < 0 < ... < 1/2 < 1/1,
// stored as a sign and denominator. Ordering is by rational value.
struct Radius {
  int num = 0;  // -1, 0 or +1
  int den = 1;  // mu or nu; 1 when num == 0

  static Radius negative(int mu) { return {-1, mu}; }
  static Radius zero() { return {0, 1}; }
  static Radius positive(int nu) { return {+1, nu}; }

  friend std::strong_ordering operator<=>(Radius a, Radius b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(Radius a, Radius b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

std::string render_radius(Radius r);  // "-1/2", "0", "1/3", "1"

// Algebraic invariants of a closed simply connected 7-manifold M with 2
// inverted: H_2 = Z^r + H, H_3 = Z^d + T (H, T odd torsion), and the mod-3
// pairing of the first Pontryagin class against the canonical summand basis.
struct ManifoldDescriptor {
  int r = 0;
  int d = 0;
  AbelianGroup h2_torsion;  // H
  AbelianGroup h3_torsion;  // T
  std::vector<int> wu;      // Z/3 entries, canonical summand order
  friend bool operator==(const ManifoldDescriptor&,
                         const ManifoldDescriptor&) = default;
};

struct RawDescriptor {
  std::int64_t r = 0;
  std::int64_t d = 0;
  RawGroup h2_torsion;
  RawGroup h3_torsion;
  std::vector<std::int64_t> wu;
};

enum class SummandKind { h_part, free_part, t_part };

struct SummandIndex {
  int position = 0;  // 1-based
  SummandKind kind = SummandKind::free_part;
  int exponent = 0;  // mu or nu; 0 for free_part
  Radius radius;
};

// Checks ranks, drops 2-torsion (warning channel), checks the wu length
// against m + d + l (3-primary counts of H and T plus d). Throws
// NegativeRank / WuLengthMismatch / ValidationError.
ManifoldDescriptor validate(const RawDescriptor& raw,
                            std::vector<std::string>* warnings = nullptr);
RawDescriptor to_raw(const ManifoldDescriptor& m);

// Canonical basis order: 3-primary H factors with ascending exponents, then d
// free slots, then 3-primary T factors with descending exponents. Radii are
// weakly increasing along the list.
std::vector<SummandIndex> summand_list(const ManifoldDescriptor& m);

// First position where wu is nonzero; nullopt when p1 = 0 mod 3.
std::optional<int> p1_index(const ManifoldDescriptor& m);
std::optional<Radius> p1_radius(const ManifoldDescriptor& m);

}  // namespace susp7
