#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace susp7 {

// Cyclic factor Z/p^e, p an odd prime.
struct TorsionFactor {
  std::int64_t prime = 0;
  int exponent = 0;
  friend auto operator<=>(const TorsionFactor&, const TorsionFactor&) = default;
};

// Finitely generated abelian group with the prime 2 already inverted.
// Torsion is stored as prime-power cyclic factors in canonical order
// (ascending prime, then ascending exponent), so equality is structural.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<TorsionFactor> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Unvalidated group data: cyclic orders may be composite, even or unsorted.
// A factor (n, e) stands for Z/(n^e).
struct RawGroup {
  std::int64_t free_rank = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;
};

AbelianGroup make_group(int free_rank, std::vector<TorsionFactor> torsion);
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// Inverts 2: drops every 2-primary factor (reported through `warnings` when
// supplied) and rewrites the rest as sorted odd prime-power factors.
AbelianGroup localize_away_from_2(const RawGroup& raw,
                                  std::vector<std::string>* warnings = nullptr);

// Splits into the p-primary part and the complementary part.
std::pair<AbelianGroup, AbelianGroup> primary_part(const AbelianGroup& g,
                                                   std::int64_t p);

// Removes one Z/p^e factor; throws MissingSummand when absent.
AbelianGroup remove_cyclic_summand(const AbelianGroup& g, std::int64_t p, int e);
AbelianGroup insert_cyclic_summand(const AbelianGroup& g, std::int64_t p, int e);

// Exponents of the p-primary factors, ascending.
std::vector<int> primary_exponents(const AbelianGroup& g, std::int64_t p);

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::int64_t checked_pow(std::int64_t base, int exp);

// "0", "Z", "Z^2 + Z/9 + Z/5"
std::string render_group(const AbelianGroup& g);

}  // namespace susp7
