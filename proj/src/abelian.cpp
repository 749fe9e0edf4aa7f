#include "susp7/abelian.hpp"

#include <algorithm>
#include <limits>

#include "susp7/errors.hpp"

namespace susp7 {

AbelianGroup make_group(int free_rank, std::vector<TorsionFactor> torsion) {
  if (free_rank < 0) throw ValidationError("free rank must be non-negative");
  for (const auto& f : torsion) {
    if (f.prime < 3 || f.exponent < 1)
      throw ValidationError("torsion factors must be odd prime powers");
  }
  std::sort(torsion.begin(), torsion.end());
  return AbelianGroup{free_rank, std::move(torsion)};
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<TorsionFactor> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  return make_group(a.free_rank + b.free_rank, std::move(t));
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw ValidationError("cannot factor a non-positive order");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (base < 1 || exp < 0) throw ValidationError("bad power");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base)
      throw Error("cyclic order does not fit in 64 bits");
    r *= base;
  }
  return r;
}

AbelianGroup localize_away_from_2(const RawGroup& raw,
                                  std::vector<std::string>* warnings) {
  if (raw.free_rank < 0) throw ValidationError("free rank must be non-negative");
  if (raw.free_rank > std::numeric_limits<int>::max())
    throw ValidationError("free rank out of range");
  std::vector<TorsionFactor> torsion;
  for (const auto& [n, e] : raw.factors) {
    if (n < 1 || e < 0) throw ValidationError("torsion factor (n, e) needs n >= 1, e >= 0");
    if (e == 0 || n == 1) continue;
    if (e > 1'000'000) throw ValidationError("torsion exponent out of range");
    for (const auto& [q, f] : factorize(n)) {
      if (q == 2) {
        if (warnings) {
          const std::int64_t ee = f * e;
          const std::string order =
              ee < 63 ? std::to_string(checked_pow(2, static_cast<int>(ee)))
                      : "2^" + std::to_string(ee);
          warnings->push_back("dropped 2-primary factor Z/" + order +
                              " (2 is inverted)");
        }
        continue;
      }
      torsion.push_back({q, static_cast<int>(f * e)});
    }
  }
  return make_group(static_cast<int>(raw.free_rank), std::move(torsion));
}

std::pair<AbelianGroup, AbelianGroup> primary_part(const AbelianGroup& g,
                                                   std::int64_t p) {
  AbelianGroup at{0, {}}, away{g.free_rank, {}};
  for (const auto& f : g.torsion)
    (f.prime == p ? at : away).torsion.push_back(f);
  return {at, away};
}

AbelianGroup remove_cyclic_summand(const AbelianGroup& g, std::int64_t p, int e) {
  AbelianGroup out = g;
  auto it = std::find(out.torsion.begin(), out.torsion.end(), TorsionFactor{p, e});
  if (it == out.torsion.end())
    throw MissingSummand("no Z/" + std::to_string(p) + "^" + std::to_string(e) +
                         " summand to remove");
  out.torsion.erase(it);
  return out;
}

AbelianGroup insert_cyclic_summand(const AbelianGroup& g, std::int64_t p, int e) {
  auto t = g.torsion;
  t.push_back({p, e});
  return make_group(g.free_rank, std::move(t));
}

std::vector<int> primary_exponents(const AbelianGroup& g, std::int64_t p) {
  std::vector<int> out;
  for (const auto& f : g.torsion)
    if (f.prime == p) out.push_back(f.exponent);
  return out;  // canonical order is already ascending
}

std::string render_group(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  if (g.free_rank == 1)
    s = "Z";
  else if (g.free_rank > 1)
    s = "Z^" + std::to_string(g.free_rank);
  for (const auto& f : g.torsion) {
    if (!s.empty()) s += " + ";
    // Fall back to power notation when the order exceeds 64 bits.
    bool fits = true;
    std::int64_t order = 1;
    for (int i = 0; i < f.exponent && fits; ++i) {
      if (order > std::numeric_limits<std::int64_t>::max() / f.prime)
        fits = false;
      else
        order *= f.prime;
    }
    s += "Z/" + (fits ? std::to_string(order)
                      : std::to_string(f.prime) + "^" +
                            std::to_string(f.exponent));
  }
  return s;
}

}  // namespace susp7
