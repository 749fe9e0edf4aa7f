#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "susp7/abelian.hpp"
#include "susp7/wedge.hpp"

namespace susp7 {

// Closed-world lookup tables for homotopy of odd-primary Moore spaces, in the
// range this calculator needs. Anything outside the declared domain throws
// OutOfTable; no extrapolation.

struct PiEntry {
  AbelianGroup group;
  std::optional<AttachTag> generator;  // named generator when group is Z/3
  std::string citation;
};

// pi_k(P^n(p^e)) localized away from 2. Domain:
//   k = n, k = n+1            for n >= 4
//   k = n+2                   for n >= 6
//   (n, k) = (4, 7), (5, 8)
PiEntry pi_moore(int n, std::int64_t p, int e, int k);

struct SmashEntry {
  WedgeExpr wedge;
  std::string citation;
};

// P^m(p^r) smash P^n(q^s), m, n >= 3. Equal primes give
// P^{m+n}(p^min) v P^{m+n-1}(p^min); distinct odd primes smash to a point.
// r or s == 0 marks a contractible factor and also gives the empty wedge.
SmashEntry smash_moore(int m, std::int64_t p, int r, int n, std::int64_t q, int s);

enum class MapsVerdict {
  trivial_group,              // [P^n(A), target] = 0
  null_if_trivial_on_homology // maps inducing 0 on homology are null
};

struct MapsEntry {
  MapsVerdict verdict;
  std::string citation;
};

// Homotopy classes of maps P^n(A) -> target, away from 2. Domain:
//   target Sphere(n-1), Sphere(n-2)        (n >= 4)
//   target Moore(n-1, p, r)                (n >= 5)
//   target Moore(n, p, r)                  (n >= 4, homology-triviality rule)
MapsEntry maps_from_moore(int n, const AbelianGroup& coefficients,
                          const Atom& target);

}  // namespace susp7
