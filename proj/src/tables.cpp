#include "susp7/tables.hpp"

#include <algorithm>

#include "susp7/errors.hpp"

namespace susp7 {

namespace {

const AbelianGroup kTrivial{};
const AbelianGroup kZ3 = make_group(0, {{3, 1}});

void check_prime(std::int64_t p, int e) {
  if (p < 3) throw OutOfTable("tables cover odd primes only");
  auto f = factorize(p);
  if (f.size() != 1 || f[0].second != 1)
    throw OutOfTable("tables index Moore spaces by a prime base");
  if (e < 0) throw ValidationError("negative exponent");
}

std::string pnk(int n, std::int64_t p) {
  return "P^" + std::to_string(n) + "(" + std::to_string(p) + "^r)";
}

}  // namespace

PiEntry pi_moore(int n, std::int64_t p, int e, int k) {
  check_prime(p, e);
  if (e < 1) throw OutOfTable("trivial Moore space has no table entry");
  if (n >= 4 && k == n)
    return {kTrivial, {},
            "pi_n(P^n(p^r)) = 0 away from 2 for n >= 4 (mod-p Hurewicz bound)"};
  if (n >= 4 && k == n + 1)
    return {kTrivial, {},
            "pi_{n+1}(P^n(p^r)) = 0 away from 2 for n >= 4, p odd"};
  if (n >= 6 && k == n + 2) {
    if (p == 3)
      return {kZ3, AttachTag::iota_alpha,
              "pi_{n+2}(" + pnk(n, 3) + ") = Z/3{i . susp^{n-4} alpha} for "
              "n >= 6; alpha generates pi_6(S^3) = Z/3 (Toda)"};
    return {kTrivial, {},
            "pi_{n+2}(" + pnk(n, p) + ") = 0 for p >= 5, n >= 6 "
            "(the 3-primary class alpha dies at larger primes)"};
  }
  if (n == 4 && k == 7) {
    if (p == 3)
      return {kZ3, AttachTag::alpha_tilde,
              "pi_7(P^4(3^r)) = Z/3{alpha~} with q . alpha~ = susp alpha "
              "(Cohen-Moore-Neisendorfer splitting of Omega P^4)"};
    return {kTrivial, {},
            "pi_7(P^4(p^r)) = 0 for p >= 5 "
            "(Cohen-Moore-Neisendorfer splitting of Omega P^4)"};
  }
  if (n == 5 && k == 8) {
    if (p == 3)
      return {kZ3, AttachTag::alpha_tilde,
              "pi_8(P^5(3^r)) = Z/3{susp alpha~} (suspension of the P^4 entry "
              "through the metastable range)"};
    return {kTrivial, {},
            "pi_8(P^5(p^r)) = 0 for p >= 5"};
  }
  throw OutOfTable("pi_" + std::to_string(k) + "(P^" + std::to_string(n) +
                   "(p^e)) is outside the table");
}

SmashEntry smash_moore(int m, std::int64_t p, int r, int n, std::int64_t q,
                       int s) {
  if (m < 3 || n < 3) throw ValidationError("smash table starts at P^3");
  check_prime(p, r);
  check_prime(q, s);
  if (r == 0 || s == 0)
    return {WedgeExpr{}, "a contractible smash factor gives a point"};
  if (p != q)
    return {WedgeExpr{},
            "P^m(p^r) ^ P^n(q^s) is contractible for distinct primes "
            "(homology is p- and q-torsion at once)"};
  int t = std::min(r, s);
  return {normalize({moore(m + n, p, t), moore(m + n - 1, p, t)}),
          "P^m(p^r) ^ P^n(p^s) = P^{m+n}(p^min) v P^{m+n-1}(p^min) "
          "(Neisendorfer, odd-primary Moore space smash)"};
}

MapsEntry maps_from_moore(int n, const AbelianGroup& coefficients,
                          const Atom& target) {
  if (n < 4) throw OutOfTable("map table starts at P^4(A)");
  if (coefficients.is_trivial())
    return {MapsVerdict::trivial_group, "the source is contractible"};
  if (const auto* s = std::get_if<Sphere>(&target)) {
    if (s->dim == n - 1)
      return {MapsVerdict::trivial_group,
              "[P^n(A), S^{n-1}] = 0 away from 2: the cofiber sequence of the "
              "degree map leaves no room below the bottom cell"};
    if (s->dim == n - 2)
      return {MapsVerdict::trivial_group,
              "[P^n(A), S^{n-2}] = 0 away from 2 for n >= 4"};
    throw OutOfTable("[P^n(A), S^m] tabulated only for m = n-1, n-2");
  }
  if (const auto* t = std::get_if<Moore>(&target)) {
    if (t->dim == n - 1 && n >= 5)
      return {MapsVerdict::trivial_group,
              "[P^{n+1}(A), P^n(p^r)] = 0 away from 2 for n >= 4 "
              "(universal coefficients plus the vanishing sphere entries)"};
    if (t->dim == n)
      return {MapsVerdict::null_if_trivial_on_homology,
              "a self-dimension map P^n(A) -> P^n(p^r) inducing zero on "
              "homology is null-homotopic away from 2 (n >= 4)"};
    throw OutOfTable("[P^n(A), P^m(p^r)] tabulated only for m = n, n-1");
  }
  throw OutOfTable("map targets are spheres and Moore spaces");
}

}  // namespace susp7
