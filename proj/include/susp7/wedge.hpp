#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "susp7/abelian.hpp"

namespace susp7 {

enum class AttachTag { alpha, alpha_tilde, iota_alpha };
std::string tag_text(AttachTag t);  // "alpha" / "alpha~" / "i.alpha"

struct Sphere {
  int dim = 3;  // S^n, n >= 3
  friend bool operator==(const Sphere&, const Sphere&) = default;
};

// P^n(p^e): mapping cone of degree p^e on S^{n-1}; reduced homology Z/p^e in
// degree n-1. Raw inputs may carry a composite or even base; normalize()
// splits those into odd prime-power atoms.
struct Moore {
  int dim = 3;
  std::int64_t prime = 3;
  int exponent = 1;
  friend bool operator==(const Moore&, const Moore&) = default;
};

using ConeCore = std::variant<Sphere, Moore>;

// Two-cell extension core u_f e^{top_dim}. The tag names the attaching class:
//   alpha       on Sphere(n):      S^n u e^{n+4},  class susp^{n-3}(alpha)
//   alpha~      on Moore(n,3,e):   P^n(3^e) u e^{n+4}
//   i.alpha     on Moore(n,3,e):   P^n(3^e) u e^{n+3}, class i . susp^{n-4}(alpha)
struct Cone {
  ConeCore core;
  AttachTag tag = AttachTag::alpha;
  int top_dim = 0;
  friend bool operator==(const Cone&, const Cone&) = default;
};

// Total space of an S^3-bundle over S^4 classified by (rho, nu): first
// Pontryagin class 4*rho, H_3 = Z/3^nu. Input-only; suspend() refuses it
// until decompose's suspend_bundle has rewritten it.
struct Bundle {
  std::int64_t rho = 0;
  int nu = 1;
  friend bool operator==(const Bundle&, const Bundle&) = default;
};

using Atom = std::variant<Sphere, Moore, Cone, Bundle>;

// Injective sort key: (bottom cell dim, kind, core kind, prime, exponent,
// tag, top dim). Kind ranks: Sphere 0, Moore 1, Cone 2, Bundle 3.
using AtomKey = std::array<std::int64_t, 7>;
AtomKey atom_key(const Atom& a);
int bottom_dim(const Atom& a);

class WedgeExpr {
 public:
  WedgeExpr() = default;
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  friend bool operator==(const WedgeExpr& a, const WedgeExpr& b);

 private:
  friend WedgeExpr normalize(std::vector<Atom> raw);
  std::vector<Atom> atoms_;  // canonical order, canonical atoms only
};

// Sorts, validates cones and bundles, splits composite Moore coefficients
// into odd prime powers and drops trivial ones (2-primary parts vanish after
// inverting 2).
WedgeExpr normalize(std::vector<Atom> raw);
WedgeExpr merge(const WedgeExpr& a, const WedgeExpr& b);

// Shifts every atom up by `times` (>= 1). Throws UnsuspendableAtom on Bundle.
WedgeExpr suspend(const WedgeExpr& w, int times);

// Reduced homology with 2 inverted; only nontrivial degrees appear.
std::map<int, AbelianGroup> reduced_homology(const WedgeExpr& w);

std::string render(const Atom& a);
std::string render(const WedgeExpr& w);  // " v "-joined; "*" when empty
WedgeExpr parse_wedge(const std::string& text);

Atom sphere(int n);
Atom moore(int n, std::int64_t p, int e);
// One Moore atom per cyclic factor of a torsion group.
std::vector<Atom> moore_atoms(int n, const AbelianGroup& torsion);
Atom cone_alpha(int sphere_dim);                 // n >= 4, top n+4
Atom cone_alpha_tilde(int moore_dim, int exponent);  // n >= 4, top n+4
Atom cone_iota_alpha(int moore_dim, int exponent);   // n >= 5, top n+3
Atom bundle(std::int64_t rho, int nu);

}  // namespace susp7
