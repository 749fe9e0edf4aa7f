#include "susp7/wedge.hpp"

#include <algorithm>
#include <charconv>

#include "susp7/errors.hpp"

namespace susp7 {

std::string tag_text(AttachTag t) {
  switch (t) {
    case AttachTag::alpha: return "alpha";
    case AttachTag::alpha_tilde: return "alpha~";
    case AttachTag::iota_alpha: return "i.alpha";
  }
  throw Error("unknown attach tag");
}

namespace {

int core_bottom(const ConeCore& c) {
  if (const auto* s = std::get_if<Sphere>(&c)) return s->dim;
  return std::get<Moore>(c).dim - 1;
}

// alpha cones sit on spheres; alpha~ and i.alpha cones on 3-primary Moore
// spaces. Top cell: n+4 for alpha and alpha~ (class in pi_{n+3}), n+3 for
// i.alpha (class i . susp^{n-4} alpha in pi_{n+2}).
void check_cone(const Cone& c) {
  switch (c.tag) {
    case AttachTag::alpha: {
      const auto* s = std::get_if<Sphere>(&c.core);
      if (!s) throw ValidationError("alpha cone needs a sphere core");
      if (s->dim < 4) throw ValidationError("alpha cone needs core dim >= 4");
      if (c.top_dim != s->dim + 4)
        throw ValidationError("alpha cone top cell must sit 4 above the core");
      return;
    }
    case AttachTag::alpha_tilde: {
      const auto* m = std::get_if<Moore>(&c.core);
      if (!m || m->prime != 3 || m->exponent < 1)
        throw ValidationError("alpha~ cone needs a 3-primary Moore core");
      if (m->dim < 4) throw ValidationError("alpha~ cone needs core P^n, n >= 4");
      if (c.top_dim != m->dim + 4)
        throw ValidationError("alpha~ cone top cell must sit 4 above P^n");
      return;
    }
    case AttachTag::iota_alpha: {
      const auto* m = std::get_if<Moore>(&c.core);
      if (!m || m->prime != 3 || m->exponent < 1)
        throw ValidationError("i.alpha cone needs a 3-primary Moore core");
      if (m->dim < 5) throw ValidationError("i.alpha cone needs core P^n, n >= 5");
      if (c.top_dim != m->dim + 3)
        throw ValidationError("i.alpha cone top cell must sit 3 above P^n");
      return;
    }
  }
  throw Error("unknown attach tag");
}

std::int64_t tag_rank(AttachTag t) { return static_cast<std::int64_t>(t); }

}  // namespace

int bottom_dim(const Atom& a) {
  struct V {
    int operator()(const Sphere& s) const { return s.dim; }
    int operator()(const Moore& m) const { return m.dim - 1; }
    int operator()(const Cone& c) const { return core_bottom(c.core); }
    int operator()(const Bundle&) const { return 3; }
  };
  return std::visit(V{}, a);
}

AtomKey atom_key(const Atom& a) {
  struct V {
    AtomKey operator()(const Sphere& s) const {
      return {s.dim, 0, 0, 0, 0, 0, 0};
    }
    AtomKey operator()(const Moore& m) const {
      return {m.dim - 1, 1, 0, m.prime, m.exponent, 0, 0};
    }
    AtomKey operator()(const Cone& c) const {
      const auto* m = std::get_if<Moore>(&c.core);
      return {core_bottom(c.core),
              2,
              m ? 1 : 0,
              m ? m->prime : 0,
              m ? m->exponent : 0,
              tag_rank(c.tag),
              c.top_dim};
    }
    AtomKey operator()(const Bundle& b) const {
      return {3, 3, 0, b.rho, b.nu, 0, 0};
    }
  };
  return std::visit(V{}, a);
}

bool operator==(const WedgeExpr& a, const WedgeExpr& b) {
  return a.atoms_ == b.atoms_;
}

WedgeExpr normalize(std::vector<Atom> raw) {
  std::vector<Atom> out;
  for (const Atom& a : raw) {
    if (const auto* s = std::get_if<Sphere>(&a)) {
      if (s->dim < 3) throw ValidationError("spheres start at S^3");
      out.push_back(a);
    } else if (const auto* m = std::get_if<Moore>(&a)) {
      if (m->dim < 3) throw ValidationError("Moore spaces start at P^3");
      if (m->prime < 1 || m->exponent < 0)
        throw ValidationError("Moore coefficient must be a positive order");
      if (m->prime == 1 || m->exponent == 0) continue;  // trivial
      for (const auto& [q, f] : factorize(m->prime)) {
        if (q == 2) continue;  // vanishes with 2 inverted
        out.push_back(Moore{m->dim, q, f * m->exponent});
      }
    } else if (const auto* c = std::get_if<Cone>(&a)) {
      check_cone(*c);
      out.push_back(a);
    } else {
      const auto& b = std::get<Bundle>(a);
      if (b.nu < 1) throw ValidationError("bundle needs nu >= 1");
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), [](const Atom& x, const Atom& y) {
    return atom_key(x) < atom_key(y);
  });
  WedgeExpr w;
  w.atoms_ = std::move(out);
  return w;
}

WedgeExpr merge(const WedgeExpr& a, const WedgeExpr& b) {
  std::vector<Atom> all = a.atoms();
  all.insert(all.end(), b.atoms().begin(), b.atoms().end());
  return normalize(std::move(all));
}

WedgeExpr suspend(const WedgeExpr& w, int times) {
  if (times < 1) throw ValidationError("suspension count must be positive");
  std::vector<Atom> out;
  out.reserve(w.size());
  for (const Atom& a : w.atoms()) {
    if (const auto* s = std::get_if<Sphere>(&a)) {
      out.push_back(Sphere{s->dim + times});
    } else if (const auto* m = std::get_if<Moore>(&a)) {
      out.push_back(Moore{m->dim + times, m->prime, m->exponent});
    } else if (const auto* c = std::get_if<Cone>(&a)) {
      ConeCore core = c->core;
      if (auto* cs = std::get_if<Sphere>(&core))
        cs->dim += times;
      else
        std::get<Moore>(core).dim += times;
      out.push_back(Cone{core, c->tag, c->top_dim + times});
    } else {
      throw UnsuspendableAtom(
          "bundle atoms must pass through suspend_bundle before suspending");
    }
  }
  return normalize(std::move(out));
}

namespace {

void add_homology(std::map<int, AbelianGroup>& acc, int degree,
                  const AbelianGroup& g) {
  if (g.is_trivial()) return;
  auto [it, inserted] = acc.emplace(degree, g);
  if (!inserted) it->second = direct_sum(it->second, g);
}

void atom_homology(std::map<int, AbelianGroup>& acc, const Atom& a) {
  if (const auto* s = std::get_if<Sphere>(&a)) {
    add_homology(acc, s->dim, AbelianGroup{1, {}});
  } else if (const auto* m = std::get_if<Moore>(&a)) {
    add_homology(acc, m->dim - 1, make_group(0, {{m->prime, m->exponent}}));
  } else if (const auto* c = std::get_if<Cone>(&a)) {
    // The attaching classes are torsion homotopy classes hitting zero
    // boundaries, so the top cell adds a plain Z.
    if (const auto* cs = std::get_if<Sphere>(&c->core))
      add_homology(acc, cs->dim, AbelianGroup{1, {}});
    else {
      const Moore& cm = std::get<Moore>(c->core);
      add_homology(acc, cm.dim - 1, make_group(0, {{cm.prime, cm.exponent}}));
    }
    add_homology(acc, c->top_dim, AbelianGroup{1, {}});
  } else {
    const auto& b = std::get<Bundle>(a);
    add_homology(acc, 3, make_group(0, {{3, b.nu}}));
    add_homology(acc, 7, AbelianGroup{1, {}});
  }
}

}  // namespace

std::map<int, AbelianGroup> reduced_homology(const WedgeExpr& w) {
  std::map<int, AbelianGroup> acc;
  for (const Atom& a : w.atoms()) atom_homology(acc, a);
  return acc;
}

std::string render(const Atom& a) {
  struct V {
    std::string operator()(const Sphere& s) const {
      return "S^" + std::to_string(s.dim);
    }
    std::string operator()(const Moore& m) const {
      return "P^" + std::to_string(m.dim) + "(" +
             std::to_string(checked_pow(m.prime, m.exponent)) + ")";
    }
    std::string operator()(const Cone& c) const {
      std::string core = std::visit(
          [](const auto& x) { return V{}(x); }, c.core);
      return "C(" + core + ";" + tag_text(c.tag) + ";" +
             std::to_string(c.top_dim) + ")";
    }
    std::string operator()(const Bundle& b) const {
      return "M(" + std::to_string(b.rho) + ";" +
             std::to_string(checked_pow(3, b.nu)) + ")";
    }
  };
  return std::visit(V{}, a);
}

std::string render(const WedgeExpr& w) {
  if (w.empty()) return "*";
  std::string s;
  for (const Atom& a : w.atoms()) {
    if (!s.empty()) s += " v ";
    s += render(a);
  }
  return s;
}

namespace {

std::int64_t parse_int(std::string_view sv, const std::string& ctx) {
  std::int64_t value = 0;
  const char* first = sv.data();
  const char* last = sv.data() + sv.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("bad integer '" + std::string(sv) + "' in " + ctx);
  return value;
}

// Converts an expanded order k back to (p, e); throws unless k is an odd
// prime power.
std::pair<std::int64_t, int> prime_power(std::int64_t k, const std::string& ctx) {
  if (k < 3) throw ParseError("coefficient in " + ctx + " must be >= 3");
  auto f = factorize(k);
  if (f.size() != 1 || f[0].first == 2)
    throw ParseError("coefficient " + std::to_string(k) + " in " + ctx +
                     " is not an odd prime power");
  return f[0];
}

Atom parse_simple_atom(std::string_view t, const std::string& ctx);

Atom parse_cone(std::string_view t) {
  // C(core;tag;top)
  std::string_view inner = t.substr(2, t.size() - 3);
  auto first = inner.find(';');
  auto second = inner.rfind(';');
  if (first == std::string_view::npos || second == first)
    throw ParseError("cone atom needs C(core;tag;top): '" + std::string(t) + "'");
  std::string_view core_s = inner.substr(0, first);
  std::string_view tag_s = inner.substr(first + 1, second - first - 1);
  std::string_view top_s = inner.substr(second + 1);
  AttachTag tag;
  if (tag_s == "alpha")
    tag = AttachTag::alpha;
  else if (tag_s == "alpha~")
    tag = AttachTag::alpha_tilde;
  else if (tag_s == "i.alpha")
    tag = AttachTag::iota_alpha;
  else
    throw ParseError("unknown attaching tag '" + std::string(tag_s) + "'");
  Atom core = parse_simple_atom(core_s, "cone core");
  ConeCore cc;
  if (const auto* s = std::get_if<Sphere>(&core))
    cc = *s;
  else if (const auto* m = std::get_if<Moore>(&core))
    cc = *m;
  else
    throw ParseError("cone core must be a sphere or Moore space");
  Cone c{cc, tag, static_cast<int>(parse_int(top_s, "cone top dimension"))};
  check_cone(c);
  return c;
}

Atom parse_simple_atom(std::string_view t, const std::string& ctx) {
  if (t.size() >= 3 && t.substr(0, 2) == "S^")
    return Sphere{static_cast<int>(parse_int(t.substr(2), ctx))};
  if (t.size() >= 3 && t.substr(0, 2) == "P^") {
    auto open = t.find('(');
    if (open == std::string_view::npos || t.back() != ')')
      throw ParseError("Moore atom needs P^n(k): '" + std::string(t) + "'");
    int n = static_cast<int>(parse_int(t.substr(2, open - 2), ctx));
    std::int64_t k = parse_int(t.substr(open + 1, t.size() - open - 2), ctx);
    auto [p, e] = prime_power(k, ctx);
    return Moore{n, p, e};
  }
  throw ParseError("cannot parse atom '" + std::string(t) + "' in " + ctx);
}

Atom parse_atom(std::string_view t) {
  if (t.size() >= 4 && t.substr(0, 2) == "C(" && t.back() == ')')
    return parse_cone(t);
  if (t.size() >= 4 && t.substr(0, 2) == "M(" && t.back() == ')') {
    std::string_view inner = t.substr(2, t.size() - 3);
    auto semi = inner.find(';');
    if (semi == std::string_view::npos)
      throw ParseError("bundle atom needs M(rho;3^nu): '" + std::string(t) + "'");
    std::int64_t rho = parse_int(inner.substr(0, semi), "bundle rho");
    std::int64_t k = parse_int(inner.substr(semi + 1), "bundle order");
    auto [p, e] = prime_power(k, "bundle order");
    if (p != 3) throw ParseError("bundle torsion must be a power of 3");
    return Bundle{rho, e};
  }
  return parse_simple_atom(t, "wedge");
}

}  // namespace

WedgeExpr parse_wedge(const std::string& text) {
  if (text == "*") return WedgeExpr{};
  if (text.empty()) throw ParseError("empty wedge text; a point is '*'");
  std::vector<Atom> atoms;
  std::size_t pos = 0;
  for (;;) {
    auto next = text.find(" v ", pos);
    std::string_view tok(text.data() + pos,
                         (next == std::string::npos ? text.size() : next) - pos);
    if (tok.empty()) throw ParseError("empty atom in wedge text");
    atoms.push_back(parse_atom(tok));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return normalize(std::move(atoms));
}

Atom sphere(int n) {
  if (n < 3) throw ValidationError("spheres start at S^3");
  return Sphere{n};
}

Atom moore(int n, std::int64_t p, int e) {
  if (n < 3 || p < 3 || e < 1)
    throw ValidationError("moore() wants n >= 3, p >= 3, e >= 1");
  auto f = factorize(p);
  if (f.size() != 1 || f[0].second != 1)
    throw ValidationError("moore() wants a prime coefficient base");
  return Moore{n, p, e};
}

std::vector<Atom> moore_atoms(int n, const AbelianGroup& torsion) {
  if (torsion.free_rank != 0)
    throw ValidationError("moore_atoms needs a torsion group");
  std::vector<Atom> out;
  out.reserve(torsion.torsion.size());
  for (const auto& f : torsion.torsion)
    out.push_back(Moore{n, f.prime, f.exponent});
  return out;
}

Atom cone_alpha(int sphere_dim) {
  Cone c{Sphere{sphere_dim}, AttachTag::alpha, sphere_dim + 4};
  check_cone(c);
  return c;
}

Atom cone_alpha_tilde(int moore_dim, int exponent) {
  Cone c{Moore{moore_dim, 3, exponent}, AttachTag::alpha_tilde, moore_dim + 4};
  check_cone(c);
  return c;
}

Atom cone_iota_alpha(int moore_dim, int exponent) {
  Cone c{Moore{moore_dim, 3, exponent}, AttachTag::iota_alpha, moore_dim + 3};
  check_cone(c);
  return c;
}

Atom bundle(std::int64_t rho, int nu) {
  if (nu < 1) throw ValidationError("bundle needs nu >= 1");
  return Bundle{rho, nu};
}

}  // namespace susp7
