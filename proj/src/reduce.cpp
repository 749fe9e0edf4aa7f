#include "susp7/reduce.hpp"

#include "susp7/errors.hpp"

namespace susp7 {

std::string render_move(const Move& m) {
  if (m.kind == Move::Kind::negate) return "neg(" + std::to_string(m.a) + ")";
  return "add(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

ReductionVector make_vector(std::vector<int> entries) {
  for (int& v : entries) v = ((v % 3) + 3) % 3;
  return ReductionVector{std::move(entries)};
}

namespace {

void check_position(const ReductionVector& v, int a) {
  if (a < 1 || a > static_cast<int>(v.entries.size()))
    throw ValidationError("position " + std::to_string(a) + " out of range");
}

}  // namespace

ReductionVector add_forward(const ReductionVector& v, int a, int b) {
  check_position(v, a);
  check_position(v, b);
  if (a >= b)
    throw IllegalDirection("add_forward needs a < b; the chain maps only "
                           "point toward larger radii");
  ReductionVector out = v;
  out.entries[b - 1] = (out.entries[b - 1] + out.entries[a - 1]) % 3;
  return out;
}

ReductionVector scale(const ReductionVector& v, int a, int unit) {
  check_position(v, a);
  if (unit != 1 && unit != -1)
    throw ValidationError("scale unit must be +1 or -1");
  ReductionVector out = v;
  if (unit == -1) out.entries[a - 1] = (3 - out.entries[a - 1]) % 3;
  return out;
}

ReductionVector apply_move(const ReductionVector& v, const Move& m) {
  if (m.kind == Move::Kind::negate) return scale(v, m.a, -1);
  return add_forward(v, m.a, m.b);
}

CanonicalForm canonical_form(const ReductionVector& v) {
  CanonicalForm out;
  int t = 0;
  for (std::size_t i = 0; i < v.entries.size(); ++i)
    if (v.entries[i] != 0) {
      t = static_cast<int>(i) + 1;
      break;
    }
  if (t == 0) {
    out.vector = v;  // zero vector is already canonical
    return out;
  }
  out.pivot = t;
  ReductionVector cur = v;
  if (cur.entries[t - 1] == 2) {
    Move m{Move::Kind::negate, t, 0};
    cur = apply_move(cur, m);
    out.witness.push_back(m);
  }
  // Pivot entry is 1 now; clear each later entry by adding it forward once or
  // twice (order 3 makes subtraction two additions).
  for (int j = t + 1; j <= static_cast<int>(cur.entries.size()); ++j) {
    int need = (3 - cur.entries[j - 1]) % 3;
    for (int k = 0; k < need; ++k) {
      Move m{Move::Kind::add_forward, t, j};
      cur = apply_move(cur, m);
      out.witness.push_back(m);
    }
  }
  out.vector = std::move(cur);
  return out;
}

}  // namespace susp7
