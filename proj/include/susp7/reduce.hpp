#pragma once

#include <optional>
#include <string>
#include <vector>

namespace susp7 {

// Row vector over Z/3, indexed 1..n by a position list already sorted weakly
// by the ambient order, so a move is legal exactly when it points forward.
struct ReductionVector {
  std::vector<int> entries;  // values 0..2
  friend bool operator==(const ReductionVector&, const ReductionVector&) = default;
};

struct Move {
  enum class Kind { add_forward, negate };
  Kind kind = Kind::add_forward;
  int a = 0;
  int b = 0;  // unused for negate
  friend bool operator==(const Move&, const Move&) = default;
};

std::string render_move(const Move& m);  // "add(1,3)" / "neg(2)"

ReductionVector make_vector(std::vector<int> entries);  // reduces mod 3

// entry b += entry a, requires a < b (IllegalDirection otherwise).
ReductionVector add_forward(const ReductionVector& v, int a, int b);
// entry a *= unit, unit = +1 or -1.
ReductionVector scale(const ReductionVector& v, int a, int unit);
ReductionVector apply_move(const ReductionVector& v, const Move& m);

struct CanonicalForm {
  ReductionVector vector;
  std::vector<Move> witness;  // legal moves taking the input to `vector`
  std::optional<int> pivot;   // first nonzero position; nullopt when zero
};

// Zero maps to zero; anything else to the basis vector e_t, t = first nonzero
// position (invariant under all legal moves).
CanonicalForm canonical_form(const ReductionVector& v);

}  // namespace susp7
