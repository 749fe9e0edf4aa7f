#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "susp7/errors.hpp"
#include "susp7/reduce.hpp"

using namespace susp7;

namespace {

ReductionVector replay(ReductionVector v, const std::vector<Move>& witness) {
  for (const Move& m : witness) v = apply_move(v, m);
  return v;
}

int first_nonzero(const ReductionVector& v) {
  for (std::size_t i = 0; i < v.entries.size(); ++i)
    if (v.entries[i] != 0) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace

TEST_CASE("elementary moves") {
  SUBCASE("add_forward adds mod 3 into the later slot") {
    CHECK(add_forward(make_vector({1, 0}), 1, 2) == make_vector({1, 1}));
    CHECK(add_forward(make_vector({0, 2}), 1, 2) == make_vector({0, 2}));
    CHECK(add_forward(make_vector({2, 2}), 1, 2) == make_vector({2, 1}));
  }
  SUBCASE("backward and degenerate additions are illegal") {
    CHECK_THROWS_AS(add_forward(make_vector({1, 1}), 2, 1), IllegalDirection);
    CHECK_THROWS_AS(add_forward(make_vector({1, 1}), 1, 1), IllegalDirection);
    CHECK_THROWS_AS(add_forward(make_vector({1, 1}), 1, 3), ValidationError);
  }
  SUBCASE("scale by -1 negates one entry") {
    CHECK(scale(make_vector({2}), 1, -1) == make_vector({1}));
    CHECK(scale(make_vector({0}), 1, -1) == make_vector({0}));
    CHECK(scale(make_vector({1, 2}), 2, -1) == make_vector({1, 1}));
    CHECK(scale(make_vector({1, 2}), 2, 1) == make_vector({1, 2}));
    CHECK_THROWS_AS(scale(make_vector({1}), 1, 2), ValidationError);
  }
  SUBCASE("make_vector reduces mod 3") {
    CHECK(make_vector({4, -1, 3}) == make_vector({1, 2, 0}));
  }
}

TEST_CASE("canonical form") {
  SUBCASE("worked example with replayable witness") {
    const auto c = canonical_form(make_vector({0, 1, 2, 1}));
    CHECK(c.vector == make_vector({0, 1, 0, 0}));
    CHECK(c.pivot == 2);
    REQUIRE(c.witness.size() == 3);
    CHECK(render_move(c.witness[0]) == "add(2,3)");
    CHECK(render_move(c.witness[1]) == "add(2,4)");
    CHECK(render_move(c.witness[2]) == "add(2,4)");
    CHECK(replay(make_vector({0, 1, 2, 1}), c.witness) == c.vector);
  }
  SUBCASE("leading 2 is first negated") {
    const auto c = canonical_form(make_vector({2, 0, 1}));
    CHECK(c.vector == make_vector({1, 0, 0}));
    CHECK(c.pivot == 1);
    REQUIRE(!c.witness.empty());
    CHECK(render_move(c.witness[0]) == "neg(1)");
    CHECK(replay(make_vector({2, 0, 1}), c.witness) == c.vector);
  }
  SUBCASE("zero vector is a fixed point with no pivot") {
    const auto c = canonical_form(make_vector({0, 0, 0}));
    CHECK(c.vector == make_vector({0, 0, 0}));
    CHECK(!c.pivot.has_value());
    CHECK(c.witness.empty());
  }
  SUBCASE("idempotence") {
    const auto c = canonical_form(make_vector({1, 2, 2, 0, 1}));
    const auto again = canonical_form(c.vector);
    CHECK(again.vector == c.vector);
    CHECK(again.witness.empty());
  }
}

TEST_CASE("first nonzero position is invariant under legal moves") {
  std::mt19937 rng(4321);
  std::uniform_int_distribution<int> val(0, 2);
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> entries(static_cast<std::size_t>(len(rng)));
    for (int& e : entries) e = val(rng);
    ReductionVector v = make_vector(entries);
    const int pivot = first_nonzero(v);
    const int n = static_cast<int>(v.entries.size());
    for (int step = 0; step < 12; ++step) {
      std::uniform_int_distribution<int> pos(1, n);
      if (n >= 2 && val(rng) != 0) {
        int a = pos(rng), b = pos(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        v = add_forward(v, a, b);
      } else {
        v = scale(v, pos(rng), -1);
      }
      CHECK(first_nonzero(v) == pivot);
    }
    const auto c = canonical_form(v);
    CHECK(c.pivot.value_or(0) == pivot);
  }
}

TEST_CASE("canonical form is the least vector reachable by legal moves") {
  // Exhaustive over length 3 here; the acceptance suite covers length 5.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const ReductionVector v = make_vector({a, b, c});
        const auto canon = canonical_form(v);
        CHECK(canon.vector == oracle::least_reachable(v));
        CHECK(replay(v, canon.witness) == canon.vector);
      }
}
