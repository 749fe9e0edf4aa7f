#include <doctest.h>

#include <random>

#include "susp7/errors.hpp"
#include "susp7/invariants.hpp"
#include "susp7/sampler.hpp"

using namespace susp7;

namespace {

RawDescriptor raw_of(std::int64_t r, std::int64_t d,
                     std::vector<std::pair<std::int64_t, std::int64_t>> h,
                     std::vector<std::pair<std::int64_t, std::int64_t>> t,
                     std::vector<std::int64_t> wu) {
  RawDescriptor raw;
  raw.r = r;
  raw.d = d;
  raw.h2_torsion.factors = std::move(h);
  raw.h3_torsion.factors = std::move(t);
  raw.wu = std::move(wu);
  return raw;
}

}  // namespace

TEST_CASE("descriptor validation") {
  SUBCASE("homogeneous-space style input with pairing") {
    const ManifoldDescriptor m = validate(raw_of(1, 0, {}, {{3, 1}}, {1}));
    CHECK(m.r == 1);
    CHECK(m.h3_torsion == make_group(0, {{3, 1}}));
    CHECK(m.wu == std::vector<int>{1});
  }
  SUBCASE("sphere-like empty input") {
    const ManifoldDescriptor m = validate(raw_of(0, 0, {}, {}, {}));
    CHECK(m.h2_torsion.is_trivial());
    CHECK(m.wu.empty());
  }
  SUBCASE("wu length must count 3-primary slots of H, d, and of T") {
    CHECK_THROWS_AS(validate(raw_of(1, 1, {{9, 1}}, {}, {0})),
                    WuLengthMismatch);  // expects length 2
    CHECK_NOTHROW(validate(raw_of(1, 1, {{9, 1}}, {}, {0, 0})));
  }
  SUBCASE("negative ranks are rejected") {
    CHECK_THROWS_AS(validate(raw_of(-1, 0, {}, {}, {})), NegativeRank);
    CHECK_THROWS_AS(validate(raw_of(0, -2, {}, {}, {})), NegativeRank);
  }
  SUBCASE("2-torsion is dropped with a warning and shrinks no 3-slots") {
    std::vector<std::string> warnings;
    const ManifoldDescriptor m =
        validate(raw_of(0, 0, {{12, 1}}, {}, {0}), &warnings);
    CHECK(m.h2_torsion == make_group(0, {{3, 1}}));
    CHECK(warnings.size() == 1);
  }
  SUBCASE("free rank inside H or T is rejected") {
    RawDescriptor raw = raw_of(0, 0, {}, {}, {});
    raw.h2_torsion.free_rank = 1;
    CHECK_THROWS_AS(validate(raw), ValidationError);
  }
  SUBCASE("wu entries are reduced mod 3") {
    const ManifoldDescriptor m = validate(raw_of(0, 2, {}, {}, {4, -1}));
    CHECK(m.wu == std::vector<int>{1, 2});
  }
  SUBCASE("re-validation is the identity on valid data") {
    const ManifoldDescriptor m =
        validate(raw_of(2, 1, {{3, 1}, {5, 1}}, {{3, 2}}, {1, 0, 2}));
    CHECK(validate(to_raw(m)) == m);
  }
}

TEST_CASE("summand list order and radii") {
  SUBCASE("H ascending, free slots, then T descending") {
    const ManifoldDescriptor m =
        validate(raw_of(0, 1, {{3, 1}, {9, 1}}, {{3, 1}}, {0, 0, 0, 0}));
    const auto s = summand_list(m);
    REQUIRE(s.size() == 4);
    CHECK(s[0].kind == SummandKind::h_part);
    CHECK(s[0].exponent == 1);
    CHECK(s[0].radius == Radius::negative(1));
    CHECK(s[1].kind == SummandKind::h_part);
    CHECK(s[1].exponent == 2);
    CHECK(s[1].radius == Radius::negative(2));
    CHECK(s[2].kind == SummandKind::free_part);
    CHECK(s[2].radius == Radius::zero());
    CHECK(s[3].kind == SummandKind::t_part);
    CHECK(s[3].exponent == 1);
    CHECK(s[3].radius == Radius::positive(1));
  }
  SUBCASE("empty descriptor gives an empty list") {
    CHECK(summand_list(validate(raw_of(3, 0, {}, {}, {}))).empty());
  }
  SUBCASE("T exponents come out descending") {
    const ManifoldDescriptor m =
        validate(raw_of(0, 0, {}, {{3, 1}, {27, 1}}, {0, 0}));
    const auto s = summand_list(m);
    REQUIRE(s.size() == 2);
    CHECK(s[0].exponent == 3);
    CHECK(s[0].radius == Radius::positive(3));
    CHECK(s[1].exponent == 1);
    CHECK(s[1].radius == Radius::positive(1));
  }
  SUBCASE("only 3-primary torsion occupies slots") {
    const ManifoldDescriptor m =
        validate(raw_of(0, 0, {{5, 2}}, {{7, 1}}, {}));
    CHECK(summand_list(m).empty());
  }
}

TEST_CASE("radius ordering follows the rational values") {
  CHECK(Radius::negative(1) < Radius::negative(2));
  CHECK(Radius::negative(2) < Radius::zero());
  CHECK(Radius::zero() < Radius::positive(3));
  CHECK(Radius::positive(3) < Radius::positive(1));
  CHECK(Radius::negative(2) == Radius::negative(2));
  CHECK(render_radius(Radius::negative(1)) == "-1");
  CHECK(render_radius(Radius::negative(2)) == "-1/2");
  CHECK(render_radius(Radius::zero()) == "0");
  CHECK(render_radius(Radius::positive(3)) == "1/3");
  CHECK(render_radius(Radius::positive(1)) == "1");
}

TEST_CASE("p1 index and radius") {
  SUBCASE("vanishing pairing") {
    const ManifoldDescriptor m = validate(raw_of(0, 1, {}, {}, {0}));
    CHECK(!p1_index(m).has_value());
    CHECK(!p1_radius(m).has_value());
  }
  SUBCASE("first nonzero entry wins") {
    const ManifoldDescriptor m = validate(raw_of(0, 3, {}, {}, {0, 0, 1}));
    CHECK(p1_index(m) == 3);
    const ManifoldDescriptor m2 = validate(raw_of(0, 2, {}, {}, {1, 1}));
    CHECK(p1_index(m2) == 1);
  }
  SUBCASE("radius reads the indexed summand") {
    const ManifoldDescriptor a = validate(raw_of(0, 0, {{9, 1}}, {}, {2}));
    CHECK(p1_radius(a) == Radius::negative(2));
    const ManifoldDescriptor b = validate(raw_of(0, 1, {}, {{3, 1}}, {0, 1}));
    CHECK(p1_radius(b) == Radius::positive(1));
  }
}

TEST_CASE("sampled descriptors satisfy the structural properties") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const ManifoldDescriptor m = random_descriptor(rng);
    const auto s = summand_list(m);
    CHECK(s.size() == m.wu.size());
    for (std::size_t t = 1; t < s.size(); ++t) {
      CHECK(s[t - 1].radius <= s[t].radius);
      CHECK(s[t].position == static_cast<int>(t) + 1);
    }
    if (const auto idx = p1_index(m)) {
      CHECK(p1_radius(m) == s[static_cast<std::size_t>(*idx) - 1].radius);
      if (p1_radius(m) == Radius::zero()) CHECK(m.d >= 1);
    }
    CHECK(validate(to_raw(m)) == m);
  }
}
