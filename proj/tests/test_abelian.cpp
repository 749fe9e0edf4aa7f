#include <doctest.h>

#include "susp7/abelian.hpp"
#include "susp7/errors.hpp"

using namespace susp7;

TEST_CASE("localization drops 2-primary torsion and splits composites") {
  SUBCASE("Z + Z/12 keeps the free part and the 3-part") {
    RawGroup raw;
    raw.free_rank = 1;
    raw.factors = {{12, 1}};
    std::vector<std::string> warnings;
    const AbelianGroup g = localize_away_from_2(raw, &warnings);
    CHECK(g == make_group(1, {{3, 1}}));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("2-primary") != std::string::npos);
  }
  SUBCASE("pure 2-torsion vanishes") {
    RawGroup raw;
    raw.factors = {{8, 1}};
    CHECK(localize_away_from_2(raw).is_trivial());
  }
  SUBCASE("Z/45 splits into prime powers") {
    RawGroup raw;
    raw.factors = {{45, 1}};
    CHECK(localize_away_from_2(raw) == make_group(0, {{3, 2}, {5, 1}}));
  }
  SUBCASE("idempotent on already-localized data") {
    RawGroup raw;
    raw.free_rank = 2;
    raw.factors = {{45, 1}, {7, 2}};
    const AbelianGroup once = localize_away_from_2(raw);
    RawGroup again;
    again.free_rank = once.free_rank;
    for (const auto& f : once.torsion)
      again.factors.push_back({f.prime, f.exponent});
    CHECK(localize_away_from_2(again) == once);
  }
}

TEST_CASE("primary part splits a group by one prime") {
  const AbelianGroup g = make_group(0, {{3, 1}, {5, 2}});
  const auto [at3, away3] = primary_part(g, 3);
  CHECK(at3 == make_group(0, {{3, 1}}));
  CHECK(away3 == make_group(0, {{5, 2}}));
  CHECK(direct_sum(at3, away3) == g);

  const auto [t, u] = primary_part(AbelianGroup{}, 3);
  CHECK(t.is_trivial());
  CHECK(u.is_trivial());

  const AbelianGroup pure3 = make_group(0, {{3, 1}, {3, 2}});
  const auto [all, none] = primary_part(pure3, 3);
  CHECK(all == pure3);
  CHECK(none.is_trivial());
}

TEST_CASE("cyclic summand surgery removes exactly one factor") {
  const AbelianGroup g = make_group(0, {{3, 1}, {3, 1}, {3, 2}});
  const AbelianGroup cut = remove_cyclic_summand(g, 3, 1);
  CHECK(cut == make_group(0, {{3, 1}, {3, 2}}));
  CHECK(insert_cyclic_summand(cut, 3, 1) == g);

  CHECK(remove_cyclic_summand(make_group(0, {{3, 2}}), 3, 2).is_trivial());
  CHECK_THROWS_AS(remove_cyclic_summand(make_group(0, {{5, 1}}), 3, 1),
                  MissingSummand);
}

TEST_CASE("groups render compactly") {
  CHECK(render_group(AbelianGroup{}) == "0");
  CHECK(render_group(make_group(1, {})) == "Z");
  CHECK(render_group(make_group(2, {{3, 2}, {5, 1}})) == "Z^2 + Z/9 + Z/5");
}

TEST_CASE("make_group sorts and validates") {
  const AbelianGroup g = make_group(0, {{5, 1}, {3, 2}, {3, 1}});
  REQUIRE(g.torsion.size() == 3);
  CHECK(g.torsion[0] == TorsionFactor{3, 1});
  CHECK(g.torsion[1] == TorsionFactor{3, 2});
  CHECK(g.torsion[2] == TorsionFactor{5, 1});
  CHECK_THROWS_AS(make_group(-1, {}), ValidationError);
  CHECK_THROWS_AS(make_group(0, {{2, 1}}), ValidationError);
  CHECK_THROWS_AS(make_group(0, {{3, 0}}), ValidationError);
}

TEST_CASE("primary exponents come out ascending") {
  const AbelianGroup g = make_group(0, {{3, 2}, {3, 1}, {5, 3}});
  CHECK(primary_exponents(g, 3) == std::vector<int>{1, 2});
  CHECK(primary_exponents(g, 5) == std::vector<int>{3});
  CHECK(primary_exponents(g, 7).empty());
}

TEST_CASE("integer helpers stay exact") {
  const auto f = factorize(45);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<std::int64_t, int>{3, 2});
  CHECK(f[1] == std::pair<std::int64_t, int>{5, 1});
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(3, 60), Error);
}
