#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "susp7/errors.hpp"
#include "susp7/wedge.hpp"

using namespace susp7;

TEST_CASE("normalize sorts, prunes and splits atoms") {
  SUBCASE("spheres sort by dimension") {
    const WedgeExpr w = normalize({sphere(6), sphere(3)});
    CHECK(render(w) == "S^3 v S^6");
  }
  SUBCASE("a Moore space on a trivial group is dropped") {
    const std::vector<Atom> none = moore_atoms(5, AbelianGroup{});
    CHECK(normalize(none).empty());
    CHECK(render(normalize(none)) == "*");
  }
  SUBCASE("composite coefficients split into prime powers") {
    const WedgeExpr w = normalize(moore_atoms(5, make_group(0, {{3, 2}, {5, 1}})));
    CHECK(render(w) == "P^5(9) v P^5(5)");
  }
  SUBCASE("composite raw Moore atom splits too") {
    const WedgeExpr w = normalize({Atom{Moore{5, 45, 1}}});
    CHECK(render(w) == "P^5(9) v P^5(5)");
  }
  SUBCASE("idempotent and order blind") {
    const std::vector<Atom> a = {cone_alpha(4), sphere(3), moore(4, 3, 1)};
    const std::vector<Atom> b = {moore(4, 3, 1), cone_alpha(4), sphere(3)};
    CHECK(normalize(a) == normalize(b));
    CHECK(normalize(normalize(a).atoms()) == normalize(a));
  }
}

TEST_CASE("suspension shifts every dimension once per step") {
  SUBCASE("spheres and Moore spaces") {
    const WedgeExpr w = normalize({sphere(3), moore(4, 3, 1)});
    CHECK(render(suspend(w, 1)) == "S^4 v P^5(3)");
  }
  SUBCASE("cone blocks keep their tags") {
    const WedgeExpr w = normalize({cone_alpha(4)});
    CHECK(render(suspend(w, 1)) == "C(S^5;alpha;9)");
  }
  SUBCASE("bundles must be rewritten before suspension") {
    const WedgeExpr w = normalize({bundle(1, 1)});
    CHECK_THROWS_AS(suspend(w, 1), UnsuspendableAtom);
  }
  SUBCASE("two single steps equal one double step") {
    const WedgeExpr w = normalize(
        {sphere(5), moore(4, 3, 2), cone_iota_alpha(5, 1), cone_alpha_tilde(4, 1)});
    CHECK(suspend(suspend(w, 1), 1) == suspend(w, 2));
  }
}

TEST_CASE("reduced homology of wedges") {
  SUBCASE("spheres and a Moore space") {
    const WedgeExpr w =
        normalize({sphere(3), sphere(6), moore(5, 3, 1), sphere(8)});
    const std::map<int, AbelianGroup> h = reduced_homology(w);
    REQUIRE(h.size() == 4);
    CHECK(h.at(3) == make_group(1, {}));
    CHECK(h.at(4) == make_group(0, {{3, 1}}));
    CHECK(h.at(6) == make_group(1, {}));
    CHECK(h.at(8) == make_group(1, {}));
  }
  SUBCASE("empty wedge") { CHECK(reduced_homology(WedgeExpr{}).empty()); }
  SUBCASE("three-cell block: pinned value and chain-complex oracle") {
    const WedgeExpr w = normalize({cone_alpha_tilde(4, 2)});
    const std::map<int, AbelianGroup> h = reduced_homology(w);
    REQUIRE(h.size() == 2);
    CHECK(h.at(3) == make_group(0, {{3, 2}}));
    CHECK(h.at(8) == make_group(1, {}));

    // The same complex as raw cellular chains: cells in degrees 3, 4, 8; the
    // 8-cell attaches into 7-skeleton = P^4(9), so its boundary map is zero.
    oracle::ChainComplex c;
    c.bottom = 3;
    c.ranks = {1, 1, 0, 0, 0, 1};
    IntegerMatrix d4(1, 1);
    d4.at(0, 0) = 9;
    c.boundaries = {d4, IntegerMatrix(1, 0), IntegerMatrix(0, 0),
                    IntegerMatrix(0, 0), IntegerMatrix(0, 1)};
    CHECK(oracle::homology_away_from_2(c) == h);
  }
  SUBCASE("homology of a suspension is the shift") {
    const WedgeExpr w = normalize(
        {sphere(4), moore(4, 5, 1), cone_alpha(5), cone_iota_alpha(6, 2)});
    std::map<int, AbelianGroup> shifted;
    for (const auto& [deg, g] : reduced_homology(w)) shifted[deg + 1] = g;
    CHECK(reduced_homology(suspend(w, 1)) == shifted);
  }
  SUBCASE("bundle atoms carry Z/3^nu and a top cell") {
    const std::map<int, AbelianGroup> h = reduced_homology(normalize({bundle(2, 2)}));
    REQUIRE(h.size() == 2);
    CHECK(h.at(3) == make_group(0, {{3, 2}}));
    CHECK(h.at(7) == make_group(1, {}));
  }
}

TEST_CASE("render and parse are inverse on canonical text") {
  const char* samples[] = {
      "S^3 v S^4 v P^5(3) v P^5(5) v S^5 v S^6 v S^8",
      "P^5(9) v C(P^5(3);i.alpha;8)",
      "P^4(9) v C(P^4(3);alpha~;8) v P^6(3) v P^6(9)",
      "C(S^4;alpha;8)",
      "M(1;3)",
      "*",
  };
  for (const char* text : samples) {
    const WedgeExpr w = parse_wedge(text);
    CHECK(render(w) == text);
  }
  // Multiplicity survives the round trip.
  const WedgeExpr twice = normalize({sphere(4), sphere(4)});
  CHECK(parse_wedge(render(twice)) == twice);
}

TEST_CASE("cone constructors enforce the attaching ranges") {
  CHECK_THROWS_AS(cone_alpha(3), ValidationError);        // needs n >= 4
  CHECK_THROWS_AS(cone_alpha_tilde(3, 1), ValidationError);
  CHECK_THROWS_AS(cone_iota_alpha(4, 1), ValidationError);  // needs n >= 5
  CHECK_THROWS_AS(cone_alpha_tilde(4, 0), ValidationError);
  CHECK_THROWS_AS(normalize({Atom{Cone{Sphere{4}, AttachTag::alpha, 7}}}),
                  ValidationError);  // top must be n+4
  CHECK_THROWS_AS(normalize({Atom{Cone{Moore{5, 5, 1}, AttachTag::iota_alpha, 8}}}),
                  ValidationError);  // only 3-primary cores carry alpha
  CHECK(render(normalize({cone_iota_alpha(5, 1)})) == "C(P^5(3);i.alpha;8)");
}

TEST_CASE("sphere and moore constructors reject low dimensions") {
  CHECK_THROWS_AS(sphere(2), ValidationError);
  CHECK_THROWS_AS(moore(2, 3, 1), ValidationError);
  CHECK_THROWS_AS(moore(4, 4, 1), ValidationError);  // base must be prime
}
