#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "susp7/snf.hpp"

using namespace susp7;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<std::int64_t>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntegerMatrix diagonal_matrix(int rows, int cols,
                              const std::vector<Integer>& d) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

void check_against_oracle(const IntegerMatrix& m) {
  const SmithResult s = smith_normal_form(m);
  // Divisibility chain, with zeros only at the tail.
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    if (s.diagonal[i] == 0)
      CHECK(s.diagonal[i + 1] == 0);
    else
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
  // Products of leading entries against gcds of minors.
  Integer product = 1;
  const int kmax = std::min(m.rows, m.cols);
  for (int k = 1; k <= kmax; ++k) {
    product *= s.diagonal[static_cast<std::size_t>(k - 1)];
    CHECK(product == oracle::gcd_of_k_minors(m, k));
  }
  // Transforms are unimodular and actually diagonalize m.
  const Integer dl = oracle::determinant(s.left);
  const Integer dr = oracle::determinant(s.right);
  CHECK((dl == 1 || dl == -1));
  CHECK((dr == 1 || dr == -1));
  CHECK(multiply(multiply(s.left, m), s.right) ==
        diagonal_matrix(m.rows, m.cols, s.diagonal));
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  SUBCASE("identity") {
    const SmithResult s = smith_normal_form(IntegerMatrix::identity(2));
    CHECK(s.diagonal == std::vector<Integer>{1, 1});
  }
  SUBCASE("[[2,4],[6,8]] has diagonal (2,4)") {
    const IntegerMatrix m = from_rows({{2, 4}, {6, 8}});
    const SmithResult s = smith_normal_form(m);
    CHECK(s.diagonal == std::vector<Integer>{2, 4});
    check_against_oracle(m);
  }
  SUBCASE("zero matrix") {
    const SmithResult s = smith_normal_form(IntegerMatrix(3, 3));
    CHECK(s.diagonal == std::vector<Integer>{0, 0, 0});
  }
  SUBCASE("antidiagonal with coprime entries") {
    const IntegerMatrix m = from_rows({{0, 5}, {3, 0}});
    const SmithResult s = smith_normal_form(m);
    CHECK(s.diagonal == std::vector<Integer>{1, 15});
    check_against_oracle(m);
  }
  SUBCASE("rectangular") {
    const IntegerMatrix m = from_rows({{2, 0, 4}, {0, 6, 0}});
    check_against_oracle(m);
  }
}

TEST_CASE("smith normal form against the minor-gcd oracle on random input") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<std::int64_t> entry(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (auto& v : m.entries) v = entry(rng);
    check_against_oracle(m);
  }
}

TEST_CASE("rank counts nonzero diagonal entries") {
  CHECK(rank_of(smith_normal_form(IntegerMatrix(3, 3))) == 0);
  CHECK(rank_of(smith_normal_form(IntegerMatrix::identity(3))) == 3);
  CHECK(rank_of(smith_normal_form(from_rows({{1, 2}, {2, 4}}))) == 1);
}

TEST_CASE("empty matrices have empty normal forms") {
  // Boundary maps of chain complexes routinely have zero cells on one side.
  const auto s = smith_normal_form(IntegerMatrix(0, 3));
  CHECK(s.diagonal.empty());
  CHECK(rank_of(s) == 0);
  CHECK(s.right == IntegerMatrix::identity(3));
  CHECK(smith_normal_form(IntegerMatrix(0, 0)).diagonal.empty());
}
