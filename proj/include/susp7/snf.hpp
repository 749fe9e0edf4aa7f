#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace susp7 {

using Integer = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  Integer& at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  const Integer& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  static IntegerMatrix identity(int n);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

struct SmithResult {
  // length min(rows, cols); non-negative; d1 | d2 | ... with zeros trailing
  std::vector<Integer> diagonal;
  IntegerMatrix left, right;  // unimodular; left * m * right is diagonal
};

// Pivot rule: minimal absolute value among nonzero candidates, ties broken by
// lowest (row, col). Deterministic for reproducible transforms.
SmithResult smith_normal_form(const IntegerMatrix& m);

int rank_of(const SmithResult& s);

}  // namespace susp7
