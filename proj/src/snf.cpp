#include "susp7/snf.hpp"

#include <cstdlib>
#include <utility>

#include "susp7/errors.hpp"

namespace susp7 {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix shape mismatch in multiply");
  IntegerMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

namespace {

void swap_rows(IntegerMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntegerMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row i -= q * row s
void row_axpy(IntegerMatrix& m, int i, int s, const Integer& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(s, c);
}

void col_axpy(IntegerMatrix& m, int j, int s, const Integer& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, s);
}

void add_row(IntegerMatrix& m, int dst, int src) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += m.at(src, c);
}

void negate_row(IntegerMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Minimal |value| among nonzero entries of the trailing block, ties broken by
// lowest (row, col): the row-major scan keeps the first minimum it sees.
bool find_pivot(const IntegerMatrix& m, int s, int& pr, int& pc) {
  bool found = false;
  Integer best;
  for (int i = s; i < m.rows; ++i)
    for (int j = s; j < m.cols; ++j) {
      const Integer& v = m.at(i, j);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& input) {
  if (input.rows < 0 || input.cols < 0)
    throw ValidationError("matrix dimensions must be non-negative");
  IntegerMatrix m = input;
  IntegerMatrix left = IntegerMatrix::identity(m.rows);
  IntegerMatrix right = IntegerMatrix::identity(m.cols);
  const int steps = std::min(m.rows, m.cols);

  for (int s = 0; s < steps; ++s) {
    for (;;) {
      int pr, pc;
      if (!find_pivot(m, s, pr, pc)) goto done;  // trailing block is zero
      swap_rows(m, s, pr);
      swap_rows(left, s, pr);
      swap_cols(m, s, pc);
      swap_cols(right, s, pc);

      // Clear column s and row s by division with remainder; minimal pivots
      // keep this loop short.
      bool reduced = true;
      for (int i = s + 1; i < m.rows; ++i) {
        Integer q = m.at(i, s) / m.at(s, s);
        row_axpy(m, i, s, q);
        row_axpy(left, i, s, q);
        if (m.at(i, s) != 0) reduced = false;
      }
      for (int j = s + 1; j < m.cols; ++j) {
        Integer q = m.at(s, j) / m.at(s, s);
        col_axpy(m, j, s, q);
        col_axpy(right, j, s, q);
        if (m.at(s, j) != 0) reduced = false;
      }
      if (!reduced) continue;  // remainders became the new smaller candidates

      // Divisibility fix: fold a non-multiple into the pivot row and retry.
      bool divides = true;
      for (int i = s + 1; i < m.rows && divides; ++i)
        for (int j = s + 1; j < m.cols && divides; ++j)
          if (m.at(i, j) % m.at(s, s) != 0) {
            add_row(m, s, i);
            add_row(left, s, i);
            divides = false;
          }
      if (divides) break;
    }
    if (m.at(s, s) < 0) {
      negate_row(m, s);
      negate_row(left, s);
    }
  }
done:
  SmithResult out;
  out.diagonal.resize(steps);
  for (int s = 0; s < steps; ++s) {
    Integer v = m.at(s, s);
    out.diagonal[s] = v < 0 ? Integer(-v) : v;
  }
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

int rank_of(const SmithResult& s) {
  int r = 0;
  for (const auto& d : s.diagonal)
    if (d != 0) ++r;
  return r;
}

}  // namespace susp7
