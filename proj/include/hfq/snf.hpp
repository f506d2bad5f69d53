#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "hfq/errors.hpp"
#include "hfq/rational.hpp"

namespace hfq {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major

inline IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  std::vector<Int> out(m.size(), Int(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m[i][j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

// Smith normal form with the unimodular transforms retained:
//   left * M * right = diag(diagonal), with d_1 | d_2 | ... | d_r > 0.
// All arithmetic is arbitrary precision; transform entries can grow.
struct SmithDecomposition {
  IntMatrix left;             // rows x rows
  IntMatrix right;            // cols x cols
  std::vector<Int> diagonal;  // length min(rows, cols); zeros past the rank
  int rank = 0;
  int rows = 0;
  int cols = 0;
};

inline SmithDecomposition smith_decompose(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  SmithDecomposition out;
  out.rows = rows;
  out.cols = cols;
  out.left = identity_matrix(rows);
  out.right = identity_matrix(cols);
  out.diagonal.assign(std::min(rows, cols), Int(0));
  if (rows == 0 || cols == 0) return out;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    std::swap(out.left[i], out.left[j]);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(out.right[r][i], out.right[r][j]);
  };
  auto row_addmul = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols; ++c) m[dst][c] += q * m[src][c];
    for (int c = 0; c < rows; ++c) out.left[dst][c] += q * out.left[src][c];
  };
  auto col_addmul = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < rows; ++r) m[r][dst] += q * m[r][src];
    for (int r = 0; r < cols; ++r) out.right[r][dst] += q * out.right[r][src];
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) m[i][c] = -m[i][c];
    for (int c = 0; c < rows; ++c) out.left[i][c] = -out.left[i][c];
  };

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pi == -1 || mpz_cmpabs(m[i][j].get_mpz_t(), m[pi][pj].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;  // trailing submatrix is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool restart = false;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_addmul(i, t, -Int(m[i][t] / m[t][t]));
        if (m[i][t] != 0) {  // nonzero remainder: strictly smaller pivot
          swap_rows(t, i);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_addmul(j, t, -Int(m[t][j] / m[t][t]));
        if (m[t][j] != 0) {
          swap_cols(t, j);
          restart = true;
          break;
        }
      }
      if (restart) continue;

      // Divisibility chain: fold a violating row into the pivot row and redo.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_addmul(t, i, Int(1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (m[t][t] < 0) negate_row(t);
    out.diagonal[t] = m[t][t];
    out.rank = t + 1;
  }
  return out;
}

}  // namespace hfq
