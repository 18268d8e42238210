#pragma once

#include <vector>

#include "sma/types.hpp"

namespace sma::squares {

/// Orthogonal-partition machinery for odd n >= t >= 3.
///
/// The symbol range [-(nt-1)/2, (nt-1)/2] splits into t blocks D_i of n
/// consecutive integers and, crosswise, into n column classes C_c of t
/// elements each summing to zero. The class assignment is linear per block:
/// the j-th element of D_i lies in C_c with c ≡ k_i·j + b_i (mod n), and
/// inversely j ≡ k'_i·c + b'_i (mod n). Row classes R_r pick, for each i,
/// the element of D_i in C_c with c ≡ r + s(i), s(i) = (n-1)/2·(i-1).
struct PartitionSystem {
  int n = 0;
  int t = 0;

  // j-th element of D_i (1-based) is delta[i-1] + j.
  std::vector<value_t> delta;

  // cls[i-1][j-1] = c and jmap[i-1][c-1] = j, both 1-based.
  std::vector<std::vector<int>> cls;
  std::vector<std::vector<int>> jmap;

  // Slopes and intercepts, 1-based by block: c ≡ k j + b, j ≡ k' c + b'.
  // k' is a small signed integer (1, 2 or -2), matching break bookkeeping.
  std::vector<int> k, b, k_inv, b_inv;

  // x_c residues of the t = 3 base layer.
  std::vector<int> x;

  bool rows_built = false;

  int s_shift(int i) const { return (((n - 1) / 2) * (i - 1)) % n; }

  value_t element(int i, int j) const { return delta[i - 1] + j; }
  int j_of(int i, int c) const { return jmap[i - 1][c - 1]; }
  int class_of(int i, int j) const { return cls[i - 1][j - 1]; }

  std::vector<value_t> column_class(int c) const;

  // Row-side accessors; odd_partition_rows must have run.
  int row_class_index(int r, int i) const;  // the c with R_r ∩ D_i ⊂ C_c
  int j_row(int i, int r) const;
  int beta(int i, int r) const;  // signed break magnitude between r, r+1
  std::vector<value_t> row_class(int r) const;
};

/// Builds blocks and column classes by the t = 3 base construction plus the
/// two-elements-per-class inductive completion, validating sizes and sums
/// at every intermediate fill count.
PartitionSystem odd_partition_columns(int n, int t);

/// Fills in the row-class structure (and validates zero row sums and the
/// balanced break table).
PartitionSystem odd_partition_rows(PartitionSystem system);

/// The t x n array whose rows are the D_i and whose columns are the C_c.
SignedGrid dc_array(const PartitionSystem& sys);

}  // namespace sma::squares
