#include "sma/verify.hpp"

#include <algorithm>

namespace sma {

int diagonal_width(const SignedGrid& grid) {
  if (grid.rows() != grid.cols()) {
    throw argument_error("diagonal width is defined for square grids only");
  }
  const int n = grid.rows();
  if (grid.filled() == 0) return 0;
  std::vector<char> present(n, 0);
  for (const auto& [rc, v] : grid.cells()) {
    (void)v;
    present[diagonal_residue(rc.first, rc.second, n)] = 1;
  }
  int best = n;
  for (int start = 0; start < n; ++start) {
    if (!present[start]) continue;
    int width = 1;
    for (int d = 0; d < n; ++d) {
      if (!present[d]) continue;
      width = std::max(width, (d - start + n) % n + 1);
    }
    best = std::min(best, width);
  }
  return best;
}

VerificationReport verify(const SignedGrid& grid, const ArraySpec& spec) {
  spec.require_valid();
  if (grid.rows() != spec.m || grid.cols() != spec.n) {
    throw argument_error("grid dimensions do not match spec");
  }

  VerificationReport rep;
  rep.row_sums.assign(spec.m, 0);
  rep.col_sums.assign(spec.n, 0);
  rep.row_fill_counts.assign(spec.m, 0);
  rep.col_fill_counts.assign(spec.n, 0);

  std::vector<int> row_pos(spec.m, 0), row_neg(spec.m, 0);
  std::vector<int> col_pos(spec.n, 0), col_neg(spec.n, 0);
  std::vector<value_t> entries;
  entries.reserve(grid.filled());

  for (const auto& [rc, v] : grid.cells()) {
    const int r = rc.first - 1, c = rc.second - 1;
    rep.row_sums[r] += v;
    rep.col_sums[c] += v;
    rep.row_fill_counts[r]++;
    rep.col_fill_counts[c]++;
    if (v > 0) {
      row_pos[r]++;
      col_pos[c]++;
    } else if (v < 0) {
      row_neg[r]++;
      col_neg[c]++;
    }
    entries.push_back(v);
  }

  std::sort(entries.begin(), entries.end());
  rep.symbol_coverage_ok = entries == symbol_set(spec).ascending();

  bool sums_ok = true, fills_ok = true;
  for (int r = 0; r < spec.m; ++r) {
    sums_ok = sums_ok && rep.row_sums[r] == 0;
    fills_ok = fills_ok && rep.row_fill_counts[r] == spec.s;
  }
  for (int c = 0; c < spec.n; ++c) {
    sums_ok = sums_ok && rep.col_sums[c] == 0;
    fills_ok = fills_ok && rep.col_fill_counts[c] == spec.t;
  }
  rep.is_valid_sma = sums_ok && fills_ok && rep.symbol_coverage_ok;

  rep.is_shiftable = true;
  for (int r = 0; r < spec.m; ++r) {
    rep.is_shiftable = rep.is_shiftable && row_pos[r] == row_neg[r];
  }
  for (int c = 0; c < spec.n; ++c) {
    rep.is_shiftable = rep.is_shiftable && col_pos[c] == col_neg[c];
  }

  if (spec.m == spec.n) rep.diagonal_width = diagonal_width(grid);
  return rep;
}

}  // namespace sma
