#pragma once

#include <optional>
#include <vector>

#include "sma/types.hpp"

namespace sma {

/// Full audit of a grid against a spec. `is_valid_sma` holds exactly when
/// all row and column sums are zero, fill counts match s and t, and the
/// entry multiset equals the required symbol set.
struct VerificationReport {
  bool is_valid_sma = false;
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  std::vector<int> row_fill_counts;
  std::vector<int> col_fill_counts;
  bool symbol_coverage_ok = false;
  bool is_shiftable = false;
  std::optional<int> diagonal_width;  // present only for square grids
};

VerificationReport verify(const SignedGrid& grid, const ArraySpec& spec);

/// Smallest k such that all filled cells lie on k consecutive broken
/// diagonals (residues (j - i) mod n). 0 for an empty grid. Square grids
/// only.
int diagonal_width(const SignedGrid& grid);

}  // namespace sma
