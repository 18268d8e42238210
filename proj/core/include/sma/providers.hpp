#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sma/catalog.hpp"
#include "sma/types.hpp"

namespace sma::providers {

struct SearchLimits {
  long long node_budget = 80'000'000;
  long long time_budget_ms = 60'000;
  int max_filled_cells = 14;  // oracle gate

  void require_valid() const {
    if (node_budget <= 0 || time_budget_ms <= 0 || max_filled_cells <= 0) {
      throw argument_error("search limits must be positive");
    }
  }
};

/// m x n array holding 0..mn-1 with constant row and column sums.
struct MagicRectangle {
  int m = 0;
  int n = 0;
  std::vector<std::vector<value_t>> grid;

  long long row_sum() const { return 1LL * n * (1LL * m * n - 1) / 2; }
  long long col_sum() const { return 1LL * m * (1LL * m * n - 1) / 2; }
  value_t w() const { return (m * n - 1) / 2; }

  GridFile to_grid_file() const;
  static MagicRectangle from_grid_file(const GridFile& gf);
};

struct HeffterGrid {
  ArraySpec spec;
  SignedGrid grid;
};

/// Magic rectangle provider. Odd orders only (the consumed family):
/// classical single-step construction for m = n, catalog hit or pruned
/// assignment search otherwise. Results are verified before return.
MagicRectangle magic_rectangle(int m, int n, const SearchLimits& limits = {},
                               Catalog* catalog = nullptr);

/// Tight integer m x n Heffter array, mn ≡ 0, 3 (mod 4), m, n >= 3.
HeffterGrid tight_heffter(int m, int n, const SearchLimits& limits = {},
                          Catalog* catalog = nullptr);

/// Square integer Heffter array H(n; k), 3 <= k <= n, nk ≡ 0, 3 (mod 4).
HeffterGrid square_heffter(int n, int k, const SearchLimits& limits = {},
                           Catalog* catalog = nullptr);

/// Catalog key the square Heffter provider would consult for H(m; t).
std::string square_heffter_lookup_key(int m, int t);

}  // namespace sma::providers

namespace sma {

/// Carries search limits and an optional catalog through construction
/// pipelines that may need provider ingredients.
struct BuildContext {
  providers::SearchLimits limits;
  Catalog* catalog = nullptr;
};

}  // namespace sma
