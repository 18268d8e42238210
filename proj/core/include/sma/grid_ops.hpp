#pragma once

#include "sma/types.hpp"

namespace sma {

SignedGrid negate(const SignedGrid& g);
SignedGrid transpose(const SignedGrid& g);

/// Moves every entry away from zero: v -> v + k*sign(v), k >= 0.
/// Grids containing 0 cannot be shifted.
SignedGrid shift_magnitudes(const SignedGrid& g, value_t k);

/// Maps column j to j + c (mod n); c may be negative.
SignedGrid permute_columns_cyclic(const SignedGrid& g, int c);

/// Copies src into dest at the given offset. Filled cells must land in
/// range and must not collide with dest's filled cells.
SignedGrid paste(const SignedGrid& dest, const SignedGrid& src,
                 int row_offset, int col_offset);

}  // namespace sma
