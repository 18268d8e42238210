#pragma once

#include <vector>

#include "sma/types.hpp"

namespace sma::squares {

/// Sequence families used by the diagonal square constructions for odd fill
/// t in {3, 5, 7}. The t sequences of length n jointly cover the symbol set
/// once, and the per-column (S_i) and per-row (S'_i) window sums vanish.
struct DiagonalSequences {
  int n = 0;
  int t = 0;
  std::vector<std::vector<value_t>> seq;  // a, b, c [, d, e [, f, g]]

  value_t at(int which, int i) const {  // cyclic, 1-based i
    int idx = (i - 1) % n;
    if (idx < 0) idx += n;
    return seq[which][idx];
  }
  long long window_sum_S(int i) const;
  long long window_sum_S_prime(int i) const;
};

DiagonalSequences diag_sequences3(int n);  // n ≡ 0 (mod 4), n >= 4
DiagonalSequences diag_sequences5(int n);  // n ≡ 0 (mod 4), n >= 8
DiagonalSequences diag_sequences7(int n);  // n ≡ 2 (mod 4), n >= 10

}  // namespace sma::squares
