#pragma once

#include "sma/providers.hpp"
#include "sma/types.hpp"

namespace sma::tight {

/// Tight m x n signed magic array, dispatching on the parity table. Errors
/// with the violated condition when no tight array exists.
SignedGrid construct_tight(int m, int n, const BuildContext& ctx = {});

SignedGrid construct_2xn(int n);                 // n ≡ 0, 3 (mod 4)
SignedGrid construct_even_even(int m, int n);    // shiftable; m, n even > 2
SignedGrid construct_odd_odd(int m, int n, const BuildContext& ctx = {});
SignedGrid construct_3xeven(int n);              // n even >= 2
SignedGrid construct_5xeven(int n);              // n even > 2
SignedGrid construct_odd_even(int m, int n);     // m odd > 1, n even > 2

}  // namespace sma::tight
