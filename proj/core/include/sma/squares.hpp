#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sma/diagonal_sequences.hpp"
#include "sma/partitions.hpp"
#include "sma/providers.hpp"
#include "sma/types.hpp"

namespace sma::squares {

/// SMS(n;t) for odd n >= t >= 3 by intersecting the row and column classes.
SignedGrid sms_odd_odd(int n, int t);

/// Shiftable diagonal SMS(n;4), n >= 4.
SignedGrid sms4_diagonal(int n);

/// Pastes a shifted, column-rotated SMS(n;4) band onto the four empty
/// diagonals following a k-diagonal SMS(n;t), k <= n-4, t or n even.
SignedGrid add_four(const SignedGrid& grid);

/// Shiftable 6-diagonal SMS(n;6) for odd n >= 7.
SignedGrid sms6_odd(int n, const BuildContext& ctx = {});

/// Shiftable diagonal SMS(n;t) for odd n > t > 3, t even.
SignedGrid sms_even_t_odd_n(int n, int t, const BuildContext& ctx = {});

/// SMS(n;t) from a tight (n/2) x t integer Heffter array; n, t even with
/// nt ≡ 0 (mod 8).
SignedGrid sms_via_heffter(int n, int t, const BuildContext& ctx = {});

/// Equal-sum triple classes P_1..P_n of [1, 3n] used by sms6_2mod4;
/// classes[i-1] is P_i in its placement order.
struct PairedPartition {
  int n = 0;
  std::vector<std::vector<value_t>> classes;
  std::vector<char> first_class;                // by label, 1-based offset 0
  std::vector<std::pair<int, int>> pairs;       // B_j as (i1, i2)
};

/// Ordered pairing override: pairs[j-1] = (i1, i2) with P_{i1} placed
/// positively in column 2j-1. pairs[0] must be (2, 1) and pairs[1] must
/// contain n.
struct PairingOverride {
  std::vector<std::pair<int, int>> pairs;
};

PairedPartition paired_partition(int n,
                                 const PairingOverride* pairing = nullptr);

/// Shiftable 7-diagonal SMS(n;6) for n ≡ 2 (mod 4), n >= 10.
SignedGrid sms6_2mod4(int n, const PairingOverride* pairing = nullptr);

/// SMS(n;t) for even n >= t > 3; (t+1)-diagonal when t < n and both are
/// ≡ 2 (mod 4).
SignedGrid sms_even_even(int n, int t, const BuildContext& ctx = {});

/// SMS(n;3) for even n >= 4 (no diagonal-width claim).
SignedGrid sms3_even(int n);

// Diagonal bases for odd fills.
SignedGrid sms3_diag(int n);        // n ≡ 0 (mod 4)
SignedGrid sms5_diag_0mod4(int n);  // n ≡ 0 (mod 4), n >= 8
SignedGrid sms5_diag_2mod4(int n);  // n ≡ 2 (mod 4), n >= 6
SignedGrid sms7_diag_2mod4(int n);  // n ≡ 2 (mod 4), n >= 10

/// SMS(n;t) for even n > t > 2, t odd; diagonal when t > 3 or 4 | n.
SignedGrid sms_odd_t_even_n(int n, int t);

/// Full dispatcher over the square existence characterization.
SignedGrid construct_sms(int n, int t, const BuildContext& ctx = {});

}  // namespace sma::squares
