#pragma once

#include "sma/providers.hpp"
#include "sma/types.hpp"

namespace sma::rects {

/// Shiftable SMS(m;t): exists iff t is even with m >= t >= 4.
SignedGrid shiftable_sms(int m, int t, const BuildContext& ctx = {});

/// SMA(m,2m;2t,t) as [A | -A] for a square Heffter array A = H(m;t);
/// requires mt ≡ 0, 3 (mod 4).
SignedGrid sma_double_via_heffter(int m, int t, const BuildContext& ctx = {});

/// SMA(m,2m;2t,t) as [A | A'] where A' moves every entry of a shiftable
/// SMS(m;t) away from zero by mt/2; requires even t >= 4.
SignedGrid sma_double_via_shiftable(int m, int t,
                                    const BuildContext& ctx = {});

/// Dispatches on decide_double_rectangle's method tag.
SignedGrid construct_double_rectangle(int m, int t,
                                      const BuildContext& ctx = {});

}  // namespace sma::rects
