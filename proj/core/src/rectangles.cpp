#include "sma/rectangles.hpp"

#include "sma/decide.hpp"
#include "sma/grid_ops.hpp"
#include "sma/squares.hpp"
#include "sma/tight.hpp"

namespace sma::rects {

SignedGrid shiftable_sms(int m, int t, const BuildContext& ctx) {
  if (t % 2 != 0 || t < 4) {
    throw unsupported_params(
        "shiftable squares require even t >= 4 (odd t cannot balance signs)");
  }
  if (m < t) throw unsupported_params("shiftable SMS(m;t) requires m >= t");
  if (t == m) return tight::construct_even_even(m, m);
  SignedGrid g;
  int fill;
  if (t % 4 == 0) {
    g = squares::sms4_diagonal(m);
    fill = 4;
  } else if (m % 2 == 1) {
    g = squares::sms6_odd(m, ctx);
    fill = 6;
  } else if (m % 4 == 2) {
    g = squares::sms6_2mod4(m);
    fill = 6;
  } else {
    throw unsupported_params(
        "no shiftable base for t ≡ 2 (mod 4) with m ≡ 0 (mod 4)");
  }
  for (; fill < t; fill += 4) g = squares::add_four(g);
  return g;
}

SignedGrid sma_double_via_heffter(int m, int t, const BuildContext& ctx) {
  if (m < t || t < 3) throw argument_error("requires m >= t >= 3");
  if ((m * t) % 4 != 0 && (m * t) % 4 != 3) {
    throw unsupported_params("the Heffter route requires mt ≡ 0, 3 (mod 4)");
  }
  auto heffter = providers::square_heffter(m, t, ctx.limits, ctx.catalog);
  SignedGrid g(m, 2 * m);
  for (const auto& [rc, v] : heffter.grid.cells()) {
    g.set(rc.first, rc.second, v);
    g.set(rc.first, rc.second + m, -v);
  }
  g.meta.provider_key = providers::square_heffter_lookup_key(m, t);
  return g;
}

SignedGrid sma_double_via_shiftable(int m, int t, const BuildContext& ctx) {
  SignedGrid a = shiftable_sms(m, t, ctx);
  SignedGrid g(m, 2 * m);
  g = paste(g, a, 0, 0);
  g = paste(g, shift_magnitudes(a, m * t / 2), 0, m);
  g.meta.provider_key = a.meta.provider_key;
  return g;
}

SignedGrid construct_double_rectangle(int m, int t, const BuildContext& ctx) {
  const Decision d = decide_double_rectangle(m, t, ctx.catalog);
  if (d.verdict == Decision::Verdict::Unknown) {
    throw unsupported_params(
        "open case: existence of SMA(m,2m;2t,t) is unresolved for t ≡ " +
        std::to_string(t % 4) + ", m ≡ " + std::to_string(m % 4) +
        " (mod 4)");
  }
  SignedGrid g = d.method == "heffter" ? sma_double_via_heffter(m, t, ctx)
                                       : sma_double_via_shiftable(m, t, ctx);
  g.meta.method = d.method;
  return g;
}

}  // namespace sma::rects
