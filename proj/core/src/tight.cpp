#include "sma/tight.hpp"

#include <algorithm>
#include <string>

#include "sma/decide.hpp"
#include "sma/grid_ops.hpp"

namespace sma::tight {

namespace {

// The shiftable 2 x 4 block (1,-2,-3,4 / -1,2,3,-4) shifted by s, placed
// with its top-left corner at (r0, c0).
void place_block_2x4(SignedGrid& g, int r0, int c0, value_t s) {
  const value_t v[4] = {static_cast<value_t>(s + 1), static_cast<value_t>(s + 2),
                        static_cast<value_t>(s + 3), static_cast<value_t>(s + 4)};
  g.set(r0, c0, v[0]);
  g.set(r0, c0 + 1, -v[1]);
  g.set(r0, c0 + 2, -v[2]);
  g.set(r0, c0 + 3, v[3]);
  g.set(r0 + 1, c0, -v[0]);
  g.set(r0 + 1, c0 + 1, v[1]);
  g.set(r0 + 1, c0 + 2, v[2]);
  g.set(r0 + 1, c0 + 3, -v[3]);
}

// Its transpose: a 4 x 2 block.
void place_block_4x2(SignedGrid& g, int r0, int c0, value_t s) {
  g.set(r0, c0, static_cast<value_t>(s + 1));
  g.set(r0, c0 + 1, static_cast<value_t>(-(s + 1)));
  g.set(r0 + 1, c0, static_cast<value_t>(-(s + 2)));
  g.set(r0 + 1, c0 + 1, static_cast<value_t>(s + 2));
  g.set(r0 + 2, c0, static_cast<value_t>(-(s + 3)));
  g.set(r0 + 2, c0 + 1, static_cast<value_t>(s + 3));
  g.set(r0 + 3, c0, static_cast<value_t>(s + 4));
  g.set(r0 + 3, c0 + 1, static_cast<value_t>(-(s + 4)));
}

SignedGrid from_rows(std::initializer_list<std::initializer_list<value_t>> rows) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.begin()->size());
  SignedGrid g(m, n);
  int r = 1;
  for (const auto& row : rows) {
    int c = 1;
    for (value_t v : row) g.set(r, c++, v);
    ++r;
  }
  return g;
}

SignedGrid base_4x4() {
  return from_rows({{1, -2, -3, 4}, {-1, 2, 3, -4}, {5, -6, -7, 8},
                    {-5, 6, 7, -8}});
}

SignedGrid base_4x6() {
  return from_rows({{1, -2, -3, 4, 9, -9},
                    {-1, 2, 3, -4, -10, 10},
                    {5, -6, -7, 8, -11, 11},
                    {-5, 6, 7, -8, 12, -12}});
}

SignedGrid base_6x6() {
  return from_rows({{6, -4, -12, -3, 2, 11},
                    {-13, 15, 16, 7, -8, -17},
                    {10, -18, -5, -14, 18, 9},
                    {-9, 1, 14, 5, -1, -10},
                    {17, 8, -16, -7, -15, 13},
                    {-11, -2, 3, 12, 4, -6}});
}

}  // namespace

SignedGrid construct_2xn(int n) {
  if (n < 3 || (n % 4 != 0 && n % 4 != 3)) {
    throw unsupported_params("a tight 2xn array requires n ≡ 0, 3 (mod 4)");
  }
  SignedGrid g(2, n);
  int base = n % 4 == 3 ? 3 : 4;
  if (base == 3) {
    g.set(1, 1, 1);
    g.set(1, 2, 2);
    g.set(1, 3, -3);
    g.set(2, 1, -1);
    g.set(2, 2, -2);
    g.set(2, 3, 3);
  } else {
    place_block_2x4(g, 1, 1, 0);
  }
  for (int off = base; off + 4 <= n; off += 4) {
    place_block_2x4(g, 1, off + 1, off);
  }
  return g;
}

SignedGrid construct_even_even(int m, int n) {
  if (m <= 2 || n <= 2 || m % 2 != 0 || n % 2 != 0) {
    throw unsupported_params("requires even m, n greater than 2");
  }
  const int base_m = m % 4 == 0 ? 4 : 6;
  const int base_n = n % 4 == 0 ? 4 : 6;
  SignedGrid base;
  if (base_m == 4 && base_n == 4) {
    base = base_4x4();
  } else if (base_m == 4) {
    base = base_4x6();
  } else if (base_n == 4) {
    base = transpose(base_4x6());
  } else {
    base = base_6x6();
  }

  SignedGrid g(m, n);
  for (const auto& [rc, v] : base.cells()) g.set(rc.first, rc.second, v);
  // Grow columns four at a time at the base height, then rows at full width.
  for (int nc = base_n; nc + 4 <= n; nc += 4) {
    for (int p = 0; p < base_m / 2; ++p) {
      place_block_2x4(g, 2 * p + 1, nc + 1, base_m * nc / 2 + 4 * p);
    }
  }
  for (int mc = base_m; mc + 4 <= m; mc += 4) {
    for (int p = 0; p < n / 2; ++p) {
      place_block_4x2(g, mc + 1, 2 * p + 1, mc * n / 2 + 4 * p);
    }
  }
  return g;
}

SignedGrid construct_odd_odd(int m, int n, const BuildContext& ctx) {
  if (m < 3 || n < 3 || m % 2 == 0 || n % 2 == 0) {
    throw unsupported_params("requires odd m, n greater than 1");
  }
  auto mr = providers::magic_rectangle(m, n, ctx.limits, ctx.catalog);
  SignedGrid g(m, n);
  const value_t w = mr.w();
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= n; ++c) g.set(r, c, mr.grid[r - 1][c - 1] - w);
  }
  g.meta.provider_key = magic_rectangle_key(std::min(m, n), std::max(m, n));
  return g;
}

SignedGrid construct_3xeven(int n) {
  if (n < 2 || n % 2 != 0) {
    throw unsupported_params("requires even n >= 2");
  }
  if (n == 2) return from_rows({{1, -1}, {2, -2}, {-3, 3}});
  if (n == 4) return from_rows({{1, -1, 2, -2}, {5, 4, -5, -4},
                                {-6, -3, 3, 6}});
  const int k = n / 2;
  SignedGrid g(3, n);
  for (int j = 1; j <= n; ++j) {
    const int p = (j + 1) / 2;
    value_t top = 0, bottom = 0;
    switch (j % 4) {
      case 0: top = -(3 * p - 2) / 2; break;
      case 1: top = (3 * p - 1) / 2; break;
      case 2: top = -(3 * p - 1) / 2; break;
      default: top = (3 * p - 2) / 2; break;
    }
    if (j == 1) {
      bottom = -3 * k;
    } else if (j == n) {
      bottom = 3 * k;
    } else {
      switch (j % 4) {
        case 0:
        case 2: bottom = -3 * (k - p); break;
        default: bottom = 3 * (k - p + 1); break;
      }
    }
    g.set(1, j, top);
    g.set(3, j, bottom);
    g.set(2, j, -(top + bottom));
  }
  return g;
}

SignedGrid construct_5xeven(int n) {
  if (n <= 2 || n % 2 != 0) {
    throw unsupported_params("requires even n greater than 2");
  }
  SignedGrid top = construct_3xeven(n);
  SignedGrid g(5, n);
  if (n % 4 == 0) {
    for (const auto& [rc, v] : top.cells()) g.set(rc.first, rc.second, v);
    for (int p = 0; p < n / 4; ++p) {
      place_block_2x4(g, 4, 4 * p + 1, 3 * n / 2 + 4 * p);
    }
    return g;
  }
  // n ≡ 2 (mod 4): swap x1, x2 in row 2, tile columns 3..n of the last two
  // rows, and close the lower-left corner with the cross pattern.
  for (const auto& [rc, v] : top.cells()) {
    int c = rc.second;
    if (rc.first == 2 && c <= 2) c = 3 - c;  // x1 <-> x2
    g.set(rc.first, c, v);
  }
  const value_t h = static_cast<value_t>(3 * n / 2);
  g.set(4, 1, -(h + 1));
  g.set(4, 2, h + 1);
  g.set(5, 1, h + 2);
  g.set(5, 2, -(h + 2));
  for (int p = 0; p < (n - 2) / 4; ++p) {
    place_block_2x4(g, 4, 4 * p + 3, h + 2 + 4 * p);
  }
  return g;
}

SignedGrid construct_odd_even(int m, int n) {
  if (m <= 1 || n <= 2 || m % 2 != 1 || n % 2 != 0) {
    throw unsupported_params("requires odd m > 1 and even n > 2");
  }
  if (m == 3) return construct_3xeven(n);
  if (m == 5) return construct_5xeven(n);
  SignedGrid upper = construct_odd_even(m - 4, n);
  SignedGrid lower =
      shift_magnitudes(construct_even_even(4, n), (m - 4) * n / 2);
  SignedGrid g(m, n);
  g = paste(g, upper, 0, 0);
  g = paste(g, lower, m - 4, 0);
  return g;
}

SignedGrid construct_tight(int m, int n, const BuildContext& ctx) {
  const Decision d = decide_tight(m, n);
  if (!d.exists()) {
    if (d.reason == "one_line_needs_n_1") {
      throw unsupported_params("a tight 1xn array requires n = 1");
    }
    throw unsupported_params(
        "a tight 2xn array requires n ≡ 0, 3 (mod 4) (transposes likewise)");
  }
  SignedGrid g;
  if (d.method == "trivial_1x1") {
    g = SignedGrid(1, 1);
    g.set(1, 1, 0);
  } else if (d.method == "two_by_n") {
    g = construct_2xn(n);
  } else if (d.method == "two_by_n_transpose") {
    g = transpose(construct_2xn(m));
  } else if (d.method == "even_even") {
    g = construct_even_even(m, n);
  } else if (d.method == "odd_odd") {
    g = construct_odd_odd(m, n, ctx);
  } else if (d.method == "odd_even") {
    g = construct_odd_even(m, n);
  } else {
    g = transpose(construct_odd_even(n, m));
  }
  g.meta.method = d.method;
  return g;
}

}  // namespace sma::tight
