#include "sma/squares.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sma/decide.hpp"
#include "sma/grid_ops.hpp"
#include "sma/tight.hpp"
#include "sma/verify.hpp"

namespace sma::squares {

namespace {

int mod1(long long v, int n) {
  long long r = v % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

SignedGrid sms_odd_odd(int n, int t) {
  auto sys = odd_partition_rows(odd_partition_columns(n, t));
  SignedGrid g(n, n);
  for (int r = 1; r <= n; ++r) {
    for (int i = 1; i <= t; ++i) {
      const int c = sys.row_class_index(r, i);
      g.set(r, c, sys.element(i, sys.j_of(i, c)));
    }
  }
  return g;
}

SignedGrid sms4_diagonal(int n) {
  if (n < 4) throw unsupported_params("SMS(n;4) band requires n >= 4");
  SignedGrid g(n, n);
  for (int i = 1; i <= n - 1; ++i) g.set(i, i, i);
  g.set(n, n, -n);
  for (int i = 1; i <= n - 2; ++i) g.set(i, i + 1, -i);
  g.set(n - 1, n, n + 1);
  for (int i = 1; i <= n - 2; ++i) g.set(i, i + 2, 2 * n - i);
  for (int i = 1; i <= n - 3; ++i) g.set(i, i + 3, -(2 * n - i));
  g.set(n - 2, 1, -(n + 2));
  g.set(n - 1, 1, -(n - 1));
  g.set(n, 1, 2 * n);
  g.set(n - 1, 2, -(n + 1));
  g.set(n, 2, n);
  g.set(n, 3, -2 * n);
  return g;
}

SignedGrid add_four(const SignedGrid& grid) {
  if (grid.rows() != grid.cols()) {
    throw argument_error("add_four operates on square grids");
  }
  const int n = grid.rows();
  if (n < 4 || grid.filled() % n != 0) {
    throw argument_error("grid does not have a uniform fill count");
  }
  const int t = grid.filled() / n;
  if ((t * n) % 2 != 0) {
    throw unsupported_params("add_four requires t or n even");
  }
  const int k = diagonal_width(grid);
  if (k > n - 4) {
    throw composition_error(
        "no four consecutive empty diagonals adjacent to the band");
  }
  // Canonical band start: the smallest residue whose window of width k
  // covers every filled diagonal.
  std::vector<char> present(n, 0);
  for (const auto& [rc, v] : grid.cells()) {
    (void)v;
    present[diagonal_residue(rc.first, rc.second, n)] = 1;
  }
  int d0 = 0;
  for (int start = 0; start < n; ++start) {
    if (!present[start]) continue;
    bool ok = true;
    for (int d = 0; d < n && ok; ++d) {
      if (present[d] && (d - start + n) % n + 1 > k) ok = false;
    }
    if (ok) {
      d0 = start;
      break;
    }
  }
  SignedGrid band = permute_columns_cyclic(
      shift_magnitudes(sms4_diagonal(n), t * n / 2), (d0 + k) % n);
  SignedGrid out = paste(grid, band, 0, 0);
  out.meta = grid.meta;
  return out;
}

SignedGrid sms6_odd(int n, const BuildContext& ctx) {
  if (n < 7 || n % 2 == 0) {
    throw unsupported_params("6-diagonal odd squares require odd n >= 7");
  }
  SignedGrid a = tight::construct_odd_odd(3, n, ctx);
  const value_t shift = (3 * n + 1) / 2;
  SignedGrid g(n, n);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= n; ++j) {
      const value_t v = *a.at(i, j) + shift;
      const int row = mod1(2 * i + j - 2, n);
      g.set(row, j, v);
      g.set(row, mod1(j + 1, n), -v);
    }
  }
  g.meta.provider_key = a.meta.provider_key;
  return g;
}

SignedGrid sms_even_t_odd_n(int n, int t, const BuildContext& ctx) {
  if (!(n % 2 == 1 && t % 2 == 0 && n > t && t > 3)) {
    throw unsupported_params("requires odd n > t > 3 with t even");
  }
  SignedGrid g = t % 4 == 0 ? sms4_diagonal(n) : sms6_odd(n, ctx);
  for (int fill = t % 4 == 0 ? 4 : 6; fill < t; fill += 4) g = add_four(g);
  return g;
}

SignedGrid sms_via_heffter(int n, int t, const BuildContext& ctx) {
  if (!(n % 2 == 0 && t % 2 == 0 && t >= 4 && t <= n && n / 2 >= 3)) {
    throw unsupported_params("requires even t, n with 4 <= t <= n, n >= 6");
  }
  if ((n / 2 * t) % 4 != 0) {
    throw unsupported_params("requires nt/2 ≡ 0 (mod 4)");
  }
  auto heffter = providers::tight_heffter(n / 2, t, ctx.limits, ctx.catalog);
  SignedGrid g(n, n);
  for (const auto& [rc, v] : heffter.grid.cells()) {
    const int c = mod1(2 * rc.first + rc.second - 2, n);
    g.set(2 * rc.first - 1, c, v);
    g.set(2 * rc.first, c, -v);
  }
  g.meta.provider_key = tight_heffter_key(n / 2, t);
  return g;
}

PairedPartition paired_partition(int n, const PairingOverride* pairing) {
  if (n % 4 != 2 || n < 10) {
    throw unsupported_params("paired partition requires n ≡ 2 (mod 4), n >= 10");
  }
  const int m = n - 1;
  auto sys = odd_partition_columns(m, 3);
  const value_t shift = (3 * m - 1) / 2 + 1;
  const value_t threshold = (3 * n - 2) / 2;
  auto p = [&](value_t x) { return x < threshold ? x + 1 : x + 2; };

  std::vector<std::vector<value_t>> raw;
  for (int c = 1; c <= m; ++c) {
    auto cls = sys.column_class(c);
    for (auto& v : cls) v = p(v + shift);
    std::sort(cls.begin(), cls.end());
    raw.push_back(std::move(cls));
  }
  raw.push_back({1, 3 * n / 2, 3 * n});

  PairedPartition pp;
  pp.n = n;
  pp.classes.assign(n, {});
  pp.first_class.assign(n, 0);
  const long long first_sum = (9LL * n + 2) / 2;
  const long long second_sum = (9LL * n + 4) / 2;
  for (auto& cls : raw) {
    int label = 0;
    for (value_t v : cls) {
      if (v >= 1 && v <= n) label = v;
    }
    if (label == 0 || !pp.classes[label - 1].empty()) {
      throw error("class labeling is not a system of distinct representatives");
    }
    const long long sum = std::accumulate(cls.begin(), cls.end(), 0LL);
    if (sum != first_sum && sum != second_sum) {
      throw error("unexpected class sum in paired partition");
    }
    pp.first_class[label - 1] = sum == first_sum;

    // Placement order: ascending, then the forced labels
    // P_{1,2}=1, P_{2,2}=2, P_{n,1}=n, P_{n,2}=n+1.
    std::vector<std::pair<value_t, int>> forced;  // (element, slot)
    if (label == 1) forced.push_back({1, 1});
    if (label == 2) forced.push_back({2, 1});
    if (label == n) {
      forced.push_back({static_cast<value_t>(n), 0});
      forced.push_back({static_cast<value_t>(n + 1), 1});
    }
    std::vector<value_t> ordered(3, 0);
    std::vector<char> slot_used(3, 0), elem_used(3, 0);
    for (auto [elem, slot] : forced) {
      for (int e = 0; e < 3; ++e) {
        if (cls[e] == elem && !elem_used[e]) {
          ordered[slot] = elem;
          slot_used[slot] = 1;
          elem_used[e] = 1;
          break;
        }
      }
    }
    int slot = 0;
    for (int e = 0; e < 3; ++e) {
      if (elem_used[e]) continue;
      while (slot_used[slot]) ++slot;
      ordered[slot] = cls[e];
      slot_used[slot] = 1;
    }
    pp.classes[label - 1] = std::move(ordered);
  }

  auto class_sum = [&](int label) {
    const auto& c = pp.classes[label - 1];
    return std::accumulate(c.begin(), c.end(), 0LL);
  };

  if (pairing) {
    pp.pairs = pairing->pairs;
  } else {
    pp.pairs.push_back({2, 1});
    std::vector<char> used(n + 1, 0);
    used[1] = used[2] = used[n] = 1;
    int partner = 0;
    for (int i = 3; i < n; ++i) {
      if (!used[i] && pp.first_class[i - 1] == pp.first_class[n - 1]) {
        partner = i;
        break;
      }
    }
    if (partner == 0) throw error("no equal-sum partner for the last class");
    used[partner] = 1;
    pp.pairs.push_back({n, partner});
    for (int i = 3; i < n; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      int mate = 0;
      for (int j = i + 1; j < n; ++j) {
        if (!used[j] && pp.first_class[j - 1] == pp.first_class[i - 1]) {
          mate = j;
          break;
        }
      }
      if (mate == 0) throw error("class kinds do not pair up");
      used[mate] = 1;
      pp.pairs.push_back({i, mate});
    }
  }

  // Constraint checks (they gate fixture pairings too).
  if (static_cast<int>(pp.pairs.size()) != n / 2) {
    throw argument_error("pairing must have n/2 pairs");
  }
  if (!(pp.pairs[0] == std::make_pair(2, 1))) {
    throw argument_error("B_1 must pair P_2 over P_1");
  }
  // The repair cells read P_{n,1} and P_{n,2} from the positive side of B_2.
  if (pp.pairs[1].first != n) {
    throw argument_error("P_n must lead B_2");
  }
  std::vector<char> seen(n + 1, 0);
  for (size_t j = 0; j < pp.pairs.size(); ++j) {
    const auto [i1, i2] = pp.pairs[j];
    if (i1 < 1 || i1 > n || i2 < 1 || i2 > n || seen[i1]++ || seen[i2]++) {
      throw argument_error("pairing is not a perfect matching of labels");
    }
    if (j >= 1 && class_sum(i1) != class_sum(i2)) {
      throw argument_error("paired classes must have equal sums");
    }
  }
  return pp;
}

SignedGrid sms6_2mod4(int n, const PairingOverride* pairing) {
  auto pp = paired_partition(n, pairing);
  std::map<std::pair<int, int>, value_t> a;
  for (int j = 1; j <= n / 2; ++j) {
    const auto [i1, i2] = pp.pairs[j - 1];
    for (int k = 1; k <= 3; ++k) {
      const value_t v1 = pp.classes[i1 - 1][k - 1];
      const value_t v2 = pp.classes[i2 - 1][k - 1];
      const int r1 = mod1(2 * j + 2 * k - 3, n);
      const int r2 = mod1(2 * j + 2 * k - 2, n);
      a[{r1, 2 * j - 1}] = v1;
      a[{r1, 2 * j}] = -v1;
      a[{r2, 2 * j - 1}] = -v2;
      a[{r2, 2 * j}] = v2;
    }
  }
  // The seven-cell repair that fixes the two unbalanced columns.
  const auto orig = a;
  a[{3, 1}] = orig.at({4, 2});
  a[{4, 2}] = orig.at({3, 1});
  a[{3, 3}] = orig.at({5, 3});
  a[{4, 3}] = orig.at({3, 3});
  a[{5, 3}] = orig.at({4, 3});
  a[{4, 4}] = orig.at({5, 4});
  a[{5, 4}] = orig.at({4, 4});

  SignedGrid g(n, n);
  for (const auto& [rc, v] : a) g.set(rc.first, rc.second, v);
  return g;
}

SignedGrid sms_even_even(int n, int t, const BuildContext& ctx) {
  if (!(n % 2 == 0 && t % 2 == 0 && n >= t && t > 3)) {
    throw unsupported_params("requires even n >= t > 3");
  }
  if (t == n) return tight::construct_even_even(n, n);
  if (t % 4 == 0 || n % 4 == 0) return sms_via_heffter(n, t, ctx);
  SignedGrid g = sms6_2mod4(n);
  for (int fill = 6; fill < t; fill += 4) g = add_four(g);
  return g;
}

SignedGrid sms3_even(int n) {
  if (n < 4 || n % 2 != 0) {
    throw unsupported_params("SMS(n;3) by class negation requires even n >= 4");
  }
  SignedGrid a = tight::construct_3xeven(n);
  std::map<value_t, int> column_of;
  for (const auto& [rc, v] : a.cells()) column_of[v] = rc.second;
  SignedGrid g(n, n);
  for (const auto& [rc, v] : a.cells()) {
    g.set(column_of.at(static_cast<value_t>(-v)), rc.second, v);
  }
  return g;
}

SignedGrid sms3_diag(int n) {
  auto ds = diag_sequences3(n);
  SignedGrid g(n, n);
  for (int i = 1; i <= n; ++i) {
    g.set(i, i, ds.at(1, i));               // b_i
    g.set(i, mod1(i + 1, n), ds.at(0, i));  // a_i
    g.set(mod1(i + 1, n), i, ds.at(2, i));  // c_i
  }
  return g;
}

SignedGrid sms5_diag_0mod4(int n) {
  if (n == 8) {
    // Worked 8x8 array; the sequence formulas give a different (equally
    // valid) square at this size.
    const value_t rows[8][8] = {
        {5, 6, -13, 0, 0, 0, -17, 19},   {9, 10, -19, -8, 0, 0, 0, 8},
        {-12, -16, 15, 1, 12, 0, 0, 0},  {0, -7, 4, 20, -14, -3, 0, 0},
        {0, 0, 13, -11, -15, -4, 17, 0}, {0, 0, 0, -2, -1, -10, 11, 2},
        {-18, 0, 0, 0, 18, 14, -5, -9},  {16, 7, 0, 0, 0, 3, -6, -20}};
    SignedGrid g(8, 8);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        if (rows[r][c] != 0) g.set(r + 1, c + 1, rows[r][c]);
      }
    }
    return g;
  }
  auto ds = diag_sequences5(n);
  SignedGrid g(n, n);
  for (int i = 1; i <= n; ++i) {
    g.set(i, mod1(i + 2, n), ds.at(0, i));  // a_i
    g.set(i, mod1(i + 1, n), ds.at(1, i));  // b_i
    g.set(i, i, ds.at(2, i));               // c_i
    g.set(mod1(i + 1, n), i, ds.at(3, i));  // d_i
    g.set(mod1(i + 2, n), i, ds.at(4, i));  // e_i
  }
  return g;
}

SignedGrid sms5_diag_2mod4(int n) {
  if (n % 4 != 2 || n < 6) {
    throw unsupported_params("requires n ≡ 2 (mod 4), n >= 6");
  }
  const int k = (n - 2) / 4;
  auto on_diag = [&](int i) -> value_t {
    if (i == n) return -5 * n / 2;
    return i <= n / 2 ? 5 * i : -5 * (n - i);
  };
  auto below2 = [&](int i) -> value_t {  // i ≡ j - 2
    return i <= n / 2 ? -3 - 5 * (i - 1) : 5 * (n - i) + 2;
  };
  auto below1 = [&](int i) -> value_t {  // i ≡ j - 1
    if (i == n) return (5 * n - 26) / 4;
    if (i % 2 == 1) return -9 - 5 * k + 5 * ((i - 1) / 2);
    const value_t base = 5 * k + 1 + 5 * ((i - 2) / 2);
    return i < 2 * k + 4 ? base : base - 5 * n;
  };
  SignedGrid g(n, n);
  for (int i = 1; i <= n; ++i) {
    g.set(i, i, on_diag(i));
    g.set(i, mod1(i + 2, n), below2(i));
    g.set(i, mod1(i + 1, n), below1(i));
    g.set(i, mod1(i - 1, n), below1(mod1(i - 1, n)) + 3);
    g.set(i, mod1(i - 2, n), below2(mod1(i - 2, n)) + 1);
  }
  return g;
}

SignedGrid sms7_diag_2mod4(int n) {
  auto ds = diag_sequences7(n);
  SignedGrid g(n, n);
  for (int i = 1; i <= n; ++i) {
    g.set(i, mod1(i + 3, n), ds.at(0, i));  // a_i
    g.set(i, mod1(i + 2, n), ds.at(1, i));  // b_i
    g.set(i, mod1(i + 1, n), ds.at(2, i));  // c_i
    g.set(i, i, ds.at(3, i));               // d_i
    g.set(mod1(i + 1, n), i, ds.at(4, i));  // e_i
    g.set(mod1(i + 2, n), i, ds.at(5, i));  // f_i
    g.set(mod1(i + 3, n), i, ds.at(6, i));  // g_i
  }
  return g;
}

SignedGrid sms_odd_t_even_n(int n, int t) {
  if (!(n % 2 == 0 && t % 2 == 1 && n > t && t > 2)) {
    throw unsupported_params("requires even n > t > 2 with t odd");
  }
  if (t == 3) return n % 4 == 0 ? sms3_diag(n) : sms3_even(n);
  if (t == 5) return n % 4 == 0 ? sms5_diag_0mod4(n) : sms5_diag_2mod4(n);
  if (t == 7 && n % 4 == 2) return sms7_diag_2mod4(n);
  return add_four(sms_odd_t_even_n(n, t - 4));
}

SignedGrid construct_sms(int n, int t, const BuildContext& ctx) {
  const Decision d = decide_square(n, t);
  if (!d.exists()) {
    if (d.reason == "t_exceeds_n") {
      throw unsupported_params("SMS(n;t) requires t <= n");
    }
    throw unsupported_params(
        "no SMS(n;t) for t < 3 apart from the trivial SMS(1;1)");
  }
  SignedGrid g;
  if (d.method == "trivial_1x1") {
    g = SignedGrid(1, 1);
    g.set(1, 1, 0);
  } else if (d.method == "tight") {
    g = tight::construct_tight(n, n, ctx);
  } else if (d.method == "odd_odd") {
    g = sms_odd_odd(n, t);
  } else if (d.method == "even_t_odd_n") {
    g = sms_even_t_odd_n(n, t, ctx);
  } else if (d.method == "even_even") {
    g = sms_even_even(n, t, ctx);
  } else {
    g = sms_odd_t_even_n(n, t);
  }
  g.meta.method = d.method;
  return g;
}

}  // namespace sma::squares
