#include "sma/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <vector>

namespace sma::oracle {

namespace {

using clock_t_ = std::chrono::steady_clock;

struct Searcher {
  ArraySpec spec;
  SymbolSet symbols;
  bool counting = false;
  bool break_symmetry = false;
  bool canonical_row1 = false;

  long long node_budget = 0;
  clock_t_::time_point deadline;
  bool exhausted = false;
  long long nodes = 0;

  std::vector<value_t> magnitudes_desc;  // available-scan order
  std::vector<char> used;                // indexed by v + bound
  std::vector<int> col_cnt;
  std::vector<long long> col_sum;
  std::vector<std::vector<int>> row_cols;     // chosen pattern per row
  std::vector<std::vector<value_t>> row_vals;
  bool first_value_placed = false;

  long long found_count = 0;
  std::optional<SignedGrid> first_solution;

  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > node_budget) {
      exhausted = true;
      return false;
    }
    if ((nodes & 0x3fff) == 0 && clock_t_::now() > deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }

  bool avail(value_t v) const {
    return symbols.contains(v) && !used[v + symbols.bound];
  }

  long long top_available(int count) const {
    long long sum = 0;
    for (value_t g : magnitudes_desc) {
      if (count == 0) break;
      if (g == 0) {
        if (!used[symbols.bound]) --count;  // zero contributes nothing
        continue;
      }
      const bool pos_free = !used[g + symbols.bound];
      const bool neg_free = !used[-g + symbols.bound];
      if (pos_free) {
        sum += g;
        if (--count == 0) break;
      }
      if (neg_free) {
        sum += g;
        if (--count == 0) break;
      }
    }
    return sum;
  }

  // True while columns c can still be left out of row r.
  bool skippable(int c, int r) const {
    return spec.t - col_cnt[c - 1] <= spec.m - r;
  }

  void record_solution() {
    ++found_count;
    if (!first_solution) {
      SignedGrid g(spec.m, spec.n);
      for (int r = 0; r < spec.m; ++r) {
        for (int i = 0; i < spec.s; ++i) {
          g.set(r + 1, row_cols[r][i], row_vals[r][i]);
        }
      }
      first_solution = g;
    }
  }

  // Returns true to stop the whole search (first hit in search mode).
  bool values(int r, int idx, long long row_partial) {
    if (idx == spec.s) {
      return rows(r + 1);
    }
    const int c = row_cols[r - 1][idx];
    const int rem = spec.s - idx - 1;
    auto try_value = [&](value_t v) -> bool {
      if (!tick()) return false;
      if (!avail(v)) return false;
      if (rem == 0 && row_partial + v != 0) return false;
      if (rem > 0 && std::abs(row_partial + v) > top_available(rem)) {
        return false;
      }
      const long long new_col = col_sum[c - 1] + v;
      if (col_cnt[c - 1] + 1 == spec.t) {
        if (new_col != 0) return false;
      } else if (std::abs(new_col) >
                 top_available(spec.t - col_cnt[c - 1] - 1)) {
        return false;
      }
      used[v + symbols.bound] = 1;
      col_cnt[c - 1]++;
      col_sum[c - 1] = new_col;
      row_vals[r - 1][idx] = v;
      const bool was_first = !first_value_placed;
      first_value_placed = true;
      const bool stop = values(r, idx + 1, row_partial + v);
      if (was_first) first_value_placed = false;
      used[v + symbols.bound] = 0;
      col_cnt[c - 1]--;
      col_sum[c - 1] -= v;
      return stop;
    };

    const bool pin_positive = break_symmetry && !first_value_placed;
    if (symbols.contains_zero && !pin_positive) {
      if (try_value(0)) return true;
      if (exhausted) return true;
    }
    for (value_t g = 1; g <= symbols.bound; ++g) {
      if (try_value(g)) return true;
      if (exhausted) return true;
      if (!pin_positive) {
        if (try_value(-g)) return true;
        if (exhausted) return true;
      }
    }
    return false;
  }

  bool pattern(int r, int c, int chosen) {
    if (chosen == spec.s) {
      for (int rest = c; rest <= spec.n; ++rest) {
        if (!skippable(rest, r)) return false;
      }
      return values(r, 0, 0);
    }
    if (spec.n - c + 1 < spec.s - chosen) return false;
    // Column relabeling is a symmetry; when only existence matters, the
    // first row's pattern can be pinned to the leading columns.
    const int last =
        canonical_row1 && r == 1 ? c : spec.n - (spec.s - chosen) + 1;
    for (int cc = c; cc <= last; ++cc) {
      if (col_cnt[cc - 1] < spec.t) {
        if (!tick()) return true;
        row_cols[r - 1][chosen] = cc;
        if (pattern(r, cc + 1, chosen + 1)) return true;
        if (exhausted) return true;
      }
      if (!skippable(cc, r)) return false;
    }
    return false;
  }

  bool rows(int r) {
    if (r > spec.m) {
      record_solution();
      return !counting;  // stop at the first hit when searching
    }
    return pattern(r, 1, 0);
  }
};

Searcher make_searcher(const ArraySpec& spec,
                       const providers::SearchLimits& limits, bool counting) {
  spec.require_valid();
  limits.require_valid();
  Searcher s;
  s.spec = spec;
  s.symbols = symbol_set(spec);
  s.counting = counting;
  s.break_symmetry = !s.symbols.contains_zero;
  s.canonical_row1 = !counting;
  s.node_budget = limits.node_budget;
  s.deadline =
      clock_t_::now() + std::chrono::milliseconds(limits.time_budget_ms);
  for (value_t g = s.symbols.bound; g >= 1; --g) s.magnitudes_desc.push_back(g);
  if (s.symbols.contains_zero) s.magnitudes_desc.push_back(0);
  s.used.assign(2 * s.symbols.bound + 1, 0);
  s.col_cnt.assign(spec.n, 0);
  s.col_sum.assign(spec.n, 0);
  s.row_cols.assign(spec.m, std::vector<int>(spec.s, 0));
  s.row_vals.assign(spec.m, std::vector<value_t>(spec.s, 0));
  return s;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::found:
      return "exists";
    case Outcome::none:
      return "none (exhaustive)";
    default:
      return "inconclusive";
  }
}

Result search_one(const ArraySpec& spec,
                  const providers::SearchLimits& limits) {
  Result res;
  if (spec.filled_cells() > limits.max_filled_cells) {
    res.outcome = Outcome::inconclusive;
    res.note = "filled-cell cap (" + std::to_string(limits.max_filled_cells) +
               ") exceeded";
    return res;
  }
  Searcher s = make_searcher(spec, limits, /*counting=*/false);
  s.rows(1);
  res.nodes = s.nodes;
  if (s.first_solution) {
    res.outcome = Outcome::found;
    res.grid = std::move(s.first_solution);
  } else if (s.exhausted) {
    res.outcome = Outcome::inconclusive;
    res.note = "search budget exhausted";
  } else {
    res.outcome = Outcome::none;
  }
  return res;
}

CountResult count_all(const ArraySpec& spec,
                      const providers::SearchLimits& limits) {
  CountResult res;
  if (spec.filled_cells() > limits.max_filled_cells) {
    res.note = "filled-cell cap (" + std::to_string(limits.max_filled_cells) +
               ") exceeded";
    return res;
  }
  Searcher s = make_searcher(spec, limits, /*counting=*/true);
  s.rows(1);
  res.nodes = s.nodes;
  res.complete = !s.exhausted;
  // With the sign symmetry broken, each canonical solution stands for the
  // pair {S, -S}.
  res.count = s.break_symmetry ? 2 * s.found_count : s.found_count;
  if (!res.complete) res.note = "search budget exhausted";
  return res;
}

}  // namespace sma::oracle
