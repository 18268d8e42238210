#include "sma/providers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "sma/grid_ops.hpp"
#include "sma/partitions.hpp"

namespace sma::providers {

namespace {

using clock_t_ = std::chrono::steady_clock;

struct SearchBudget {
  long long nodes_used = 0;
  long long node_budget = 0;
  clock_t_::time_point deadline;
  bool exhausted = false;

  static SearchBudget start(const SearchLimits& limits) {
    SearchBudget b;
    b.node_budget = limits.node_budget;
    b.deadline =
        clock_t_::now() + std::chrono::milliseconds(limits.time_budget_ms);
    return b;
  }

  SearchBudget slice(long long cap) const {
    SearchBudget b = *this;
    b.node_budget = std::min(cap, node_budget - nodes_used);
    b.nodes_used = 0;
    b.exhausted = b.node_budget <= 0;
    return b;
  }

  bool tick() {
    if (exhausted) return false;
    ++nodes_used;
    if (nodes_used > node_budget) {
      exhausted = true;
      return false;
    }
    if ((nodes_used & 0x3fff) == 0 && clock_t_::now() > deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Zero-sum slot assignment: each group owns a list of values and an equal
// list of candidate slots; a bijection per group is chosen so every slot's
// received values sum to zero. Deterministic DFS, groups in order, slots
// ascending.

struct AssignProblem {
  int num_slots = 0;
  std::vector<std::vector<value_t>> values;
  std::vector<std::vector<int>> slots;
};

struct AssignState {
  const AssignProblem* p;
  SearchBudget* budget;
  std::vector<long long> partial;
  std::vector<std::vector<long long>> sufmin, sufmax;
  std::vector<std::vector<int>> order;  // per group: value indices, |v| desc
  std::vector<std::vector<int>> out;
};

// Extreme values first, steered toward the slot whose partial sum they
// cancel best. The DFS stays complete; the ordering just makes the greedy
// balanced path the first one explored.
bool assign_group(AssignState& st, int g, int idx, std::vector<char>& taken) {
  const auto& vals = st.p->values[g];
  const auto& slots = st.p->slots[g];
  if (idx == static_cast<int>(vals.size())) {
    if (g + 1 == static_cast<int>(st.p->values.size())) return true;
    std::vector<char> next_taken(st.p->slots[g + 1].size(), 0);
    return assign_group(st, g + 1, 0, next_taken);
  }
  const value_t v = vals[st.order[g][idx]];
  std::vector<std::pair<long long, int>> cands;
  cands.reserve(slots.size());
  for (int si = 0; si < static_cast<int>(slots.size()); ++si) {
    if (taken[si]) continue;
    const int s = slots[si];
    const long long next = st.partial[s] + v;
    if (next + st.sufmin[g + 1][s] > 0 || next + st.sufmax[g + 1][s] < 0) {
      continue;
    }
    cands.push_back({v >= 0 ? st.partial[s] : -st.partial[s], si});
  }
  std::sort(cands.begin(), cands.end());
  for (const auto& [key, si] : cands) {
    (void)key;
    if (!st.budget->tick()) return false;
    const int s = slots[si];
    st.partial[s] += v;
    taken[si] = 1;
    st.out[g][st.order[g][idx]] = s;
    if (assign_group(st, g, idx + 1, taken)) return true;
    taken[si] = 0;
    st.partial[s] -= v;
    if (st.budget->exhausted) return false;
  }
  return false;
}

std::optional<std::vector<std::vector<int>>> assign_zero_slots(
    const AssignProblem& p, SearchBudget& budget) {
  const int groups = static_cast<int>(p.values.size());
  AssignState st;
  st.p = &p;
  st.budget = &budget;
  st.partial.assign(p.num_slots, 0);
  st.sufmin.assign(groups + 1, std::vector<long long>(p.num_slots, 0));
  st.sufmax = st.sufmin;
  for (int g = groups - 1; g >= 0; --g) {
    st.sufmin[g] = st.sufmin[g + 1];
    st.sufmax[g] = st.sufmax[g + 1];
    const auto lo = *std::min_element(p.values[g].begin(), p.values[g].end());
    const auto hi = *std::max_element(p.values[g].begin(), p.values[g].end());
    for (int s : p.slots[g]) {
      st.sufmin[g][s] += lo;
      st.sufmax[g][s] += hi;
    }
  }
  st.order.assign(groups, {});
  st.out.assign(groups, {});
  for (int g = 0; g < groups; ++g) {
    const auto& vals = p.values[g];
    st.order[g].resize(vals.size());
    std::iota(st.order[g].begin(), st.order[g].end(), 0);
    std::sort(st.order[g].begin(), st.order[g].end(), [&](int a, int b) {
      const long long ma = std::abs(static_cast<long long>(vals[a]));
      const long long mb = std::abs(static_cast<long long>(vals[b]));
      if (ma != mb) return ma > mb;
      return vals[a] < vals[b];
    });
    st.out[g].assign(vals.size(), -1);
  }
  std::vector<char> taken(p.slots.empty() ? 0 : p.slots[0].size(), 0);
  if (groups == 0) return st.out;
  if (!assign_group(st, 0, 0, taken)) return std::nullopt;
  return st.out;
}

// ---------------------------------------------------------------------------
// Magic rectangles.

MagicRectangle siamese_square(int n) {
  MagicRectangle mr;
  mr.m = mr.n = n;
  mr.grid.assign(n, std::vector<value_t>(n, -1));
  int r = 1, c = (n + 1) / 2;
  for (int v = 0; v < n * n; ++v) {
    mr.grid[r - 1][c - 1] = v;
    int r2 = r == 1 ? n : r - 1;
    int c2 = c == n ? 1 : c + 1;
    if (mr.grid[r2 - 1][c2 - 1] != -1) {
      r2 = r == n ? 1 : r + 1;
      c2 = c;
    }
    r = r2;
    c = c2;
  }
  return mr;
}

// Row-wise search for zero-sum transversals: every row receives one unused
// value from each class, all rows summing to zero.
bool zero_transversals(const std::vector<std::vector<value_t>>& classes,
                       const std::vector<long long>& sufmin,
                       const std::vector<long long>& sufmax, int row,
                       std::vector<std::vector<int>>& pick,
                       std::vector<std::vector<char>>& used,
                       SearchBudget& budget) {
  const int m = static_cast<int>(classes[0].size());
  const int q = static_cast<int>(classes.size());
  if (row == m) return true;
  std::function<bool(int, long long)> step = [&](int cls,
                                                 long long sum) -> bool {
    if (cls == q - 1) {
      const long long need = -sum;
      for (int i = 0; i < m; ++i) {
        if (used[cls][i] || classes[cls][i] != need) continue;
        if (!budget.tick()) return false;
        used[cls][i] = 1;
        pick[cls][row] = i;
        if (zero_transversals(classes, sufmin, sufmax, row + 1, pick, used,
                              budget)) {
          return true;
        }
        used[cls][i] = 0;
        return false;
      }
      return false;
    }
    for (int i = 0; i < m; ++i) {
      if (used[cls][i]) continue;
      const long long next = sum + classes[cls][i];
      if (next + sufmin[cls + 1] > 0 || next + sufmax[cls + 1] < 0) continue;
      if (!budget.tick()) return false;
      used[cls][i] = 1;
      pick[cls][row] = i;
      if (step(cls + 1, next)) return true;
      used[cls][i] = 0;
      if (budget.exhausted) return false;
    }
    return false;
  };
  return step(0, 0);
}

std::optional<MagicRectangle> magic_rectangle_search(int m, int n,
                                                     SearchBudget& budget) {
  // Column classes from the odd-partition machinery already sum to zero, so
  // only the row arrangement is open. The classes are negation-symmetric:
  // -C_c = C_tau(c) with tau(c) ≡ (n+1)/2 - c (mod n). Mirrored pairs
  // contribute zero to every row, leaving a small core (the self-negating
  // class plus a few pairs) to solve exactly.
  auto sys = squares::odd_partition_columns(n, m);
  auto mod1 = [n](long long v) {
    long long r = v % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
  };
  const auto tau = [&](int c) { return mod1((n + 1) / 2 - c); };
  int self_c = 0;
  std::vector<int> reps;
  for (int c = 1; c <= n; ++c) {
    if (tau(c) == c) {
      self_c = c;
    } else if (c < tau(c)) {
      reps.push_back(c);
    }
  }
  if (self_c == 0 || 1 + 2 * static_cast<int>(reps.size()) != n) {
    throw error("internal: class negation pairing failed");
  }

  // Core candidates: the self class joined with single pairs, two pairs,
  // then three (from a bounded prefix). Single-pair cores rarely exist once
  // m grows, so they go last there.
  std::vector<std::vector<int>> singles, doubles, triples;
  for (int rep : reps) singles.push_back({rep});
  const int prefix2 = std::min<int>(reps.size(), 6);
  for (int a = 0; a < prefix2; ++a) {
    for (int b = a + 1; b < prefix2; ++b) {
      doubles.push_back({reps[a], reps[b]});
    }
  }
  const int prefix3 = std::min<int>(reps.size(), 5);
  for (int a = 0; a < prefix3; ++a) {
    for (int b = a + 1; b < prefix3; ++b) {
      for (int c = b + 1; c < prefix3; ++c) {
        triples.push_back({reps[a], reps[b], reps[c]});
      }
    }
  }
  std::vector<std::vector<int>> candidates;
  auto extend = [&candidates](const std::vector<std::vector<int>>& part) {
    candidates.insert(candidates.end(), part.begin(), part.end());
  };
  if (m <= 9) {
    extend(singles);
    extend(doubles);
    extend(triples);
  } else {
    extend(doubles);
    extend(triples);
    extend(singles);
  }

  // Necessary condition for a single- or double-pair core: every element of
  // the self class must decompose over the pair difference sets.
  const auto plausible =
      [](const std::vector<std::vector<value_t>>& cls) -> bool {
    const auto& self = cls[0];
    auto diffs = [](const std::vector<value_t>& a) {
      std::set<long long> d;
      for (auto u : a) {
        for (auto v : a) d.insert(static_cast<long long>(v) - u);
      }
      return d;
    };
    if (cls.size() == 3) {
      const auto da = diffs(cls[1]);
      for (auto f : self) {
        if (!da.count(f)) return false;
      }
      return true;
    }
    if (cls.size() == 5) {
      const auto da = diffs(cls[1]);
      const auto db = diffs(cls[3]);
      for (auto f : self) {
        bool ok = false;
        for (auto d : da) {
          if (db.count(f - d)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
    return true;
  };

  const value_t w = (m * n - 1) / 2;
  for (const auto& core_pairs : candidates) {
    std::vector<std::vector<value_t>> core_classes;
    core_classes.push_back(sys.column_class(self_c));
    for (int c : core_pairs) {
      core_classes.push_back(sys.column_class(c));
      auto neg = sys.column_class(c);
      for (auto& v : neg) v = -v;
      core_classes.push_back(neg);
    }
    for (auto& cls : core_classes) std::sort(cls.begin(), cls.end());
    if (!plausible(core_classes)) continue;

    const int q = static_cast<int>(core_classes.size());
    std::vector<long long> sufmin(q + 1, 0), sufmax(q + 1, 0);
    for (int cls = q - 1; cls >= 0; --cls) {
      sufmin[cls] = sufmin[cls + 1] + core_classes[cls].front();
      sufmax[cls] = sufmax[cls + 1] + core_classes[cls].back();
    }
    std::vector<std::vector<int>> pick(q, std::vector<int>(m, -1));
    std::vector<std::vector<char>> used(q, std::vector<char>(m, 0));
    auto sub = budget.slice(q <= 3 ? 400'000 : 800'000);
    const bool ok = zero_transversals(core_classes, sufmin, sufmax, 0, pick,
                                      used, sub);
    budget.nodes_used += sub.nodes_used;
    if (budget.nodes_used > budget.node_budget) budget.exhausted = true;
    if (budget.exhausted) return std::nullopt;
    if (!ok) continue;

    MagicRectangle mr;
    mr.m = m;
    mr.n = n;
    mr.grid.assign(m, std::vector<value_t>(n, 0));
    std::vector<char> is_core(n + 1, 0);
    is_core[self_c] = 1;
    std::vector<int> core_cols = {self_c};
    for (int c : core_pairs) {
      is_core[c] = is_core[tau(c)] = 1;
      core_cols.push_back(c);
      core_cols.push_back(tau(c));
    }
    for (int c = 1; c <= n; ++c) {
      if (is_core[c] || c > tau(c)) continue;
      for (int i = 1; i <= m; ++i) {
        const value_t v = sys.element(i, sys.j_of(i, c));
        mr.grid[i - 1][c - 1] = v + w;
        mr.grid[i - 1][tau(c) - 1] = -v + w;
      }
    }
    for (int ci = 0; ci < q; ++ci) {
      const int c = core_cols[ci];
      for (int r = 0; r < m; ++r) {
        mr.grid[r][c - 1] = core_classes[ci][pick[ci][r]] + w;
      }
    }
    return mr;
  }
  return std::nullopt;
}

MagicRectangle transpose(const MagicRectangle& mr) {
  MagicRectangle out;
  out.m = mr.n;
  out.n = mr.m;
  out.grid.assign(out.m, std::vector<value_t>(out.n, 0));
  for (int r = 0; r < mr.m; ++r) {
    for (int c = 0; c < mr.n; ++c) out.grid[c][r] = mr.grid[r][c];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Heffter search. Cells are visited in a fixed order; magnitudes are tried
// largest first with the sign that best balances the open partials, and the
// first filled cell is pinned positive.

struct HeffterState {
  int m, n;
  int mag_lo = 1;   // magnitudes are [mag_lo, mag_hi]
  int mag_hi = 0;
  const std::vector<std::pair<int, int>>* cells;
  SearchBudget* budget;
  std::vector<char> avail;        // by magnitude - mag_lo
  long long avail_sum = 0;
  std::vector<long long> row_p, col_p;
  std::vector<int> row_rem, col_rem;
  long long row_p_total = 0;
  std::vector<value_t> chosen;

  bool has(int g) const { return g >= mag_lo && g <= mag_hi && avail[g - mag_lo]; }
};

long long top_sum(const HeffterState& st, int count, int excluded) {
  long long sum = 0;
  for (int g = st.mag_hi; g >= st.mag_lo && count > 0; --g) {
    if (!st.avail[g - st.mag_lo] || g == excluded) continue;
    sum += g;
    --count;
  }
  return sum;
}

bool heffter_try(HeffterState& st, size_t idx, value_t v);

bool heffter_cell(HeffterState& st, size_t idx) {
  if (idx == st.cells->size()) return true;
  // Remaining signed values must be able to cancel the open row partials.
  if (((st.avail_sum + st.row_p_total) & 1LL) != 0) return false;
  const auto [r, c] = (*st.cells)[idx];
  if (st.row_rem[r] == 1) {
    const long long need = -st.row_p[r];
    if (!st.has(static_cast<int>(std::abs(need)))) return false;
    return heffter_try(st, idx, static_cast<value_t>(need));
  }
  if (st.col_rem[c] == 1) {
    const long long need = -st.col_p[c];
    if (!st.has(static_cast<int>(std::abs(need)))) return false;
    return heffter_try(st, idx, static_cast<value_t>(need));
  }
  // Largest magnitudes first, signed toward whatever balances the open
  // row and column partials; extremes consumed early keep the forced
  // trailing cells small.
  for (int g = st.mag_hi; g >= st.mag_lo; --g) {
    if (!st.avail[g - st.mag_lo]) continue;
    const long long pos_score = std::abs(st.row_p[r] + g) +
                                std::abs(st.col_p[c] + g);
    const long long neg_score = std::abs(st.row_p[r] - g) +
                                std::abs(st.col_p[c] - g);
    const value_t first = neg_score < pos_score ? -g : g;
    for (const value_t v : {first, static_cast<value_t>(-first)}) {
      if (idx == 0 && v < 0) continue;  // negation symmetry
      if (std::abs(st.row_p[r] + v) > top_sum(st, st.row_rem[r] - 1, g)) {
        continue;
      }
      if (std::abs(st.col_p[c] + v) > top_sum(st, st.col_rem[c] - 1, g)) {
        continue;
      }
      if (heffter_try(st, idx, v)) return true;
      if (st.budget->exhausted) return false;
    }
  }
  return false;
}

bool heffter_try(HeffterState& st, size_t idx, value_t v) {
  if (!st.budget->tick()) return false;
  const auto [r, c] = (*st.cells)[idx];
  const int g = std::abs(v);
  if (st.row_rem[r] == 1 && st.row_p[r] + v != 0) return false;
  if (st.col_rem[c] == 1 && st.col_p[c] + v != 0) return false;
  st.avail[g - st.mag_lo] = 0;
  st.avail_sum -= g;
  st.row_p[r] += v;
  st.row_p_total += v;
  st.col_p[c] += v;
  st.row_rem[r]--;
  st.col_rem[c]--;
  st.chosen[idx] = v;
  if (heffter_cell(st, idx + 1)) return true;
  st.avail[g - st.mag_lo] = 1;
  st.avail_sum += g;
  st.row_p[r] -= v;
  st.row_p_total -= v;
  st.col_p[c] -= v;
  st.row_rem[r]++;
  st.col_rem[c]++;
  return false;
}

std::optional<SignedGrid> heffter_cell_dfs(
    int m, int n, const std::vector<std::pair<int, int>>& cells,
    SearchBudget& budget, int mag_lo = 1) {
  HeffterState st;
  st.m = m;
  st.n = n;
  st.mag_lo = mag_lo;
  st.mag_hi = mag_lo + static_cast<int>(cells.size()) - 1;
  st.cells = &cells;
  st.budget = &budget;
  st.avail.assign(cells.size(), 1);
  st.avail_sum =
      (1LL * st.mag_hi * (st.mag_hi + 1) - 1LL * (mag_lo - 1) * mag_lo) / 2;
  st.row_p.assign(m + 1, 0);
  st.col_p.assign(n + 1, 0);
  st.row_rem.assign(m + 1, 0);
  st.col_rem.assign(n + 1, 0);
  for (const auto& [r, c] : cells) {
    st.row_rem[r]++;
    st.col_rem[c]++;
  }
  st.chosen.assign(cells.size(), 0);
  if (!heffter_cell(st, 0)) return std::nullopt;
  SignedGrid g(m, n);
  for (size_t i = 0; i < cells.size(); ++i) {
    g.set(cells[i].first, cells[i].second, st.chosen[i]);
  }
  return g;
}

// Two-phase search for larger instances: split the magnitudes into one
// near-consecutive block per row, fix block-sum parities by boundary swaps,
// sign each block to a zero sum, then assign values to the row's columns so
// columns cancel too.
std::optional<SignedGrid> heffter_two_phase(
    int m, int n, const std::vector<std::pair<int, int>>& cells,
    SearchBudget& budget, int mag_lo = 1) {
  std::vector<std::vector<int>> row_cols(m + 1);
  for (const auto& [r, c] : cells) row_cols[r].push_back(c);

  std::vector<std::vector<value_t>> blocks(m);
  int next = mag_lo;
  for (int r = 0; r < m; ++r) {
    for (size_t i = 0; i < row_cols[r + 1].size(); ++i) {
      blocks[r].push_back(next++);
    }
  }

  auto block_sum = [&](int r) {
    return std::accumulate(blocks[r].begin(), blocks[r].end(), 0LL);
  };
  // Pair up odd-sum blocks in order and swap one cross-parity element.
  std::vector<int> odd_rows;
  for (int r = 0; r < m; ++r) {
    if (block_sum(r) % 2 != 0) odd_rows.push_back(r);
  }
  if (odd_rows.size() % 2 != 0) return std::nullopt;
  for (size_t i = 0; i + 1 < odd_rows.size(); i += 2) {
    const int a = odd_rows[i], b = odd_rows[i + 1];
    bool swapped = false;
    for (auto ita = blocks[a].rbegin(); !swapped && ita != blocks[a].rend();
         ++ita) {
      for (auto& vb : blocks[b]) {
        if (((*ita ^ vb) & 1) != 0) {
          std::swap(*ita, vb);
          swapped = true;
          break;
        }
      }
    }
    if (!swapped) return std::nullopt;
  }

  // Zero-sign each block: first subset (descending scan) summing to half.
  std::vector<std::vector<value_t>> row_values(m);
  for (int r = 0; r < m; ++r) {
    auto& blk = blocks[r];
    std::sort(blk.rbegin(), blk.rend());
    const long long total = block_sum(r);
    if (total % 2 != 0) return std::nullopt;
    std::vector<char> pos(blk.size(), 0);
    long long target = total / 2;
    std::function<bool(size_t, long long)> pick = [&](size_t i,
                                                      long long left) -> bool {
      if (left == 0) return true;
      if (i == blk.size() || left < 0) return false;
      if (!budget.tick()) return false;
      pos[i] = 1;
      if (pick(i + 1, left - blk[i])) return true;
      pos[i] = 0;
      return pick(i + 1, left);
    };
    if (!pick(0, target)) return std::nullopt;
    for (size_t i = 0; i < blk.size(); ++i) {
      row_values[r].push_back(pos[i] ? blk[i] : -blk[i]);
    }
  }

  AssignProblem p;
  p.num_slots = n + 1;  // slots indexed by column, 1-based
  for (int r = 0; r < m; ++r) {
    p.values.push_back(row_values[r]);
    p.slots.push_back(row_cols[r + 1]);
  }
  auto a = assign_zero_slots(p, budget);
  if (!a) return std::nullopt;
  SignedGrid g(m, n);
  for (int r = 0; r < m; ++r) {
    for (size_t i = 0; i < row_values[r].size(); ++i) {
      g.set(r + 1, (*a)[r][i], row_values[r][i]);
    }
  }
  return g;
}

std::vector<std::pair<int, int>> full_pattern(int m, int n) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(1LL * m * n);
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= n; ++c) cells.emplace_back(r, c);
  }
  return cells;
}

// L-shaped shells: row s left-to-right, then the rest of column s downward.
// Each shell closes a row and a column, so sums are checked early and the
// trailing forced region stays shallow.
std::vector<std::pair<int, int>> shell_order(
    std::vector<std::pair<int, int>> cells) {
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    const int sa = std::min(a.first, a.second);
    const int sb = std::min(b.first, b.second);
    if (sa != sb) return sa < sb;
    const bool row_a = a.first == sa, row_b = b.first == sb;
    if (row_a != row_b) return row_a;
    return a < b;
  });
  return cells;
}

std::optional<SignedGrid> search_heffter_pattern(
    int m, int n, const std::vector<std::pair<int, int>>& cells,
    SearchBudget& budget, long long dfs_cap, int mag_lo = 1) {
  const auto ordered = shell_order(cells);
  for (int phase = 0; phase < 2; ++phase) {
    const bool use_dfs = phase == 0;
    auto sub = budget.slice(use_dfs ? dfs_cap : budget.node_budget);
    auto result = use_dfs ? heffter_cell_dfs(m, n, ordered, sub, mag_lo)
                          : heffter_two_phase(m, n, cells, sub, mag_lo);
    budget.nodes_used += sub.nodes_used;
    if (budget.nodes_used > budget.node_budget) budget.exhausted = true;
    if (result) return result;
    if (budget.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

// Tight arrays grow by bordering: shave four lines off the longer side and
// fill the freed strip with a small tight block on the top magnitude range.
std::optional<SignedGrid> tight_heffter_build(int m, int n,
                                              SearchBudget& budget) {
  if (std::max(m, n) >= 8 && std::min(m, n) >= 3) {
    const bool shave_rows = m >= n;
    const int bm = shave_rows ? m - 4 : m;
    const int bn = shave_rows ? n : n - 4;
    auto base = tight_heffter_build(bm, bn, budget);
    if (base && !budget.exhausted) {
      const int sm = shave_rows ? 4 : m;
      const int sn = shave_rows ? n : 4;
      auto sub = budget.slice(30'000'000);
      auto strip = search_heffter_pattern(sm, sn, full_pattern(sm, sn), sub,
                                          24'000'000, bm * bn + 1);
      budget.nodes_used += sub.nodes_used;
      if (budget.nodes_used > budget.node_budget) budget.exhausted = true;
      if (strip) {
        SignedGrid g(m, n);
        g = paste(g, *base, 0, 0);
        return paste(g, *strip, shave_rows ? m - 4 : 0,
                     shave_rows ? 0 : n - 4);
      }
      if (budget.exhausted) return std::nullopt;
    } else if (budget.exhausted) {
      return std::nullopt;
    }
    // fall through to a direct search when the bordered route fails
  }
  return search_heffter_pattern(m, n, full_pattern(m, n), budget, 8'000'000);
}

std::optional<CatalogEntry> lookup(Catalog* catalog, const std::string& key) {
  if (catalog) {
    if (auto e = catalog->get(key)) return e;
    return std::nullopt;
  }
  return builtin_seed(key);  // seeds stay visible without a store
}

void store(Catalog* catalog, const std::string& key, const std::string& family,
           const ArraySpec& spec, const SignedGrid& grid) {
  if (!catalog) return;
  CatalogEntry e;
  e.key = key;
  e.family = family;
  e.spec = spec;
  e.grid = grid;
  e.provenance = "searched";
  e.digest = content_digest(spec, grid);
  catalog->put(e);
}

}  // namespace

GridFile MagicRectangle::to_grid_file() const {
  GridFile gf;
  gf.spec = ArraySpec::tight(m, n);
  gf.grid = SignedGrid(m, n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) gf.grid.set(r + 1, c + 1, grid[r][c]);
  }
  return gf;
}

MagicRectangle MagicRectangle::from_grid_file(const GridFile& gf) {
  MagicRectangle mr;
  mr.m = gf.spec.m;
  mr.n = gf.spec.n;
  mr.grid.assign(mr.m, std::vector<value_t>(mr.n, 0));
  for (const auto& [rc, v] : gf.grid.cells()) {
    mr.grid[rc.first - 1][rc.second - 1] = v;
  }
  return mr;
}

MagicRectangle magic_rectangle(int m, int n, const SearchLimits& limits,
                               Catalog* catalog) {
  limits.require_valid();
  if (m % 2 == 0 || n % 2 == 0) {
    throw unsupported_params(
        "magic rectangle provider serves the odd-by-odd family only");
  }
  if (m <= 1 || n <= 1 || m + n <= 5) {
    throw unsupported_params("magic rectangle requires m, n > 1 and m+n > 5");
  }
  if (m > n) return transpose(magic_rectangle(n, m, limits, catalog));

  const std::string key = magic_rectangle_key(m, n);
  if (auto hit = lookup(catalog, key)) {
    return MagicRectangle::from_grid_file({hit->grid, hit->spec});
  }

  MagicRectangle mr;
  if (m == n) {
    mr = siamese_square(n);
  } else {
    auto budget = SearchBudget::start(limits);
    auto found = magic_rectangle_search(m, n, budget);
    if (!found) {
      throw provider_timeout(key, "search budget exhausted after " +
                                      std::to_string(budget.nodes_used) +
                                      " nodes");
    }
    mr = *found;
  }
  GridFile gf = mr.to_grid_file();
  if (!family_valid("magic_rectangle", gf)) {
    throw error("internal: magic rectangle failed verification");
  }
  if (m != n) store(catalog, key, "magic_rectangle", gf.spec, gf.grid);
  return mr;
}

HeffterGrid tight_heffter(int m, int n, const SearchLimits& limits,
                          Catalog* catalog) {
  limits.require_valid();
  if (m < 3 || n < 3) {
    throw unsupported_params("tight Heffter arrays require m, n >= 3");
  }
  if ((m * n) % 4 != 0 && (m * n) % 4 != 3) {
    throw unsupported_params("tight Heffter arrays require mn ≡ 0, 3 (mod 4)");
  }
  const std::string key = tight_heffter_key(m, n);
  if (auto hit = lookup(catalog, key)) return {hit->spec, hit->grid};
  if (auto hit = lookup(catalog, tight_heffter_key(n, m))) {
    return {hit->spec.transposed(), sma::transpose(hit->grid)};
  }

  // Search the wide orientation; bordering shaves the longer side down to
  // a small base.
  auto budget = SearchBudget::start(limits);
  const int sm = std::min(m, n), sn = std::max(m, n);
  auto found = tight_heffter_build(sm, sn, budget);
  if (found && sm != m) found = sma::transpose(*found);
  if (!found) {
    throw provider_timeout(key, "search budget exhausted after " +
                                    std::to_string(budget.nodes_used) +
                                    " nodes");
  }
  const ArraySpec spec = ArraySpec::tight(m, n);
  if (!family_valid("tight_heffter", {*found, spec})) {
    throw error("internal: Heffter search result failed verification");
  }
  store(catalog, key, "tight_heffter", spec, *found);
  return {spec, *found};
}

std::string square_heffter_lookup_key(int m, int t) {
  return t == m ? tight_heffter_key(m, m) : square_heffter_key(m, t);
}

HeffterGrid square_heffter(int n, int k, const SearchLimits& limits,
                           Catalog* catalog) {
  limits.require_valid();
  if (!(3 <= k && k <= n)) {
    throw unsupported_params("square Heffter arrays require 3 <= k <= n");
  }
  if ((n * k) % 4 != 0 && (n * k) % 4 != 3) {
    throw unsupported_params("square Heffter arrays require nk ≡ 0, 3 (mod 4)");
  }
  if (k == n) return tight_heffter(n, n, limits, catalog);

  const std::string key = square_heffter_key(n, k);
  if (auto hit = lookup(catalog, key)) return {hit->spec, hit->grid};

  // Fill patterns are unions of k broken diagonals, tried in lexicographic
  // order of the residue set.
  auto budget = SearchBudget::start(limits);
  std::vector<int> residues(k);
  std::iota(residues.begin(), residues.end(), 0);
  std::optional<SignedGrid> found;
  while (true) {
    std::vector<std::pair<int, int>> cells;
    std::vector<char> on(n, 0);
    for (int d : residues) on[d] = 1;
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        if (on[diagonal_residue(r, c, n)]) cells.emplace_back(r, c);
      }
    }
    auto sub = budget.slice(cells.size() <= 30 ? 600'000 : 4'000'000);
    found = search_heffter_pattern(n, n, cells, sub,
                                   cells.size() <= 30 ? 600'000 : 400'000);
    budget.nodes_used += sub.nodes_used;
    if (budget.nodes_used > budget.node_budget ||
        clock_t_::now() > budget.deadline) {
      budget.exhausted = true;
    }
    if (found || budget.exhausted) break;
    // next k-subset of [0, n-1]
    int i = k - 1;
    while (i >= 0 && residues[i] == n - k + i) --i;
    if (i < 0) break;
    ++residues[i];
    for (int j = i + 1; j < k; ++j) residues[j] = residues[j - 1] + 1;
  }
  if (!found) {
    if (budget.exhausted) {
      throw provider_timeout(key, "search budget exhausted after " +
                                      std::to_string(budget.nodes_used) +
                                      " nodes");
    }
    throw provider_error(key, "no array found over diagonal fill patterns");
  }
  const ArraySpec spec = ArraySpec::square(n, k);
  if (!family_valid("square_heffter", {*found, spec})) {
    throw error("internal: Heffter search result failed verification");
  }
  store(catalog, key, "square_heffter", spec, *found);
  return {spec, *found};
}

}  // namespace sma::providers
