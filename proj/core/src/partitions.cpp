#include "sma/partitions.hpp"

#include <numeric>
#include <string>

namespace sma::squares {

namespace {

int mod1(long long v, int n) {  // into [1, n]
  long long r = v % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

void require_odd_pair(int n, int t) {
  if (!(n >= t && t >= 3 && n % 2 == 1 && t % 2 == 1)) {
    throw unsupported_params("odd partition requires odd n >= t >= 3, got n=" +
                             std::to_string(n) + " t=" + std::to_string(t));
  }
}

// Zero sums, class sizes, and full coverage at a given fill count.
void gate(const PartitionSystem& sys) {
  std::vector<long long> sums(sys.n, 0);
  std::vector<int> sizes(sys.n, 0);
  for (int i = 1; i <= sys.t; ++i) {
    for (int j = 1; j <= sys.n; ++j) {
      const int c = sys.class_of(i, j);
      if (c < 1 || c > sys.n) throw error("partition class out of range");
      sums[c - 1] += sys.element(i, j);
      sizes[c - 1]++;
    }
  }
  for (int c = 0; c < sys.n; ++c) {
    if (sizes[c] != sys.t) {
      throw error("partition class size " + std::to_string(sizes[c]) +
                  " != t at level t=" + std::to_string(sys.t));
    }
    if (sums[c] != 0) {
      throw error("partition class sum nonzero at level t=" +
                  std::to_string(sys.t));
    }
  }
}

void rebuild_jmap(PartitionSystem& sys) {
  sys.jmap.assign(sys.t, std::vector<int>(sys.n, 0));
  for (int i = 1; i <= sys.t; ++i) {
    for (int j = 1; j <= sys.n; ++j) {
      sys.jmap[i - 1][sys.cls[i - 1][j - 1] - 1] = j;
    }
  }
}

// Slope/intercept tables; the built assignment is checked against them.
void fit_slopes(PartitionSystem& sys) {
  const int n = sys.n, t = sys.t;
  sys.k.assign(t + 1, 0);
  sys.b.assign(t + 1, 0);
  sys.k_inv.assign(t + 1, 0);
  sys.b_inv.assign(t + 1, 0);
  for (int i = 1; i <= t; ++i) {
    int ki, bi, kpi, bpi;
    if (i == 1 || i == t) {
      ki = 1;
      kpi = 1;
    } else if (i % 2 == 0) {
      ki = (n - 1) / 2;
      kpi = -2;
    } else {
      ki = (n + 1) / 2;
      kpi = 2;
    }
    if (i == t) {
      bi = (n - 1) / 2;
      bpi = (n + 1) / 2;
    } else if (i % 2 == 0) {
      bi = (n + 1) / 2;
      bpi = 1;
    } else {
      bi = n;
      bpi = 0;
    }
    sys.k[i] = ki;
    sys.b[i] = bi;
    sys.k_inv[i] = kpi;
    sys.b_inv[i] = bpi;
    for (int j = 1; j <= n; ++j) {
      if (sys.class_of(i, j) != mod1(1LL * ki * j + bi, n)) {
        throw error("partition induction deviated from its slope structure");
      }
      if (sys.j_of(i, sys.class_of(i, j)) !=
          mod1(1LL * kpi * sys.class_of(i, j) + bpi, n)) {
        throw error("partition inverse slope mismatch");
      }
    }
  }
}

}  // namespace

std::vector<value_t> PartitionSystem::column_class(int c) const {
  std::vector<value_t> out;
  out.reserve(t);
  for (int i = 1; i <= t; ++i) out.push_back(element(i, j_of(i, c)));
  return out;
}

int PartitionSystem::row_class_index(int r, int i) const {
  return mod1(r + s_shift(i), n);
}

int PartitionSystem::j_row(int i, int r) const {
  return j_of(i, row_class_index(r, i));
}

int PartitionSystem::beta(int i, int r) const {
  return j_row(i, mod1(r + 1, n)) - j_row(i, r) - k_inv[i];
}

std::vector<value_t> PartitionSystem::row_class(int r) const {
  std::vector<value_t> out;
  out.reserve(t);
  for (int i = 1; i <= t; ++i) out.push_back(element(i, j_row(i, r)));
  return out;
}

PartitionSystem odd_partition_columns(int n, int t) {
  require_odd_pair(n, t);

  // t = 3 base: C_c = {(c-1)-(3n-1)/2, -(n-1)/2+x_c,
  //                    -(c-1)+(3n-1)/2-x_c+(n-1)/2}.
  PartitionSystem sys;
  sys.n = n;
  sys.t = 3;
  sys.delta.assign(3, 0);
  for (int i = 1; i <= 3; ++i) sys.delta[i - 1] = -(3 * n + 1) / 2 + (i - 1) * n;
  sys.cls.assign(3, std::vector<int>(n, 0));
  sys.x.assign(n + 1, 0);
  for (int c = 1; c <= n; ++c) {
    const int xc = mod1(2LL * ((3 * n - 1) / 2 - (c - 1)) - 1, n) % n;
    sys.x[c] = xc;
    const value_t e1 = (c - 1) - (3 * n - 1) / 2;
    const value_t e2 = -(n - 1) / 2 + xc;
    const value_t e3 = -(c - 1) + (3 * n - 1) / 2 - xc + (n - 1) / 2;
    for (value_t e : {e1, e2, e3}) {
      int i = 1;
      while (e > sys.delta[i - 1] + n) ++i;
      const int j = e - sys.delta[i - 1];
      if (sys.cls[i - 1][j - 1] != 0) throw error("base partition overlap");
      sys.cls[i - 1][j - 1] = c;
    }
  }
  rebuild_jmap(sys);
  gate(sys);

  // Induction t -> t+2: shift D_1..D_{t-1} down by n and D_t up by n, then
  // complete every class with two elements of the freed middle range, the
  // first n placed with skip (n+1)/2 and the next n with skip (n-1)/2.
  while (sys.t < t) {
    const int told = sys.t;
    PartitionSystem next;
    next.n = n;
    next.t = told + 2;
    next.x = sys.x;
    next.delta.assign(next.t, 0);
    for (int i = 1; i <= next.t; ++i) {
      next.delta[i - 1] = -(n * next.t + 1) / 2 + (i - 1) * n;
    }
    next.cls.assign(next.t, std::vector<int>(n, 0));
    for (int i = 1; i <= told - 1; ++i) next.cls[i - 1] = sys.cls[i - 1];
    next.cls[next.t - 1] = sys.cls[told - 1];
    for (int j = 1; j <= n; ++j) {
      next.cls[told - 1][j - 1] = mod1(1LL * (n + 1) / 2 * j + n, n);
      next.cls[told][j - 1] = mod1(1LL * (n - 1) / 2 * j + (n + 1) / 2, n);
    }
    rebuild_jmap(next);
    gate(next);
    sys = std::move(next);
  }

  fit_slopes(sys);
  return sys;
}

PartitionSystem odd_partition_rows(PartitionSystem system) {
  if (system.k.empty()) throw argument_error("column classes must be built");
  system.rows_built = true;
  for (int r = 1; r <= system.n; ++r) {
    long long sum = 0;
    long long beta_sum = 0;
    for (int i = 1; i <= system.t; ++i) {
      sum += system.element(i, system.j_row(i, r));
      beta_sum += system.beta(i, r);
    }
    if (sum != 0) throw error("row class sum nonzero");
    if (beta_sum != 0) throw error("break table not row-balanced");
  }
  return system;
}

SignedGrid dc_array(const PartitionSystem& sys) {
  SignedGrid g(sys.t, sys.n);
  for (int i = 1; i <= sys.t; ++i) {
    for (int c = 1; c <= sys.n; ++c) {
      g.set(i, c, sys.element(i, sys.j_of(i, c)));
    }
  }
  return g;
}

}  // namespace sma::squares
