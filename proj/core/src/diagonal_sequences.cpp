#include "sma/diagonal_sequences.hpp"

#include <string>

namespace sma::squares {

namespace {

void require_residue(int n, int mod4, int min_n, const char* what) {
  if (n < min_n || n % 4 != mod4) {
    throw unsupported_params(std::string(what) + " requires n ≡ " +
                             std::to_string(mod4) + " (mod 4), n >= " +
                             std::to_string(min_n));
  }
}

}  // namespace

long long DiagonalSequences::window_sum_S(int i) const {
  long long sum = 0;
  for (int w = 0; w < t; ++w) {
    // a_{i-(t-1)/2+...}: the first (t-1)/2 sequences trail behind i.
    const int lag = (t - 1) / 2 - w;
    sum += at(w, i - (lag > 0 ? lag : 0));
  }
  return sum;
}

long long DiagonalSequences::window_sum_S_prime(int i) const {
  long long sum = 0;
  for (int w = 0; w < t; ++w) {
    const int lag = w - (t - 1) / 2;
    sum += at(w, i - (lag > 0 ? lag : 0));
  }
  return sum;
}

DiagonalSequences diag_sequences3(int n) {
  require_residue(n, 0, 4, "the 3-sequence family");
  const int k = n / 4;
  DiagonalSequences ds;
  ds.n = n;
  ds.t = 3;
  std::vector<value_t> a(n), b(n), c(n);
  for (int i = 1; i <= n; ++i) {
    value_t av;
    if (i % 2 == 1) {
      av = i < 2 * k ? -2 - 3 * k - 3 * (i - 1) / 2
                     : -2 + 9 * k - 3 * (i - 1) / 2;
    } else {
      av = i < 4 * k ? -2 + 3 * k - 3 * (i / 2) : -2 + 3 * k;
    }
    a[i - 1] = av;
    if (i <= 2 * k) {
      b[i - 1] = 3 * i;
    } else if (i < 4 * k) {
      b[i - 1] = -12 * k + 3 * i;
    } else {
      b[i - 1] = -6 * k;
    }
    c[i - 1] = av + 1;
  }
  ds.seq = {std::move(a), std::move(b), std::move(c)};
  return ds;
}

DiagonalSequences diag_sequences5(int n) {
  require_residue(n, 0, 8, "the 5-sequence family");
  const int k = n / 4;
  DiagonalSequences ds;
  ds.n = n;
  ds.t = 5;
  std::vector<value_t> a(n), b(n), c(n), d(n), e(n);
  for (int i = 1; i <= n; ++i) {
    value_t av;
    if (i == 4 * k - 3) {
      av = -8;
    } else if (i == 4 * k - 2) {
      av = -3;
    } else if (i == 4 * k) {
      av = 10 * k - 8;
    } else if (i % 4 == 1) {
      av = -10 * ((i - 1) / 4) - 18;
    } else if (i % 4 == 2) {
      av = -10 * ((i - 2) / 4) - 13;
    } else if (i % 4 == 3) {
      av = 10 * k - 10 * ((i - 3) / 4) - 3;
    } else {
      av = 10 * k - 10 * ((i - 4) / 4) - 18;
    }
    a[i - 1] = av;

    value_t bv;
    if (i == 4 * k - 3) {
      bv = -5 * k + 6;
    } else if (i == 4 * k - 1) {
      bv = -5 * k + 1;
    } else if (i % 2 == 1) {
      const int j = (i - 1) / 2;
      bv = j < k ? -5 * k - 5 * j - 4 : 15 * k - 5 * j - 4;
    } else {
      bv = -5 * k + 5 * ((i - 2) / 2) + 11;
    }
    b[i - 1] = bv;

    value_t cv;
    if (i <= 2 * k) {
      cv = 5 * i;
    } else if (i < 4 * k) {
      cv = -20 * k + 5 * i;
    } else {
      cv = -10 * k;
    }
    c[i - 1] = cv;
    d[i - 1] = bv + 3;
    e[i - 1] = av + 1;
  }
  ds.seq = {std::move(a), std::move(b), std::move(c), std::move(d),
            std::move(e)};
  return ds;
}

DiagonalSequences diag_sequences7(int n) {
  require_residue(n, 2, 10, "the 7-sequence family");
  const int k = (n - 2) / 4;
  DiagonalSequences ds;
  ds.n = n;
  ds.t = 7;
  std::vector<value_t> a(n), b(n), c(n), d(n), e(n), f(n), g(n);
  for (int i = 1; i <= n; ++i) {
    const value_t av =
        i <= 2 * k + 1 ? -7 * i + 3 : 28 * k - 7 * i + 17;
    const value_t bv =
        i <= 2 * k + 2 ? 7 * i - 12 : -28 * k + 7 * i - 26;
    value_t cv;
    if (i == 4 * k + 2) {
      cv = 7 * k + 1;
    } else if (i % 2 == 0) {
      cv = 7 * k - 7 * (i / 2) + 1;
    } else {
      const int j = (i - 1) / 2;
      cv = i <= 2 * k + 1 ? -7 * k - 7 * j - 6 : 21 * k - 7 * j + 8;
    }
    value_t dv;
    if (i <= 2 * k + 1) {
      dv = 7 * i;
    } else if (i < 4 * k + 2) {
      dv = -28 * k + 7 * i - 14;
    } else {
      dv = -14 * k - 7;
    }
    a[i - 1] = av;
    b[i - 1] = bv;
    c[i - 1] = cv;
    d[i - 1] = dv;
    e[i - 1] = cv + 5;
    f[i - 1] = bv + 3;
    g[i - 1] = av + 1;
  }
  ds.seq = {std::move(a), std::move(b), std::move(c), std::move(d),
            std::move(e), std::move(f), std::move(g)};
  return ds;
}

}  // namespace sma::squares
