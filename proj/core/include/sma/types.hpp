#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sma/errors.hpp"

namespace sma {

using value_t = std::int32_t;

/// The quadruple (m, n, s, t): an m x n array with s filled cells in every
/// row and t filled cells in every column.
struct ArraySpec {
  int m = 0;
  int n = 0;
  int s = 0;
  int t = 0;

  static ArraySpec tight(int m, int n) { return ArraySpec{m, n, n, m}; }
  static ArraySpec square(int n, int t) { return ArraySpec{n, n, t, t}; }
  static ArraySpec double_rect(int m, int t) {
    return ArraySpec{m, 2 * m, 2 * t, t};
  }

  bool valid() const {
    return m >= 1 && n >= 1 && s >= 1 && t >= 1 && s <= n && t <= m &&
           static_cast<long long>(m) * s == static_cast<long long>(n) * t;
  }
  void require_valid() const;
  int filled_cells() const { return m * s; }
  ArraySpec transposed() const { return ArraySpec{n, m, t, s}; }

  friend bool operator==(const ArraySpec&, const ArraySpec&) = default;
};

/// The entry set X: symmetric about zero, contains zero iff m*s is odd.
struct SymbolSet {
  bool contains_zero = false;
  value_t bound = 0;  // (ms-1)/2 when ms is odd, ms/2 when even

  int cardinality() const { return (contains_zero ? 1 : 0) + 2 * bound; }
  bool contains(value_t v) const {
    if (v == 0) return contains_zero;
    return v >= -bound && v <= bound;
  }
  std::vector<value_t> ascending() const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;
};

SymbolSet symbol_set(const ArraySpec& spec);

struct GridMeta {
  std::string method;
  std::string provider_key;
  bool empty() const { return method.empty() && provider_key.empty(); }
};

/// Sparse m x n integer grid with 1-based indices. "Empty" is structural:
/// absent cells are not sentinel values. All algebra returns new grids.
class SignedGrid {
 public:
  using cell_map = std::map<std::pair<int, int>, value_t>;

  SignedGrid() = default;
  SignedGrid(int m, int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int filled() const { return static_cast<int>(cells_.size()); }
  bool in_range(int r, int c) const {
    return r >= 1 && r <= m_ && c >= 1 && c <= n_;
  }

  std::optional<value_t> at(int r, int c) const;
  /// Fills an empty in-range cell; duplicate addresses are an error.
  void set(int r, int c, value_t v);

  const cell_map& cells() const { return cells_; }

  GridMeta meta;

  /// Cell-wise equality; metadata is not compared.
  friend bool operator==(const SignedGrid& a, const SignedGrid& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  cell_map cells_;
};

/// Residue class (j - i) mod n of a square grid's broken diagonal.
struct BrokenDiagonal {
  int d = 0;
};

inline int diagonal_residue(int r, int c, int n) {
  int d = (c - r) % n;
  return d < 0 ? d + n : d;
}

}  // namespace sma
