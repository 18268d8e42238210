#include "sma/grid_ops.hpp"

#include <string>

namespace sma {

SignedGrid negate(const SignedGrid& g) {
  SignedGrid out(g.rows(), g.cols());
  for (const auto& [rc, v] : g.cells()) out.set(rc.first, rc.second, -v);
  return out;
}

SignedGrid transpose(const SignedGrid& g) {
  SignedGrid out(g.cols(), g.rows());
  for (const auto& [rc, v] : g.cells()) out.set(rc.second, rc.first, v);
  return out;
}

SignedGrid shift_magnitudes(const SignedGrid& g, value_t k) {
  if (k < 0) throw argument_error("shift amount must be nonnegative");
  SignedGrid out(g.rows(), g.cols());
  for (const auto& [rc, v] : g.cells()) {
    if (v == 0) {
      throw argument_error("cannot shift magnitudes of a grid containing 0");
    }
    out.set(rc.first, rc.second, v > 0 ? v + k : v - k);
  }
  return out;
}

SignedGrid permute_columns_cyclic(const SignedGrid& g, int c) {
  const int n = g.cols();
  if (n == 0) return g;
  SignedGrid out(g.rows(), n);
  for (const auto& [rc, v] : g.cells()) {
    int j = (rc.second - 1 + c) % n;
    if (j < 0) j += n;
    out.set(rc.first, j + 1, v);
  }
  return out;
}

SignedGrid paste(const SignedGrid& dest, const SignedGrid& src,
                 int row_offset, int col_offset) {
  SignedGrid out(dest.rows(), dest.cols());
  for (const auto& [rc, v] : dest.cells()) out.set(rc.first, rc.second, v);
  out.meta = dest.meta;
  for (const auto& [rc, v] : src.cells()) {
    const int r = rc.first + row_offset;
    const int c = rc.second + col_offset;
    if (!out.in_range(r, c)) {
      throw composition_error("paste lands out of range at (" +
                              std::to_string(r) + "," + std::to_string(c) +
                              ")");
    }
    if (out.at(r, c)) {
      throw composition_error("paste collision at (" + std::to_string(r) +
                              "," + std::to_string(c) + ")");
    }
    out.set(r, c, v);
  }
  return out;
}

}  // namespace sma
