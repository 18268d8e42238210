#include "sma/types.hpp"

#include <string>

namespace sma {

void ArraySpec::require_valid() const {
  if (!valid()) {
    throw spec_error("invalid array spec (" + std::to_string(m) + "," +
                     std::to_string(n) + "," + std::to_string(s) + "," +
                     std::to_string(t) +
                     "): need 1<=s<=n, 1<=t<=m and m*s == n*t");
  }
}

std::vector<value_t> SymbolSet::ascending() const {
  std::vector<value_t> out;
  out.reserve(cardinality());
  for (value_t v = -bound; v <= bound; ++v) {
    if (v == 0 && !contains_zero) continue;
    out.push_back(v);
  }
  return out;
}

SymbolSet symbol_set(const ArraySpec& spec) {
  spec.require_valid();
  const int ms = spec.m * spec.s;
  SymbolSet x;
  x.contains_zero = (ms % 2 == 1);
  x.bound = x.contains_zero ? (ms - 1) / 2 : ms / 2;
  return x;
}

SignedGrid::SignedGrid(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) {
    throw argument_error("grid dimensions must be nonnegative");
  }
}

std::optional<value_t> SignedGrid::at(int r, int c) const {
  auto it = cells_.find({r, c});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

void SignedGrid::set(int r, int c, value_t v) {
  if (!in_range(r, c)) {
    throw argument_error("cell (" + std::to_string(r) + "," +
                         std::to_string(c) + ") out of range for " +
                         std::to_string(m_) + "x" + std::to_string(n_) +
                         " grid");
  }
  auto [it, inserted] = cells_.emplace(std::make_pair(r, c), v);
  (void)it;
  if (!inserted) {
    throw composition_error("cell (" + std::to_string(r) + "," +
                            std::to_string(c) + ") filled twice");
  }
}

}  // namespace sma
