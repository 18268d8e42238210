#include <doctest.h>

#include "fixtures/reference_arrays.hpp"
#include "sma/grid_ops.hpp"
#include "sma/types.hpp"
#include "sma/verify.hpp"

using namespace sma;

namespace {

VerificationReport check(const char* text) {
  auto gf = fixtures::grid(text);
  return verify(gf.grid, gf.spec);
}

}  // namespace

TEST_CASE("symbol sets") {
  SUBCASE("even case 3x4") {
    auto x = symbol_set(ArraySpec::tight(3, 4));
    CHECK(!x.contains_zero);
    CHECK(x.bound == 6);
    CHECK(x.cardinality() == 12);
  }
  SUBCASE("trivial 1x1") {
    auto x = symbol_set(ArraySpec{1, 1, 1, 1});
    CHECK(x.contains_zero);
    CHECK(x.bound == 0);
    CHECK(x.ascending() == std::vector<value_t>{0});
  }
  SUBCASE("odd case 5x5 t=3") {
    auto x = symbol_set(ArraySpec::square(5, 3));
    CHECK(x.contains_zero);
    CHECK(x.bound == 7);
    CHECK(x.cardinality() == 15);
  }
  SUBCASE("invalid specs rejected") {
    CHECK_THROWS_AS(symbol_set(ArraySpec{3, 4, 4, 2}), spec_error);
    CHECK_THROWS_AS(symbol_set(ArraySpec{3, 4, 5, 3}), spec_error);
    CHECK_THROWS_AS(symbol_set(ArraySpec{0, 4, 4, 0}), spec_error);
  }
}

TEST_CASE("verify on worked examples") {
  SUBCASE("SMA(3,4) is valid but not shiftable") {
    auto rep = check(fixtures::kSma3x4);
    CHECK(rep.is_valid_sma);
    CHECK(!rep.is_shiftable);
    CHECK(!rep.diagonal_width.has_value());
  }
  SUBCASE("SMA(2,4) is valid and shiftable") {
    auto rep = check(fixtures::kSma2x4);
    CHECK(rep.is_valid_sma);
    CHECK(rep.is_shiftable);
  }
  SUBCASE("single zero cell") {
    SignedGrid g(1, 1);
    g.set(1, 1, 0);
    CHECK(verify(g, ArraySpec{1, 1, 1, 1}).is_valid_sma);
  }
  SUBCASE("diagonal SMS(5;3)") {
    auto rep = check(fixtures::kSms5x3);
    CHECK(rep.is_valid_sma);
    CHECK(rep.diagonal_width == 3);
  }
  SUBCASE("dimension mismatch") {
    auto gf = fixtures::grid(fixtures::kSma3x4);
    CHECK_THROWS_AS(verify(gf.grid, ArraySpec::tight(4, 3)), argument_error);
  }
  SUBCASE("report invariant: validity breaks with sums") {
    auto gf = fixtures::grid(fixtures::kSma3x4);
    SignedGrid bad(3, 4);
    for (const auto& [rc, v] : gf.grid.cells()) {
      bad.set(rc.first, rc.second, rc == std::make_pair(1, 1) ? v + 1 : v);
    }
    auto rep = verify(bad, gf.spec);
    CHECK(!rep.is_valid_sma);
    CHECK(rep.row_sums[0] == 1);
    CHECK(rep.col_sums[0] == 1);
    CHECK(!rep.symbol_coverage_ok);
  }
}

TEST_CASE("diagonal width") {
  SUBCASE("SMS(8;4) band") {
    CHECK(diagonal_width(fixtures::grid(fixtures::kSms8x4).grid) == 4);
  }
  SUBCASE("full square") {
    SignedGrid g(4, 4);
    int v = 0;
    for (int r = 1; r <= 4; ++r) {
      for (int c = 1; c <= 4; ++c) g.set(r, c, ++v);
    }
    CHECK(diagonal_width(g) == 4);
  }
  SUBCASE("7-diagonal SMS(10;6)") {
    CHECK(diagonal_width(fixtures::grid(fixtures::kSms10x6).grid) == 7);
  }
  SUBCASE("empty grid is 0") { CHECK(diagonal_width(SignedGrid(5, 5)) == 0); }
  SUBCASE("non-square rejected") {
    CHECK_THROWS_AS(diagonal_width(SignedGrid(2, 3)), argument_error);
  }
  SUBCASE("brute-force window agreement") {
    auto g = fixtures::grid(fixtures::kSms7x5).grid;
    const int n = g.rows();
    std::vector<char> present(n, 0);
    for (const auto& [rc, v] : g.cells()) {
      present[diagonal_residue(rc.first, rc.second, n)] = 1;
    }
    int best = n;
    for (int start = 0; start < n; ++start) {
      for (int width = 1; width <= n; ++width) {
        bool covers = true;
        for (int d = 0; d < n; ++d) {
          if (present[d] && (d - start + n) % n >= width) covers = false;
        }
        if (covers) {
          best = std::min(best, width);
          break;
        }
      }
    }
    CHECK(diagonal_width(g) == best);
  }
}

TEST_CASE("grid algebra") {
  auto fig2 = fixtures::grid(fixtures::kSma2x4);

  SUBCASE("shift maps the 2x4 block onto magnitudes 5..8") {
    auto shifted = shift_magnitudes(fig2.grid, 4);
    CHECK(shifted.at(1, 1) == 5);
    CHECK(shifted.at(1, 2) == -6);
    CHECK(shifted.at(1, 3) == -7);
    CHECK(shifted.at(1, 4) == 8);
  }
  SUBCASE("shift rejects zero entries and negative amounts") {
    SignedGrid g(1, 1);
    g.set(1, 1, 0);
    CHECK_THROWS_AS(shift_magnitudes(g, 1), argument_error);
    CHECK_THROWS_AS(shift_magnitudes(fig2.grid, -1), argument_error);
  }
  SUBCASE("negate keeps validity") {
    CHECK(verify(negate(fig2.grid), fig2.spec).is_valid_sma);
  }
  SUBCASE("transpose keeps validity against the transposed spec") {
    CHECK(verify(transpose(fig2.grid), fig2.spec.transposed()).is_valid_sma);
  }
  SUBCASE("shifted grids keep zero sums") {
    for (value_t k : {0, 1, 4, 9}) {
      auto s = shift_magnitudes(fig2.grid, k);
      auto rep = verify(s, fig2.spec);
      for (auto v : rep.row_sums) CHECK(v == 0);
      for (auto v : rep.col_sums) CHECK(v == 0);
    }
  }
  SUBCASE("cyclic column permutation preserves validity and shifts residues") {
    auto g = fixtures::grid(fixtures::kSms8x4).grid;
    for (int c : {1, 2, 5, 7, 8, -3}) {
      auto p = permute_columns_cyclic(g, c);
      CHECK(verify(p, ArraySpec::square(8, 4)).is_valid_sma);
      CHECK(diagonal_width(p) == 4);
      for (const auto& [rc, v] : g.cells()) {
        int j = (rc.second - 1 + c) % 8;
        if (j < 0) j += 8;
        CHECK(p.at(rc.first, j + 1) == v);
      }
    }
  }
  SUBCASE("paste detects collisions and range errors") {
    SignedGrid dest(2, 2);
    dest.set(1, 1, 5);
    SignedGrid src(1, 1);
    src.set(1, 1, 7);
    CHECK_THROWS_AS(paste(dest, src, 0, 0), composition_error);
    CHECK_THROWS_AS(paste(dest, src, 2, 0), composition_error);
    auto ok = paste(dest, src, 1, 1);
    CHECK(ok.at(2, 2) == 7);
    CHECK(ok.at(1, 1) == 5);
  }
  SUBCASE("duplicate cell addresses are rejected") {
    SignedGrid g(2, 2);
    g.set(1, 1, 3);
    CHECK_THROWS_AS(g.set(1, 1, 4), composition_error);
    CHECK_THROWS_AS(g.set(3, 1, 4), argument_error);
  }
}
