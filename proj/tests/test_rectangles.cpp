#include <doctest.h>

#include "fixtures/reference_arrays.hpp"
#include "sma/rectangles.hpp"
#include "sma/squares.hpp"
#include "sma/tight.hpp"
#include "sma/verify.hpp"

using namespace sma;
using namespace sma::rects;

TEST_CASE("shiftable squares") {
  CHECK(shiftable_sms(7, 6) == fixtures::grid(fixtures::kSms7x6).grid);
  CHECK(shiftable_sms(8, 4) == fixtures::grid(fixtures::kSms8x4).grid);
  CHECK(shiftable_sms(4, 4) == fixtures::grid(fixtures::kSma4x4).grid);
  CHECK(shiftable_sms(10, 6) == squares::sms6_2mod4(10));
  SUBCASE("outputs are shiftable") {
    for (auto [m, t] : {std::pair{9, 4}, {8, 8}, {9, 8}, {10, 6}, {11, 6}}) {
      auto rep = verify(shiftable_sms(m, t), ArraySpec::square(m, t));
      CHECK(rep.is_valid_sma);
      CHECK(rep.is_shiftable);
    }
  }
  CHECK_THROWS_AS(shiftable_sms(6, 3), unsupported_params);
  CHECK_THROWS_AS(shiftable_sms(7, 2), unsupported_params);
  CHECK_THROWS_AS(shiftable_sms(4, 6), unsupported_params);
  CHECK_THROWS_AS(shiftable_sms(8, 6), unsupported_params);
}

TEST_CASE("double rectangle via Heffter") {
  SUBCASE("(4,3) reproduces the worked rectangle from its seed") {
    CHECK(sma_double_via_heffter(4, 3) ==
          fixtures::grid(fixtures::kSma4x8).grid);
  }
  SUBCASE("(4,4) and (5,4) verify") {
    for (auto [m, t] : {std::pair{4, 4}, {5, 4}}) {
      auto g = sma_double_via_heffter(m, t);
      CHECK(verify(g, ArraySpec::double_rect(m, t)).is_valid_sma);
    }
  }
  SUBCASE("right half is the cell-wise negation of the left") {
    auto g = sma_double_via_heffter(5, 4);
    for (const auto& [rc, v] : g.cells()) {
      if (rc.second <= 5) CHECK(g.at(rc.first, rc.second + 5) == -v);
    }
  }
  CHECK_THROWS_AS(sma_double_via_heffter(6, 5), unsupported_params);
}

TEST_CASE("double rectangle via shiftable square") {
  SUBCASE("(7,6) reproduces the worked rectangle") {
    CHECK(sma_double_via_shiftable(7, 6) ==
          fixtures::grid(fixtures::kSma7x14).grid);
  }
  SUBCASE("(8,4): right half magnitudes are 17..32") {
    auto g = sma_double_via_shiftable(8, 4);
    CHECK(verify(g, ArraySpec::double_rect(8, 4)).is_valid_sma);
    for (const auto& [rc, v] : g.cells()) {
      if (rc.second > 8) {
        CHECK(std::abs(v) >= 17);
        CHECK(std::abs(v) <= 32);
      }
    }
  }
  SUBCASE("(9,6) verifies with the outward-shift relation") {
    auto g = sma_double_via_shiftable(9, 6);
    CHECK(verify(g, ArraySpec::double_rect(9, 6)).is_valid_sma);
    for (const auto& [rc, v] : g.cells()) {
      if (rc.second <= 9) {
        CHECK(g.at(rc.first, rc.second + 9) == (v > 0 ? v + 27 : v - 27));
      }
    }
  }
}

TEST_CASE("double rectangle dispatcher") {
  SUBCASE("(4,3) takes the Heffter route") {
    auto g = construct_double_rectangle(4, 3);
    CHECK(g.meta.method == "heffter");
    CHECK(g == fixtures::grid(fixtures::kSma4x8).grid);
  }
  SUBCASE("(7,6) takes the shiftable route") {
    auto g = construct_double_rectangle(7, 6);
    CHECK(g.meta.method == "shiftable");
    CHECK(g == fixtures::grid(fixtures::kSma7x14).grid);
  }
  SUBCASE("open cells error") {
    CHECK_THROWS_AS(construct_double_rectangle(5, 5), unsupported_params);
    CHECK_THROWS_AS(construct_double_rectangle(7, 7), unsupported_params);
  }
  SUBCASE("half patterns coincide up to the column offset") {
    auto g = construct_double_rectangle(6, 4);
    CHECK(verify(g, ArraySpec::double_rect(6, 4)).is_valid_sma);
    for (const auto& [rc, v] : g.cells()) {
      (void)v;
      if (rc.second <= 6) {
        CHECK(g.at(rc.first, rc.second + 6).has_value());
      }
    }
  }
}
