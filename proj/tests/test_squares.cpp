#include <doctest.h>

#include "fixtures/reference_arrays.hpp"
#include "sma/squares.hpp"
#include "sma/tight.hpp"
#include "sma/verify.hpp"

using namespace sma;
using namespace sma::squares;

namespace {

VerificationReport report_of(const SignedGrid& g, int t) {
  return verify(g, ArraySpec::square(g.rows(), t));
}

}  // namespace

TEST_CASE("odd/odd squares") {
  CHECK(sms_odd_odd(7, 5) == fixtures::grid(fixtures::kSms7x5).grid);
  SUBCASE("(3,3) is a valid tight square") {
    CHECK(report_of(sms_odd_odd(3, 3), 3).is_valid_sma);
  }
  SUBCASE("(5,3) verifies") {
    CHECK(report_of(sms_odd_odd(5, 3), 3).is_valid_sma);
  }
}

TEST_CASE("4-diagonal band") {
  CHECK(sms4_diagonal(8) == fixtures::grid(fixtures::kSms8x4).grid);
  SUBCASE("n = 4 gives a tight band") {
    auto rep = report_of(sms4_diagonal(4), 4);
    CHECK(rep.is_valid_sma);
    CHECK(rep.diagonal_width == 4);
  }
  SUBCASE("row n-2 starts at -(n+2)") {
    CHECK(sms4_diagonal(5).at(3, 1) == -7);
  }
  SUBCASE("shiftable diagonal band for a range of n") {
    for (int n = 4; n <= 13; ++n) {
      auto rep = report_of(sms4_diagonal(n), 4);
      CHECK(rep.is_valid_sma);
      CHECK(rep.is_shiftable);
      CHECK(rep.diagonal_width == 4);
    }
  }
  CHECK_THROWS_AS(sms4_diagonal(3), unsupported_params);
}

TEST_CASE("add_four") {
  SUBCASE("SMS(12;4) -> SMS(12;8)") {
    auto g = add_four(sms4_diagonal(12));
    auto rep = report_of(g, 8);
    CHECK(rep.is_valid_sma);
    CHECK(rep.diagonal_width == 8);
    CHECK(rep.is_shiftable);
  }
  SUBCASE("SMS(8;4) -> tight SMS(8;8)") {
    auto g = add_four(sms4_diagonal(8));
    CHECK(report_of(g, 8).is_valid_sma);
  }
  SUBCASE("7-diagonal SMS(10;6) has no room") {
    CHECK_THROWS_AS(add_four(fixtures::grid(fixtures::kSms10x6).grid),
                    composition_error);
  }
  SUBCASE("verified k-diagonal input gives verified (k+4)-diagonal output") {
    for (int n : {9, 11, 12}) {
      auto base = sms4_diagonal(n);
      auto g = add_four(base);
      auto rep = report_of(g, 8);
      CHECK(rep.is_valid_sma);
      CHECK(*rep.diagonal_width <= 8);
    }
  }
}

TEST_CASE("6-diagonal odd squares") {
  CHECK(sms6_odd(7) == fixtures::grid(fixtures::kSms7x6).grid);
  SUBCASE("n = 9 verifies") {
    auto rep = report_of(sms6_odd(9), 6);
    CHECK(rep.is_valid_sma);
    CHECK(rep.is_shiftable);
    CHECK(rep.diagonal_width == 6);
  }
  CHECK_THROWS_AS(sms6_odd(5), unsupported_params);
  CHECK_THROWS_AS(sms6_odd(8), unsupported_params);
}

TEST_CASE("even t in odd n") {
  SUBCASE("(9,8) via one extension") {
    auto rep = report_of(sms_even_t_odd_n(9, 8), 8);
    CHECK(rep.is_valid_sma);
    CHECK(rep.diagonal_width == 8);
    CHECK(rep.is_shiftable);
  }
  SUBCASE("(7,4) is the base band") {
    CHECK(sms_even_t_odd_n(7, 4) == sms4_diagonal(7));
  }
  SUBCASE("(11,10) reaches width 10") {
    auto rep = report_of(sms_even_t_odd_n(11, 10), 10);
    CHECK(rep.is_valid_sma);
    CHECK(*rep.diagonal_width <= 10);
    CHECK(rep.is_shiftable);
  }
  CHECK_THROWS_AS(sms_even_t_odd_n(9, 3), unsupported_params);
}

TEST_CASE("Heffter-based squares") {
  SUBCASE("(6,4) reproduces the worked example from the seed") {
    CHECK(sms_via_heffter(6, 4) == fixtures::grid(fixtures::kSms6x4).grid);
  }
  SUBCASE("(8,4) verifies") {
    CHECK(report_of(sms_via_heffter(8, 4), 4).is_valid_sma);
  }
  SUBCASE("(6,6) is outside this construction") {
    CHECK_THROWS_AS(sms_via_heffter(6, 6), unsupported_params);
  }
}

TEST_CASE("paired partition and the 7-diagonal SMS(n;6)") {
  SUBCASE("class table for n = 10") {
    auto pp = paired_partition(10);
    REQUIRE(pp.classes.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(pp.classes[i] == fixtures::kPaired10[i]);
    const long long sums[] = {46, 47, 47, 46, 46, 47, 47, 47, 46, 46};
    for (int i = 0; i < 10; ++i) {
      long long s = 0;
      for (auto v : pp.classes[i]) s += v;
      CHECK(s == sums[i]);
    }
  }
  SUBCASE("reference pairing reproduces the worked square") {
    PairingOverride pairing{fixtures::kSms10x6Pairing};
    CHECK(sms6_2mod4(10, &pairing) == fixtures::grid(fixtures::kSms10x6).grid);
  }
  SUBCASE("default pairing gives a valid shiftable 7-diagonal square") {
    for (int n : {10, 14}) {
      auto rep = report_of(sms6_2mod4(n), 6);
      CHECK(rep.is_valid_sma);
      CHECK(rep.is_shiftable);
      CHECK(*rep.diagonal_width <= 7);
    }
  }
  SUBCASE("invalid pairings are rejected") {
    PairingOverride bad{{{3, 1}, {10, 9}, {7, 8}, {2, 6}, {4, 5}}};
    CHECK_THROWS_AS(sms6_2mod4(10, &bad), argument_error);
    PairingOverride unequal{{{2, 1}, {10, 3}, {7, 8}, {4, 6}, {9, 5}}};
    CHECK_THROWS_AS(sms6_2mod4(10, &unequal), argument_error);
    // The last class must sit on the positive side of its pair.
    PairingOverride reversed{{{2, 1}, {4, 10}, {7, 8}, {3, 6}, {9, 5}}};
    CHECK_THROWS_AS(sms6_2mod4(10, &reversed), argument_error);
  }
  CHECK_THROWS_AS(sms6_2mod4(12), unsupported_params);
  CHECK_THROWS_AS(sms6_2mod4(6), unsupported_params);
}

TEST_CASE("even/even squares") {
  SUBCASE("(10,6) is (t+1)-diagonal") {
    auto rep = report_of(sms_even_even(10, 6), 6);
    CHECK(rep.is_valid_sma);
    CHECK(*rep.diagonal_width <= 7);
  }
  SUBCASE("(8,4) goes through the Heffter route") {
    auto g = sms_even_even(8, 4);
    CHECK(report_of(g, 4).is_valid_sma);
    CHECK(g.meta.provider_key == "tight_heffter-4x4");
  }
  SUBCASE("(14,10) stays within width 11") {
    auto rep = report_of(sms_even_even(14, 10), 10);
    CHECK(rep.is_valid_sma);
    CHECK(*rep.diagonal_width <= 11);
  }
  CHECK_THROWS_AS(sms_even_even(8, 3), unsupported_params);
}

TEST_CASE("SMS(n;3) for even n") {
  CHECK(sms3_even(6) == fixtures::grid(fixtures::kSms6x3).grid);
  for (int n : {4, 10}) {
    CHECK(report_of(sms3_even(n), 3).is_valid_sma);
  }
  CHECK_THROWS_AS(sms3_even(5), unsupported_params);
}

TEST_CASE("diagonal bases for odd fills") {
  CHECK(sms3_diag(8) == fixtures::grid(fixtures::kSms8x3).grid);
  CHECK(sms5_diag_0mod4(8) == fixtures::grid(fixtures::kSms8x5).grid);
  CHECK(sms5_diag_2mod4(10) == fixtures::grid(fixtures::kSms10x5).grid);
  CHECK(sms7_diag_2mod4(10) == fixtures::grid(fixtures::kSms10x7).grid);
  SUBCASE("other sizes verify at the claimed widths") {
    for (int n : {4, 12, 16}) {
      auto rep = report_of(sms3_diag(n), 3);
      CHECK(rep.is_valid_sma);
      CHECK(*rep.diagonal_width <= 3);
    }
    for (int n : {12, 16}) {
      auto rep = report_of(sms5_diag_0mod4(n), 5);
      CHECK(rep.is_valid_sma);
      CHECK(*rep.diagonal_width <= 5);
    }
    for (int n : {6, 14}) {
      auto rep = report_of(sms5_diag_2mod4(n), 5);
      CHECK(rep.is_valid_sma);
      CHECK(*rep.diagonal_width <= 5);
    }
    for (int n : {14, 18}) {
      auto rep = report_of(sms7_diag_2mod4(n), 7);
      CHECK(rep.is_valid_sma);
      CHECK(*rep.diagonal_width <= 7);
    }
  }
}

TEST_CASE("odd t in even n") {
  SUBCASE("(12,7) is 7-diagonal") {
    auto rep = report_of(sms_odd_t_even_n(12, 7), 7);
    CHECK(rep.is_valid_sma);
    CHECK(*rep.diagonal_width <= 7);
  }
  SUBCASE("(10,9) verifies") {
    CHECK(report_of(sms_odd_t_even_n(10, 9), 9).is_valid_sma);
  }
  SUBCASE("(6,3) falls back to the class-negation construction") {
    CHECK(sms_odd_t_even_n(6, 3) == fixtures::grid(fixtures::kSms6x3).grid);
  }
  CHECK_THROWS_AS(sms_odd_t_even_n(9, 5), unsupported_params);
}

TEST_CASE("square dispatcher") {
  SUBCASE("trivial square") {
    auto g = construct_sms(1, 1);
    CHECK(g.at(1, 1) == 0);
  }
  SUBCASE("(7,5) reproduces the worked square") {
    CHECK(construct_sms(7, 5) == fixtures::grid(fixtures::kSms7x5).grid);
  }
  SUBCASE("nonexistent parameters error") {
    CHECK_THROWS_AS(construct_sms(4, 2), unsupported_params);
    CHECK_THROWS_AS(construct_sms(3, 5), unsupported_params);
  }
  SUBCASE("tight squares delegate") {
    CHECK(construct_sms(6, 6) == fixtures::grid(fixtures::kSma6x6).grid);
  }
}
