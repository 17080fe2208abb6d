#include <doctest.h>

#include <stdexcept>

#include <vwseries/hilb.hpp>
#include <vwseries/qseries.hpp>

#include "oracles.hpp"

using namespace vwseries;
namespace oracle = vwseries::test_oracles;

TEST_CASE("negative point counts contribute nothing") {
  CHECK(hilb_euler(24, -1) == Int(0));
  CHECK(hilb_euler(24, -100) == Int(0));
  CHECK(hilb_euler(24, 0) == Int(1));
}

TEST_CASE("one point recovers the surface Euler number") {
  CHECK(hilb_euler(24, 1) == Int(24));
  CHECK(hilb_euler(18, 1) == Int(18));
  CHECK(hilb_euler(-6, 1) == Int(-6));
  CHECK(hilb_euler(1, 1) == Int(1));
}

TEST_CASE("frozen Euler numbers for the K3 series") {
  const char* expected[] = {"1",          "24",          "324",          "3200",
                            "25650",      "176256",      "1073720",      "5930496",
                            "30178575",   "143184000",   "639249300",    "2705114880",
                            "10914317934", "42189811200", "156883829400", "563116739584"};
  for (long m = 0; m < 16; ++m) {
    CHECK(hilb_euler(24, m) == Int(expected[m]));
  }
}

TEST_CASE("recurrence agrees with the series-inversion route") {
  // Two genuinely different algorithms: the divisor-sum recurrence against
  // pow() of the truncated Euler product.
  for (long e : {1L, 2L, 24L, -24L, 18L}) {
    const QSeries product = euler_product_power(e, 20);
    for (long m = 0; m < 20; ++m) {
      CHECK(Rational(hilb_euler(e, m)) == product.coeff(Rational(m)));
    }
  }
}

TEST_CASE("recurrence agrees with the brute-force oracle") {
  const auto brute = oracle::euler_product_brute(24, 10);
  for (long m = 0; m < 10; ++m) {
    CHECK(hilb_euler(24, m) == brute[static_cast<std::size_t>(m)]);
  }
  // partition numbers: Euler number 1
  for (long n = 0; n <= 10; ++n) {
    CHECK(hilb_euler(1, n) == oracle::partition_count_brute(n));
  }
}

TEST_CASE("hilb_series exposes the same data as a q-series") {
  const QSeries s = hilb_series(24, 6);
  CHECK(s.step_den() == 1);
  CHECK(s.cutoff() == Rational(6));
  CHECK(s.coeff(Rational(0)) == Rational(1));
  CHECK(s.coeff(Rational(5)) == Rational(176256));
  CHECK_THROWS_AS(s.coeff(Rational(6)), std::out_of_range);
  CHECK_THROWS_AS(hilb_series(24, -1), std::invalid_argument);
  CHECK(hilb_series(24, 0) == QSeries::unknown(Rational(0)));
}
