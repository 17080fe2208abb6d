#include <doctest.h>

#include <random>
#include <stdexcept>

#include <vwseries/qseries.hpp>

#include "oracles.hpp"

using namespace vwseries;
namespace oracle = vwseries::test_oracles;

namespace {

// Truncate both series to the smaller cutoff and compare: the right notion
// of equality for identities whose two sides track different order bounds.
bool values_equal(const QSeries& a, const QSeries& b) {
  const Rational t = a.cutoff() < b.cutoff() ? a.cutoff() : b.cutoff();
  return a.truncated(t) == b.truncated(t);
}

// forced_den = 0 picks a random grid; pass a positive value to pin the grid,
// e.g. for properties that are only stated for series on a common grid.
QSeries random_series(std::mt19937_64& rng, bool nonzero_lead = false, long forced_den = 0) {
  const long step_dens[] = {1, 1, 2, 3};
  const long D = forced_den > 0 ? forced_den : step_dens[rng() % 4];
  QSeries::TermMap terms;
  const int nterms = static_cast<int>(rng() % 9);
  for (int i = 0; i < nterms; ++i) {
    const QSeries::Key k = static_cast<QSeries::Key>(rng() % 19) - 6;
    const long num = static_cast<long>(rng() % 13) - 6;
    const long den = 1 + static_cast<long>(rng() % 4);
    if (num == 0) continue;
    terms[k] = Rational(num, den);
  }
  if (nonzero_lead && terms.empty()) terms[0] = Rational(1);
  const QSeries::Key order = (terms.empty() ? 0 : terms.rbegin()->first) +
                             1 + static_cast<QSeries::Key>(rng() % 6);
  return QSeries(D, order, std::move(terms));
}

}  // namespace

TEST_CASE("construction enforces the representation invariants") {
  CHECK_THROWS_AS(QSeries(0, 1, {}), std::invalid_argument);   // step_den >= 1
  CHECK_THROWS_AS(QSeries(-2, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(QSeries(1, 0, {{0, Rational(1)}}), std::invalid_argument);  // key >= order
  CHECK_THROWS_AS(QSeries(1, 3, {{3, Rational(1)}}), std::invalid_argument);
  // zero coefficients are pruned silently
  CHECK(QSeries(1, 3, {{1, Rational(0)}}) == QSeries::unknown(Rational(3)));
}

TEST_CASE("monomial, one and unknown") {
  const QSeries one = QSeries::one(Rational(5));
  CHECK(one.coeff(Rational(0)) == Rational(1));
  CHECK(one.coeff(Rational(3)) == Rational(0));
  CHECK(one.cutoff() == Rational(5));

  const QSeries m = QSeries::monomial(Rational(3, 2), Rational(1, 2), Rational(4));
  CHECK(m.step_den() == 2);
  CHECK(m.coeff(Rational(1, 2)) == Rational(3, 2));
  CHECK(m.coeff(Rational(1, 3)) == Rational(0));  // off-grid below cutoff is known zero
  CHECK_THROWS_AS(m.coeff(Rational(4)), std::out_of_range);
  CHECK_THROWS_AS(m.coeff(Rational(9, 2)), std::out_of_range);

  CHECK_FALSE(QSeries::unknown(Rational(2)).has_terms());
  CHECK_THROWS_AS(QSeries::unknown(Rational(2)).lead_exponent(), std::domain_error);
}

TEST_CASE("addition aligns mixed exponent grids") {
  const QSeries a = QSeries::monomial(Rational(1), Rational(1, 2), Rational(3));
  const QSeries b = QSeries::monomial(Rational(2), Rational(1, 3), Rational(2));
  const QSeries s = a + b;
  CHECK(s.step_den() == 6);
  CHECK(s.cutoff() == Rational(2));  // min of the two cutoffs
  CHECK(s.coeff(Rational(1, 2)) == Rational(1));
  CHECK(s.coeff(Rational(1, 3)) == Rational(2));
  CHECK(values_equal(s, b + a));
  // cancellation: a - a is the zero series with a's cutoff
  CHECK((a - a) == QSeries::unknown(Rational(3)));
}

TEST_CASE("product order rule uses leading exponents") {
  // (q^2 + O(q^5)) * (q^3 + O(q^4)) = q^5 + O(q^6)
  const QSeries a(1, 5, {{2, Rational(1)}});
  const QSeries b(1, 4, {{3, Rational(1)}});
  const QSeries p = a * b;
  CHECK(p.cutoff() == Rational(6));
  CHECK(p.coeff(Rational(5)) == Rational(1));
  CHECK_THROWS_AS(p.coeff(Rational(6)), std::out_of_range);
}

TEST_CASE("multiplying by a termless series is rejected") {
  const QSeries empty = QSeries::unknown(Rational(4));
  const QSeries a = QSeries::one(Rational(4));
  CHECK_THROWS_AS(a * empty, std::domain_error);   // no sound order bound exists
  CHECK_THROWS_AS(inverse(empty), std::domain_error);
}

TEST_CASE("scalar multiplication") {
  const QSeries a(1, 4, {{0, Rational(2)}, {2, Rational(-3)}});
  const QSeries twice = a * Rational(2);
  CHECK(twice.coeff(Rational(0)) == Rational(4));
  CHECK(twice.coeff(Rational(2)) == Rational(-6));
  CHECK(values_equal(Rational(2) * a, twice));
  CHECK((a * Rational(0)) == QSeries::unknown(Rational(4)));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int trial = 0; trial < 60; ++trial) {
    const QSeries a = random_series(rng);
    const QSeries b = random_series(rng);
    const QSeries c = random_series(rng);
    CHECK(values_equal((a + b) + c, a + (b + c)));
    CHECK(values_equal(a + b, b + a));
    CHECK(values_equal(a - b, a + (-b)));
    if (a.has_terms() && b.has_terms()) {
      CHECK(values_equal(a * b, b * a));
      if (c.has_terms()) {
        CHECK(values_equal((a * b) * c, a * (b * c)));
        // distributivity, guarded against b + c losing all terms
        const QSeries bc = b + c;
        if (bc.has_terms()) CHECK(values_equal(a * bc, a * b + a * c));
      }
    }
  }
}

TEST_CASE("inverse is a two-sided inverse on the known range") {
  std::mt19937_64 rng(0x51ed270b1ULL);
  for (int trial = 0; trial < 40; ++trial) {
    QSeries a = random_series(rng, true);
    const QSeries inv = inverse(a);
    const QSeries prod = a * inv;
    const Rational t = prod.cutoff();
    if (t <= Rational(0)) continue;  // nothing knowable; order bound can be <= 0
    CHECK(values_equal(prod, QSeries::one(t)));
    CHECK(values_equal(inv * a, QSeries::one(t)));
  }
}

TEST_CASE("inverse of a unit monomial") {
  const QSeries q = QSeries::monomial(Rational(1), Rational(1), Rational(5));
  const QSeries qinv = inverse(q);
  CHECK(qinv.coeff(Rational(-1)) == Rational(1));
  CHECK(qinv.cutoff() == Rational(3));  // 5 - 2*1
}

TEST_CASE("pow matches repeated multiplication and inverts cleanly") {
  std::mt19937_64 rng(0xabcdef12ULL);
  for (int trial = 0; trial < 25; ++trial) {
    const QSeries a = random_series(rng, true);
    CHECK(values_equal(pow(a, 3), a * a * a));
    const QSeries unit = pow(a, -2) * a * a;
    if (unit.cutoff() > Rational(0)) CHECK(values_equal(unit, QSeries::one(unit.cutoff())));
    const QSeries p0 = pow(a, 0);
    CHECK(values_equal(p0, QSeries::one(p0.cutoff())));
  }
}

TEST_CASE("binomial series: pow((1-q), -24)") {
  const QSeries one_minus_q =
      QSeries::one(Rational(10)) - QSeries::monomial(Rational(1), Rational(1), Rational(10));
  const QSeries s = pow(one_minus_q, -24);
  // coefficient of q^k is C(24 + k - 1, k)
  CHECK(s.coeff(Rational(0)) == Rational(1));
  CHECK(s.coeff(Rational(1)) == Rational(24));
  CHECK(s.coeff(Rational(2)) == Rational(300));  // C(25,2)
  for (unsigned long k = 0; k <= 7; ++k) {
    CHECK(s.coeff(Rational(static_cast<long>(k))) == Rational(oracle::binomial(23 + k, k)));
  }
}

TEST_CASE("euler_product_power matches the brute-force oracle") {
  const auto brute24 = oracle::euler_product_brute(24, 12);
  const QSeries fast24 = euler_product_power(24, 12);
  for (std::size_t m = 0; m < 12; ++m) {
    CHECK(fast24.coeff(Rational(static_cast<long>(m))) == Rational(brute24[m]));
  }
  const auto brute_neg = oracle::euler_product_brute(-24, 9);
  const QSeries fast_neg = euler_product_power(-24, 9);
  for (std::size_t m = 0; m < 9; ++m) {
    CHECK(fast_neg.coeff(Rational(static_cast<long>(m))) == Rational(brute_neg[m]));
  }
}

TEST_CASE("partition generating function agrees with direct counting") {
  const QSeries parts = euler_product_power(1, 11);
  for (long n = 0; n <= 10; ++n) {
    CHECK(parts.coeff(Rational(n)) == Rational(oracle::partition_count_brute(n)));
  }
}

TEST_CASE("frozen coefficients of the Euler-number-24 product") {
  const char* expected[] = {"1",         "24",         "324",         "3200",
                            "25650",     "176256",     "1073720",     "5930496",
                            "30178575",  "143184000",  "639249300",   "2705114880",
                            "10914317934", "42189811200", "156883829400", "563116739584"};
  const QSeries s = euler_product_power(24, 16);
  for (long m = 0; m < 16; ++m) {
    CHECK(s.coeff(Rational(m)) == Rational::parse(expected[m]));
  }
}

TEST_CASE("eta_pow_neg24 is the shifted product") {
  const QSeries e = eta_pow_neg24(Rational(1), 8);
  CHECK(e.lead_exponent() == Rational(-1));
  CHECK(e.coeff(Rational(-1)) == Rational(1));
  CHECK(e.coeff(Rational(0)) == Rational(24));
  CHECK(e.coeff(Rational(4)) == Rational(176256));
  CHECK(e.cutoff() == Rational(8));

  const QSeries half = eta_pow_neg24(Rational(1, 2), 3);
  CHECK(half.lead_exponent() == Rational(-1, 2));
  CHECK(half.coeff(Rational(0)) == Rational(24));       // scaled: p(1) slot
  CHECK(half.coeff(Rational(1, 2)) == Rational(324));   // p(2) slot at exponent 1/2
  CHECK(half.coeff(Rational(5, 2)) == Rational(1073720));
}

TEST_CASE("shift and scale are invertible grid maps") {
  std::mt19937_64 rng(0x77aa77ULL);
  for (int trial = 0; trial < 25; ++trial) {
    const QSeries a = random_series(rng);
    const Rational e(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    CHECK(shift_exponent(shift_exponent(a, e), -e) == a.reduced());
    const Rational s(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 4));
    CHECK(scale_exponent(scale_exponent(a, s), Rational(1) / s) == a.reduced());
  }
  CHECK_THROWS_AS(scale_exponent(QSeries::one(Rational(2)), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(scale_exponent(QSeries::one(Rational(2)), Rational(-2)), std::domain_error);
}

TEST_CASE("negate_variable flips odd exponents and is an involution") {
  const QSeries a(2, 6, {{-1, Rational(5)}, {2, Rational(3)}, {3, Rational(7)}});
  const QSeries n = negate_variable(a);
  CHECK(n.coeff(Rational(-1, 2)) == Rational(-5));
  CHECK(n.coeff(Rational(1)) == Rational(3));
  CHECK(n.coeff(Rational(3, 2)) == Rational(-7));
  CHECK(negate_variable(n) == a);

  std::mt19937_64 rng(0x1234321ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries r = random_series(rng);
    CHECK(negate_variable(negate_variable(r)) == r);
  }
}

TEST_CASE("residue extraction partitions, is idempotent and linear") {
  std::mt19937_64 rng(0xfeedbeefULL);
  for (int trial = 0; trial < 25; ++trial) {
    const QSeries a = random_series(rng);
    // residues are classes of the *scaled* exponent, so linearity is a
    // statement about series sharing one grid
    const QSeries b = random_series(rng, false, a.step_den());
    const long d = 2 + static_cast<long>(rng() % 4);
    QSeries sum = QSeries::unknown(a.cutoff());
    for (long rho = 0; rho < d; ++rho) {
      const QSeries part = residue_extract(a, d, rho);
      CHECK(residue_extract(part, d, rho) == part);
      sum = sum + part;
      CHECK(values_equal(residue_extract(a + b, d, rho),
                         residue_extract(a, d, rho) + residue_extract(b, d, rho)));
    }
    CHECK(sum == a);
  }
}

TEST_CASE("truncated and reduced normalize soundly") {
  const QSeries a(4, 12, {{-4, Rational(1)}, {4, Rational(2)}});  // q^-1 + 2q on the 1/4 grid
  const QSeries r = a.reduced();
  CHECK(r.step_den() == 1);
  CHECK(r == a);  // same values, same cutoff
  CHECK(r.cutoff() == Rational(3));

  const QSeries t = a.truncated(Rational(1, 2));
  CHECK(t.cutoff() == Rational(1, 2));
  CHECK(t.coeff(Rational(-1)) == Rational(1));
  CHECK_THROWS_AS(t.coeff(Rational(1)), std::out_of_range);

  // reduction keeps a fractional cutoff exact rather than rounding it
  const QSeries f(2, 3, {{-2, Rational(1)}});  // q^-1 + O(q^(3/2))
  CHECK(f.reduced().cutoff() == Rational(3, 2));
  CHECK(f.reduced() == f);
}

TEST_CASE("equality is grid-independent") {
  const QSeries a(1, 3, {{1, Rational(5)}});
  const QSeries b(2, 6, {{2, Rational(5)}});
  CHECK(a == b);
  const QSeries c(2, 5, {{2, Rational(5)}});  // same terms, tighter cutoff
  CHECK(a != c);
}

TEST_CASE("str renders exponents and the order tail") {
  const QSeries a(2, 7, {{-2, Rational(1)}, {0, Rational(-3, 4)}, {2, Rational(1)}});
  CHECK(a.str() == "q^(-1) - 3/4 + q + O(q^(7/2))");
  CHECK(QSeries::unknown(Rational(2)).str() == "0 + O(q^(2))");
}
