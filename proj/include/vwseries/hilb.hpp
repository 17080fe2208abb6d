#ifndef VWSERIES_HILB_HPP
#define VWSERIES_HILB_HPP

// Euler numbers of Hilbert schemes of points on a surface with topological
// Euler number e, through the product formula
//
//     sum_{m>=0} e(Hilb^m S) q^m  =  prod_{k>=1} (1 - q^k)^{-e}.
//
// Coefficients are extracted by the divisor-sum recurrence obtained from
// the logarithmic derivative of the product,
//
//     m * p_m = e * sum_{j=1}^{m} sigma(j) * p_{m-j},     sigma = sum of divisors,
//
// which needs only integer arithmetic and one exact division per
// coefficient. Values grow superpolynomially (e = 24 exceeds 64 bits before
// m = 40), hence the arbitrary-precision return type. Computed prefixes are
// memoized per Euler number behind a lock; lookups are cheap to repeat.

#include <vwseries/qseries.hpp>
#include <vwseries/rational.hpp>

namespace vwseries {

// e(Hilb^m) for the given surface Euler number; 0 for m < 0 by convention
// (the counting formulas index Hilbert schemes by integers of either sign
// and drop the empty ones).
Int hilb_euler(long eulS, long m);

// sum_{0 <= m < N} e(Hilb^m) q^m on the integer grid.
QSeries hilb_series(long eulS, long N);

}  // namespace vwseries

#endif  // VWSERIES_HILB_HPP
