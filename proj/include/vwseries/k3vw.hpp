#ifndef VWSERIES_K3VW_HPP
#define VWSERIES_K3VW_HPP

// Vafa-Witten invariants of K3 surfaces and their generating series.
//
// On a K3 surface every semistable-sheaf contribution is computed by Euler
// numbers of Hilbert schemes of points: for a charge alpha with divisibility
// decomposition alpha = k * beta (beta a class of an actual moduli problem),
//
//   vw(alpha) = sum over k | divisibility(alpha) of
//               (1/k^2) * e(Hilb^{idx(alpha/k)}),
//   idx(beta) = 1 - chi(beta, beta)/2   (chi the Mukai-pairing Euler form),
//
// where e(Hilb^d) is the Euler number of the Hilbert scheme of d points
// (zero for d < 0). For rank r, zero first Chern class and varying c2 the
// sum reorganises into a closed generating series over divisors d | r:
//
//   sum_{d|r} (d^2/r^2) * sum_m e(Hilb^{dm+1}) q^{m r / d + r},
//
// which this module evaluates both ways (term-by-term and closed) so the
// two can be compared coefficient-for-coefficient.

#include <vwseries/qseries.hpp>
#include <vwseries/rational.hpp>
#include <vwseries/surface.hpp>

namespace vwseries {

// vw of a single charge on a K3 surface, as an exact rational.
Rational vw_k3_charge(const Charge& alpha, const SurfaceData& s);

// sum over c2 = 0..N-1 of vw((r, 0, c2)) q^{c2}, assembled charge by charge.
QSeries vw_k3_series_termwise(long r, long long N, const SurfaceData& s);

// The same series from the divisor-sum closed form, built out of the
// Hilbert-scheme Euler series by residue extraction and exponent scaling.
QSeries vw_k3_series_closed(long r, long long N, const SurfaceData& s);

// Modular prediction for rank 2, zero first Chern class:
//   (1/4) q^2 eta(q^2)^{-24}
//   + (1/2) q^2 (eta(q^{1/2})^{-24} + eta(-q^{1/2})^{-24}),
// where the two half-integer-exponent pieces cancel off the integral grid.
// Throws if any half-integer exponent survives; truncated below q^N.
QSeries rank2_pred_series(long long N);

// sum over odd c2 >= 3 of e(Hilb^{2 c2 - 3}) q^{c2}, truncated below q^N:
// the odd-second-Chern-class companion of the rank-2 series, which matches
// the even part (in half-integer exponents) of q^2 eta(q^{1/2})^{-24}.
QSeries odd_c2_series(long long N);

// For prime rank r, the closed form collapses to two divisor terms; this is
// that two-term shape,
//   (1/r^2) q^r eta(q^r)^{-24} + q^r sum_m e(Hilb^{mr+1}) q^m,
// with the second sum realised by residue extraction. Throws unless r is
// prime. Equals vw_k3_series_closed(r, N) restricted to divisors {1, r}.
QSeries prime_rank_display(long r, long long N);

// Generating series of the rank-r contributions supported on a single
// point-like thickening: sum_k (1/r^2) e(Hilb^k) q^{rk}. Checks the eta
// identity   sum_k e(Hilb^k) q^{rk} = q^r eta(q^r)^{-24} (truncated) before
// returning, and throws if the two routes disagree.
QSeries rs_thickening_series(long r, long long N);

}  // namespace vwseries

#endif  // VWSERIES_K3VW_HPP
