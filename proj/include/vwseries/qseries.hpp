#ifndef VWSERIES_QSERIES_HPP
#define VWSERIES_QSERIES_HPP

// Truncated Laurent/Puiseux series in one variable q with exact rational
// coefficients.
//
// Representation
// --------------
// A series is a finite sum of terms  c * q^(k/D)  stored as a sparse map
// from the *scaled exponent* k (an integer) to its nonzero coefficient c,
// together with
//
//   * step_den  D >= 1   — the exponent grid is (1/D) * Z,
//   * order     O        — exclusive knowledge bound, also in scaled units.
//
// The object asserts: "every exponent e with e < O/D has exactly the
// coefficient stored here (zero if absent); nothing is claimed at or above
// O/D."  Two invariants are maintained at all times:
//
//   * no zero coefficient is ever stored,
//   * every stored key satisfies k < O.
//
// Orders under arithmetic
// -----------------------
// Binary operations first reconcile the two grids via lcm of the step
// denominators (keys and orders are rescaled accordingly), then:
//
//   add/sub:   O = min(Oa, Ob)
//   multiply:  O = min(Oa + lead(b), Ob + lead(a))
//              (a is exact below Oa and b starts at lead(b), so products of
//               an unknown tail of a with the head of b first pollute the
//               coefficient at Oa + lead(b); symmetrically for b.)
//   inverse:   O = Oa - 2*lead(a)
//              (writing a = c*q^l*(1+t), the coefficient of 1/a at -l+j is
//               determined by the coefficients of a at l..l+j, so exactly
//               Oa - lead(a) consecutive coefficients of 1/a are known,
//               starting at -lead(a).)
//   pow e:     O = Oa + (e-1)*lead(a)  for every integer e, as follows from
//              the multiply rule by induction (any multiplication tree gives
//              the same bound), consistently extended to e <= 0.
//
// Multiplying or inverting a series with no stored term is an error: such a
// series has no leading exponent, so no sound order bound exists for the
// result.
//
// Exponent-grid operations (shift by q^e, substitute q -> q^s, substitute
// x -> -x on the grid x = q^(1/D), residue filtering of the grid) are exact
// and never lose terms. scale_exponent re-normalizes the grid to the
// smallest step denominator that represents both the surviving terms and
// the knowledge cutoff exactly; nothing else silently changes D.

#include <map>
#include <string>

#include <vwseries/rational.hpp>

namespace vwseries {

class QSeries {
 public:
  using Key = long long;  // scaled exponent
  using TermMap = std::map<Key, Rational>;

  // The empty series on the integer grid: nothing known (order 0).
  QSeries() : step_den_(1), order_(0) {}

  // General constructor; drops zero coefficients, rejects keys >= order.
  QSeries(long step_den, Key order, TermMap terms);

  // 1 + O(q^cutoff) on the grid of the cutoff denominator.
  static QSeries one(const Rational& cutoff);

  // c * q^exp + O(q^cutoff); grid chosen minimally for exp and cutoff.
  static QSeries monomial(const Rational& coeff, const Rational& exp, const Rational& cutoff);

  // Empty series (all coefficients unknown) with the given cutoff.
  static QSeries unknown(const Rational& cutoff);

  long step_den() const { return step_den_; }
  Key order_scaled() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool has_terms() const { return !terms_.empty(); }

  // Exclusive knowledge bound O/D as an exact rational exponent.
  Rational cutoff() const { return Rational(make_int(order_), make_int(step_den_)); }

  // Least exponent carrying a nonzero coefficient; error when empty.
  Rational lead_exponent() const;

  // Coefficient at the exact exponent e. Exponents off the stored grid but
  // below the cutoff are genuinely zero. Querying at or above the cutoff is
  // an out-of-range error: the value is not determined by this object.
  Rational coeff(const Rational& e) const;

  // Restricts knowledge to exponents < new_cutoff (never extends it).
  QSeries truncated(const Rational& new_cutoff) const;

  // Rewrites on the smallest step denominator representing every term and
  // the cutoff exactly; value-preserving.
  QSeries reduced() const;

  // Strict equality of mathematical content: identical coefficients on the
  // common grid refinement and identical knowledge cutoff.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

  friend QSeries operator*(const Rational& c, const QSeries& a);
  friend QSeries operator*(const QSeries& a, const Rational& c) { return c * a; }

  // Human-readable rendering ("1/4 + 30*q^2 + ..."), mainly for diagnostics.
  std::string str() const;

 private:
  long step_den_;
  Key order_;
  TermMap terms_;

  void prune_and_check();
  friend void align_grids(QSeries& a, QSeries& b);
};

// Multiplicative inverse; error when `a` has no terms or (equivalently) no
// invertible leading coefficient.
QSeries inverse(const QSeries& a);

// a^e for any integer e (negative powers go through inverse()).
QSeries pow(const QSeries& a, long e);

// q^e * a — shifts every exponent and the cutoff by the exact rational e.
QSeries shift_exponent(const QSeries& a, const Rational& e);

// Substitutes q -> q^s for rational s > 0; exponents and cutoff scale by s,
// and the grid is re-normalized minimally.
QSeries scale_exponent(const QSeries& a, const Rational& s);

// Substitutes x -> -x on the grid x = q^(1/D): negates coefficients at odd
// scaled exponents.
QSeries negate_variable(const QSeries& a);

// Keeps only terms whose scaled exponent is congruent to rho mod d
// (0 <= rho < d); knowledge cutoff is unchanged.
QSeries residue_extract(const QSeries& a, long d, long rho);

// Averages a(z*x) over all d-th roots of unity z, computed exactly through
// series with coefficients in Q[z]/(z^d - 1); equals residue_extract(a,d,0).
// Defined in cycseries.cpp.
QSeries root_of_unity_avg(const QSeries& a, long d);

// prod_{k>=1} (1 - q^k)^{-e} truncated below q^N, on the integer grid.
// e = 1 gives the partition generating function; e may be negative or zero.
QSeries euler_product_power(long e, long N);

// q^{-s} * prod_{k>=1} (1 - q^{ks})^{-24} for rational scale s > 0,
// truncated below q^N. This is the weight -12 eta power expanded at q^s.
QSeries eta_pow_neg24(const Rational& scale, long N);

}  // namespace vwseries

#endif  // VWSERIES_QSERIES_HPP
