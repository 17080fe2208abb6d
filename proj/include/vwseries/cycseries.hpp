#ifndef VWSERIES_CYCSERIES_HPP
#define VWSERIES_CYCSERIES_HPP

// Series whose coefficients live in Q[z]/(z^d - 1), with z a formal d-th
// root of unity. This is verification machinery: it gives an exact meaning
// to "substitute z^j * x for x and average over j" without ever touching
// floating point or factoring x^d - 1.
//
// Ring elements are length-d rational vectors (the coefficients of
// 1, z, ..., z^{d-1}); multiplication is cyclic convolution, i.e. the
// reduction modulo z^d - 1 is built into the index arithmetic.
//
// The quotient is deliberately NOT a field, and no cyclotomic factor is
// ever split off. The one functional we need survives the quotient intact:
// for h in Q[z]/(z^d - 1), the sum of h evaluated over all d roots of
// x^d - 1 equals the trace of multiplication-by-h on the quotient (both are
// the sum of the eigenvalues of that multiplication map), and on the
// monomial basis that trace is
//
//     sum over all d-th roots w of w^m  =  trace(mult by z^m)  =  d * [d | m],
//
// i.e. d times the z^0-coordinate. Averaging a(z^j x) over j = 0..d-1 —
// powers of a primitive root enumerate every d-th root exactly once — is
// therefore computed exactly by applying (1/d) * trace to the coefficients
// of the single substitution a(z*x).

#include <map>
#include <string>
#include <vector>

#include <vwseries/qseries.hpp>
#include <vwseries/rational.hpp>

namespace vwseries {

// One element of Q[z]/(z^d - 1).
class CycElem {
 public:
  explicit CycElem(long d) : comps_(check_mod(d), Rational(0)) {}

  // c * z^m (m taken mod d).
  static CycElem monomial(long d, const Rational& c, long m);

  long modulus() const { return static_cast<long>(comps_.size()); }
  const Rational& comp(long i) const { return comps_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  // True when every coordinate above z^0 vanishes.
  bool is_root_free() const;

  // Sum of this element over all d-th roots of unity: d * (z^0-coordinate),
  // by the trace identity described in the file header.
  Rational sum_over_roots() const;

  friend CycElem operator+(const CycElem& a, const CycElem& b);
  friend CycElem operator*(const CycElem& a, const CycElem& b);  // cyclic convolution
  friend CycElem operator*(const Rational& c, const CycElem& a);
  friend bool operator==(const CycElem& a, const CycElem& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  std::string str() const;

 private:
  static long check_mod(long d);
  std::vector<Rational> comps_;
};

// Truncated series with CycElem coefficients; same scaled-exponent grid and
// exclusive order bound as QSeries.
class CycSeries {
 public:
  using Key = QSeries::Key;
  using TermMap = std::map<Key, CycElem>;

  CycSeries(long modulus, long step_den, Key order, TermMap terms);

  // Embeds a QSeries: every coefficient lands on the z^0 coordinate.
  static CycSeries embed(const QSeries& a, long modulus);

  long modulus() const { return modulus_; }
  long step_den() const { return step_den_; }
  Key order_scaled() const { return order_; }
  const TermMap& terms() const { return terms_; }

  // Substitutes z*x for x: the coefficient at scaled exponent k picks up a
  // factor z^k (reduced mod z^d - 1 by the CycElem product).
  CycSeries twist() const;

  friend CycSeries operator+(const CycSeries& a, const CycSeries& b);
  friend bool operator==(const CycSeries& a, const CycSeries& b);
  friend bool operator!=(const CycSeries& a, const CycSeries& b) { return !(a == b); }

  // Applies (1/d) * (sum over all d-th roots) to every coefficient — the
  // exact average of the d substituted series — and returns the projection.
  QSeries average_over_roots() const;

  // Projects a series whose coefficients are all root-free back to QSeries;
  // errors if any coefficient has a nonzero component above z^0.
  QSeries project_root_free() const;

 private:
  long modulus_;
  long step_den_;
  Key order_;
  TermMap terms_;

  void prune();
};

}  // namespace vwseries

#endif  // VWSERIES_CYCSERIES_HPP
