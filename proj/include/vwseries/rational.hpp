#ifndef VWSERIES_RATIONAL_HPP
#define VWSERIES_RATIONAL_HPP

// Exact rational scalar used throughout the library.
//
// Every quantity we compute (series coefficients, holomorphic Euler
// characteristics, pair invariants) is a rational number with modest
// denominator but potentially huge numerator, so the scalar type is a
// GMP-backed fraction kept in canonical form:
//
//   * lowest terms (gcd(num, den) = 1),
//   * positive denominator,
//   * zero is 0/1.
//
// Serialization is the canonical lowest-terms string: "24", "-3/4", "0".
// Floating point never appears anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vwseries {

// Arbitrary-precision integer (Hilbert-scheme Euler numbers overflow int64
// already around length ~40, so fixed-width integers are not an option).
using Int = mpz_class;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(const Int& n) : v_(n) {}                      // NOLINT(runtime/explicit)
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  // Parses "num", "num/den" (optional sign, base 10). Canonicalizes.
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Lowest-terms decimal string, denominator omitted when it is 1.
  std::string str() const { return v_.get_str(); }

  // Exact conversion to Int; throws unless the value is integral.
  Int to_int() const {
    if (!is_integer()) throw std::domain_error("Rational::to_int: not an integer: " + str());
    return v_.get_num();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Integer power; e may be negative (then the value must be nonzero).
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    if (invert) {
      if (is_zero()) throw std::domain_error("Rational::pow: negative power of zero");
      return Rational(pd, pn);
    }
    return Rational(pn, pd);
  }

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}
  mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

// Int from a 64-bit machine integer. gmpxx only provides the `long`
// constructor; on the LP64 targets this library builds for, `long long` is
// the same width, which the assert pins down.
inline Int make_int(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 target expected");
  return Int(static_cast<long>(v));
}

// (-1)^e for integer e.
inline Rational parity_sign(const Int& e) {
  return mpz_odd_p(e.get_mpz_t()) ? Rational(-1) : Rational(1);
}

inline Rational parity_sign(long e) { return (e % 2 != 0) ? Rational(-1) : Rational(1); }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace vwseries

#endif  // VWSERIES_RATIONAL_HPP
