#include <vwseries/qseries.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vwseries {

namespace {

long long to_ll(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("QSeries: scaled exponent out of range");
  return z.get_si();
}

// ceil(a/b) for Int a and positive Int b.
Int int_ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

QSeries::QSeries(long step_den, Key order, TermMap terms)
    : step_den_(step_den), order_(order), terms_(std::move(terms)) {
  if (step_den_ < 1) throw std::invalid_argument("QSeries: step denominator must be >= 1");
  prune_and_check();
}

void QSeries::prune_and_check() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      if (it->first >= order_)
        throw std::invalid_argument("QSeries: nonzero term at or above the knowledge cutoff");
      ++it;
    }
  }
}

QSeries QSeries::monomial(const Rational& coeff, const Rational& exp, const Rational& cutoff) {
  if (exp >= cutoff)
    throw std::invalid_argument("QSeries::monomial: exponent not below the cutoff");
  const Int dl = int_lcm(exp.den(), cutoff.den());
  const long D = static_cast<long>(to_ll(dl));
  const Key k = to_ll(exp.num() * (dl / exp.den()));
  const Key O = to_ll(cutoff.num() * (dl / cutoff.den()));
  TermMap t;
  if (!coeff.is_zero()) t.emplace(k, coeff);
  return QSeries(D, O, std::move(t));
}

QSeries QSeries::one(const Rational& cutoff) { return monomial(Rational(1), Rational(0), cutoff); }

QSeries QSeries::unknown(const Rational& cutoff) {
  const long D = static_cast<long>(to_ll(cutoff.den()));
  return QSeries(D, to_ll(cutoff.num()), TermMap{});
}

// ---------------------------------------------------------------------------
// queries
// ---------------------------------------------------------------------------

Rational QSeries::lead_exponent() const {
  if (terms_.empty()) throw std::domain_error("QSeries: empty series has no leading exponent");
  return Rational(make_int(terms_.begin()->first), make_int(step_den_));
}

Rational QSeries::coeff(const Rational& e) const {
  if (e >= cutoff())
    throw std::out_of_range("QSeries::coeff: exponent not below the knowledge cutoff");
  const Int scaled = e.num() * step_den_;
  if (!mpz_divisible_p(scaled.get_mpz_t(), e.den().get_mpz_t()))
    return Rational(0);  // off the grid, hence known to be zero
  const auto it = terms_.find(to_ll(scaled / e.den()));
  return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QSeries::truncated(const Rational& new_cutoff) const {
  const Key bound = to_ll(int_ceil_div(new_cutoff.num() * step_den_, new_cutoff.den()));
  const Key O = std::min(order_, bound);
  TermMap t(terms_.begin(), terms_.lower_bound(O));
  return QSeries(step_den_, O, std::move(t));
}

QSeries QSeries::reduced() const {
  long long g = std::gcd(static_cast<long long>(step_den_), order_);
  for (const auto& [k, c] : terms_) {
    (void)c;
    g = std::gcd(g, k);
    if (g == 1) return *this;
  }
  if (g == 1 || g == 0) return *this;
  TermMap t;
  for (const auto& [k, c] : terms_) t.emplace(k / g, c);
  return QSeries(static_cast<long>(step_den_ / g), order_ / g, std::move(t));
}

// ---------------------------------------------------------------------------
// grid reconciliation and ring operations
// ---------------------------------------------------------------------------

void align_grids(QSeries& a, QSeries& b) {
  if (a.step_den_ == b.step_den_) return;
  const long L = std::lcm(a.step_den_, b.step_den_);
  const auto rescale = [L](QSeries& s) {
    const long f = L / s.step_den_;
    if (f == 1) return;
    QSeries::TermMap t;
    for (const auto& [k, c] : s.terms_) t.emplace(k * f, c);
    s.terms_ = std::move(t);
    s.order_ *= f;
    s.step_den_ = L;
  };
  rescale(a);
  rescale(b);
}

bool operator==(const QSeries& a0, const QSeries& b0) {
  QSeries a = a0, b = b0;
  align_grids(a, b);
  return a.order_ == b.order_ && a.terms_ == b.terms_;
}

QSeries operator+(const QSeries& a0, const QSeries& b0) {
  QSeries a = a0, b = b0;
  align_grids(a, b);
  const QSeries::Key O = std::min(a.order_, b.order_);
  QSeries::TermMap t;
  for (const auto& [k, c] : a.terms_)
    if (k < O) t.emplace(k, c);
  for (const auto& [k, c] : b.terms_) {
    if (k >= O) continue;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) it->second += c;
  }
  return QSeries(a.step_den_, O, std::move(t));
}

QSeries QSeries::operator-() const {
  TermMap t;
  for (const auto& [k, c] : terms_) t.emplace(k, -c);
  return QSeries(step_den_, order_, std::move(t));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries::TermMap t;
  if (!c.is_zero())
    for (const auto& [k, v] : a.terms()) t.emplace(k, c * v);
  return QSeries(a.step_den(), a.order_scaled(), std::move(t));
}

QSeries operator*(const QSeries& a0, const QSeries& b0) {
  if (!a0.has_terms() || !b0.has_terms())
    throw std::domain_error("QSeries multiply: operand has no leading term, no sound result order");
  QSeries a = a0, b = b0;
  align_grids(a, b);
  const QSeries::Key la = a.terms_.begin()->first;
  const QSeries::Key lb = b.terms_.begin()->first;
  const QSeries::Key O = std::min(a.order_ + lb, b.order_ + la);
  QSeries::TermMap t;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const QSeries::Key k = ka + kb;
      if (k >= O) break;  // kb ascends, later products only larger
      auto [it, fresh] = t.emplace(k, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  return QSeries(a.step_den_, O, std::move(t));
}

QSeries inverse(const QSeries& a) {
  if (!a.has_terms())
    throw std::domain_error("QSeries inverse: series has no leading term");
  const QSeries::Key la = a.terms().begin()->first;
  const Rational ca = a.terms().begin()->second;
  const long long T = a.order_scaled() - la;  // number of determined coefficients

  // a's coefficients relative to its lead: nonzero (offset, value) pairs.
  std::vector<std::pair<long long, Rational>> rel;
  rel.reserve(a.terms().size());
  for (const auto& [k, c] : a.terms()) rel.emplace_back(k - la, c);

  // Solve (a * b)(la + t) = [t == 0] for b's coefficients at -la + t.
  std::vector<Rational> b(static_cast<std::size_t>(T));
  for (long long t = 0; t < T; ++t) {
    Rational rhs = t == 0 ? Rational(1) : Rational(0);
    for (const auto& [s, c] : rel) {
      if (s > t) break;
      if (s == 0) continue;  // that's the ca * b[t] term being solved for
      rhs -= c * b[static_cast<std::size_t>(t - s)];
    }
    b[static_cast<std::size_t>(t)] = rhs / ca;
  }

  QSeries::TermMap t;
  for (long long i = 0; i < T; ++i)
    if (!b[static_cast<std::size_t>(i)].is_zero()) t.emplace(-la + i, b[static_cast<std::size_t>(i)]);
  return QSeries(a.step_den(), a.order_scaled() - 2 * la, std::move(t));
}

QSeries pow(const QSeries& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  if (e == 0) {
    // Exactly 1; the order extrapolates the multiply rule to e = 0.
    if (!a.has_terms()) return QSeries::one(a.cutoff());
    const QSeries::Key O = a.order_scaled() - a.terms().begin()->first;
    return QSeries(a.step_den(), O, {{0, Rational(1)}});
  }
  QSeries base = a;
  QSeries acc;
  bool have = false;
  unsigned long k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1ul) {
      acc = have ? acc * base : base;
      have = true;
    }
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// exponent-grid operations
// ---------------------------------------------------------------------------

QSeries shift_exponent(const QSeries& a, const Rational& e) {
  const Int dl = int_lcm(make_int(a.step_den()), e.den());
  const long D = static_cast<long>(to_ll(dl));
  const long f = static_cast<long>(D / a.step_den());
  const QSeries::Key off = to_ll(e.num() * (dl / e.den()));
  QSeries::TermMap t;
  for (const auto& [k, c] : a.terms()) t.emplace(k * f + off, c);
  return QSeries(D, a.order_scaled() * f + off, std::move(t));
}

QSeries scale_exponent(const QSeries& a, const Rational& s) {
  if (s.sign() <= 0)
    throw std::domain_error("QSeries scale_exponent: scale must be positive");
  const long long p = to_ll(s.num());
  const long long q = to_ll(s.den());
  QSeries::TermMap t;
  for (const auto& [k, c] : a.terms()) t.emplace(k * p, c);
  return QSeries(static_cast<long>(a.step_den() * q), a.order_scaled() * p, std::move(t))
      .reduced();
}

QSeries negate_variable(const QSeries& a) {
  QSeries::TermMap t;
  for (const auto& [k, c] : a.terms()) t.emplace(k, (k % 2 != 0) ? -c : c);
  return QSeries(a.step_den(), a.order_scaled(), std::move(t));
}

QSeries residue_extract(const QSeries& a, long d, long rho) {
  if (d < 1) throw std::invalid_argument("residue_extract: modulus must be >= 1");
  if (rho < 0 || rho >= d) throw std::invalid_argument("residue_extract: residue out of range");
  QSeries::TermMap t;
  for (const auto& [k, c] : a.terms())
    if (((k % d) + d) % d == rho) t.emplace(k, c);
  return QSeries(a.step_den(), a.order_scaled(), std::move(t));
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

QSeries euler_product_power(long e, long N) {
  if (N < 0) throw std::invalid_argument("euler_product_power: negative truncation");
  if (N == 0) return QSeries::unknown(Rational(0));
  const Rational cutoff{N};
  QSeries acc = QSeries::one(cutoff);
  for (long k = 1; k < N; ++k)
    acc = acc * (QSeries::one(cutoff) - QSeries::monomial(Rational(1), Rational(k), cutoff));
  return pow(acc, -e);
}

QSeries eta_pow_neg24(const Rational& scale, long N) {
  if (scale.sign() <= 0)
    throw std::domain_error("eta_pow_neg24: scale must be positive");
  // Coverage: the inner product known below M spans [0, M*s) after scaling,
  // then [-s, M*s - s) after the shift; M*s - s >= N makes q^N reachable.
  const long M = static_cast<long>(to_ll(int_ceil_div(Int(N) * scale.den(), scale.num()))) + 2;
  const QSeries expanded = scale_exponent(euler_product_power(24, M), scale);
  return shift_exponent(expanded, -scale).truncated(Rational(N));
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

std::string QSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const Rational e = Rational(make_int(k), make_int(step_den_));
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (e.is_zero()) {
      out << mag.str();
    } else {
      if (mag != Rational(1)) out << mag.str() << "*";
      out << "q";
      if (e != Rational(1)) out << "^(" << e.str() << ")";
    }
  }
  if (first) out << "0";
  out << " + O(q^(" << cutoff().str() << "))";
  return out.str();
}

}  // namespace vwseries
