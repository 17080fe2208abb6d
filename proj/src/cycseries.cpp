#include <vwseries/cycseries.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace vwseries {

namespace {

long mod_reduce(long long m, long d) {
  long r = static_cast<long>(((m % d) + d) % d);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycElem
// ---------------------------------------------------------------------------

long CycElem::check_mod(long d) {
  if (d < 1) throw std::invalid_argument("CycElem: modulus must be >= 1");
  return d;
}

CycElem CycElem::monomial(long d, const Rational& c, long m) {
  CycElem e(d);
  e.comps_[static_cast<std::size_t>(mod_reduce(m, d))] = c;
  return e;
}

bool CycElem::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycElem::is_root_free() const {
  for (std::size_t i = 1; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return false;
  return true;
}

Rational CycElem::sum_over_roots() const {
  return Rational(modulus()) * comps_[0];
}

CycElem operator+(const CycElem& a, const CycElem& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("CycElem: modulus mismatch");
  CycElem r(a.modulus());
  for (std::size_t i = 0; i < a.comps_.size(); ++i) r.comps_[i] = a.comps_[i] + b.comps_[i];
  return r;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("CycElem: modulus mismatch");
  const std::size_t d = a.comps_.size();
  CycElem r(a.modulus());
  for (std::size_t i = 0; i < d; ++i) {
    if (a.comps_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.comps_[j].is_zero()) continue;
      r.comps_[(i + j) % d] += a.comps_[i] * b.comps_[j];
    }
  }
  return r;
}

CycElem operator*(const Rational& c, const CycElem& a) {
  CycElem r(a.modulus());
  for (std::size_t i = 0; i < a.comps_.size(); ++i) r.comps_[i] = c * a.comps_[i];
  return r;
}

std::string CycElem::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out << ", ";
    out << comps_[i].str();
  }
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// CycSeries
// ---------------------------------------------------------------------------

CycSeries::CycSeries(long modulus, long step_den, Key order, TermMap terms)
    : modulus_(modulus), step_den_(step_den), order_(order), terms_(std::move(terms)) {
  if (modulus_ < 1) throw std::invalid_argument("CycSeries: modulus must be >= 1");
  if (step_den_ < 1) throw std::invalid_argument("CycSeries: step denominator must be >= 1");
  prune();
}

void CycSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.modulus() != modulus_)
      throw std::invalid_argument("CycSeries: coefficient modulus mismatch");
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      if (it->first >= order_)
        throw std::invalid_argument("CycSeries: nonzero term at or above the knowledge cutoff");
      ++it;
    }
  }
}

CycSeries CycSeries::embed(const QSeries& a, long modulus) {
  TermMap t;
  for (const auto& [k, c] : a.terms())
    t.emplace(k, CycElem::monomial(modulus, c, 0));
  return CycSeries(modulus, a.step_den(), a.order_scaled(), std::move(t));
}

CycSeries CycSeries::twist() const {
  TermMap t;
  for (const auto& [k, e] : terms_)
    t.emplace(k, e * CycElem::monomial(modulus_, Rational(1), mod_reduce(k, modulus_)));
  return CycSeries(modulus_, step_den_, order_, std::move(t));
}

CycSeries operator+(const CycSeries& a, const CycSeries& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("CycSeries: modulus mismatch");
  if (a.step_den_ != b.step_den_)
    throw std::invalid_argument("CycSeries: step denominator mismatch");
  CycSeries::TermMap t = a.terms_;
  for (const auto& [k, e] : b.terms_) {
    auto [it, fresh] = t.emplace(k, e);
    if (!fresh) it->second = it->second + e;
  }
  const CycSeries::Key O = std::min(a.order_, b.order_);
  for (auto it = t.begin(); it != t.end();) {
    if (it->first >= O) it = t.erase(it);
    else ++it;
  }
  return CycSeries(a.modulus_, a.step_den_, O, std::move(t));
}

bool operator==(const CycSeries& a, const CycSeries& b) {
  return a.modulus_ == b.modulus_ && a.step_den_ == b.step_den_ && a.order_ == b.order_ &&
         a.terms_ == b.terms_;
}

QSeries CycSeries::average_over_roots() const {
  QSeries::TermMap t;
  const Rational inv_d(1, modulus_);
  for (const auto& [k, e] : terms_) {
    const Rational v = inv_d * e.sum_over_roots();
    if (!v.is_zero()) t.emplace(k, v);
  }
  return QSeries(step_den_, order_, std::move(t));
}

QSeries CycSeries::project_root_free() const {
  QSeries::TermMap t;
  for (const auto& [k, e] : terms_) {
    if (!e.is_root_free())
      throw std::logic_error("CycSeries: coefficient carries a nonzero root-of-unity component");
    if (!e.comp(0).is_zero()) t.emplace(k, e.comp(0));
  }
  return QSeries(step_den_, order_, std::move(t));
}

// ---------------------------------------------------------------------------
// root-of-unity average of a QSeries
// ---------------------------------------------------------------------------

QSeries root_of_unity_avg(const QSeries& a, long d) {
  if (d < 1) throw std::invalid_argument("root_of_unity_avg: order must be >= 1");

  // Lift and apply the substitution x -> z*x once; coefficient at scaled
  // exponent k becomes c_k * z^k in Q[z]/(z^d - 1).
  const CycSeries lifted = CycSeries::embed(a, d);
  const CycSeries twisted = lifted.twist();

  // Substituting d times must come back around to the start — a full turn
  // through the reduction mod z^d - 1. Catches index arithmetic bugs.
  CycSeries cycle = twisted;
  for (long j = 1; j < d; ++j) cycle = cycle.twist();
  if (cycle != lifted)
    throw std::logic_error("root_of_unity_avg: d-fold substitution does not close up");

  // (1/d) * sum over all d-th roots, coefficient by coefficient. Powers of a
  // primitive root enumerate all roots, so this IS the average of the d
  // substituted series.
  const QSeries averaged = twisted.average_over_roots();

  // The survivors are exactly the exponents with z^k = z^0; their lifted
  // coefficients must be root-free, or the reduction arithmetic is broken.
  CycSeries::TermMap surviving;
  for (const auto& [k, e] : twisted.terms())
    if (!(Rational(1, d) * e.sum_over_roots()).is_zero()) surviving.emplace(k, e);
  const QSeries reproject =
      CycSeries(d, twisted.step_den(), twisted.order_scaled(), std::move(surviving))
          .project_root_free();
  if (!(reproject == averaged))
    throw std::logic_error("root_of_unity_avg: averaged series disagrees with its projection");

  return averaged;
}

}  // namespace vwseries
