#include <vwseries/k3vw.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

#include <vwseries/hilb.hpp>

namespace vwseries {

namespace {

void require_k3(const SurfaceData& s) {
  if (!is_k3(s)) {
    throw std::domain_error("surface '" + s.name + "' is not a K3 surface");
  }
}

long hilb_index(const Charge& beta, const SurfaceData& s) {
  // 1 - chi(beta, beta)/2 with chi the Mukai-pairing Euler form.
  Rational chi = mukai_chi(beta, beta, s);
  Rational idx = Rational(1) - chi / Rational(2);
  if (!idx.is_integer()) {
    throw std::logic_error("Hilbert-scheme index is not an integer for " + charge_str(beta));
  }
  Int v = idx.to_int();
  if (!v.fits_slong_p()) {
    throw std::overflow_error("Hilbert-scheme index out of machine range for " + charge_str(beta));
  }
  return v.get_si();
}

}  // namespace

Rational vw_k3_charge(const Charge& alpha, const SurfaceData& s) {
  validate(s);
  validate(alpha, s);
  require_k3(s);
  const long m = divisibility(alpha);
  Rational total(0);
  for (long k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    Charge beta = scale_charge(alpha, 1, k);
    long idx = hilb_index(beta, s);
    total = total + Rational(hilb_euler(s.eulS, idx), Int(k) * Int(k));
  }
  return total;
}

QSeries vw_k3_series_termwise(long r, long long N, const SurfaceData& s) {
  validate(s);
  require_k3(s);
  if (r < 1) throw std::domain_error("rank must be >= 1");
  QSeries::TermMap terms;
  std::vector<long> c1(s.gram.size(), 0);
  for (long long c2 = 0; c2 < N; ++c2) {
    Charge alpha{r, c1, static_cast<long>(c2)};
    Rational v = vw_k3_charge(alpha, s);
    if (!v.is_zero()) terms[c2] = v;
  }
  return QSeries(1, N, std::move(terms));
}

QSeries vw_k3_series_closed(long r, long long N, const SurfaceData& s) {
  validate(s);
  require_k3(s);
  if (r < 1) throw std::domain_error("rank must be >= 1");
  QSeries total = QSeries::unknown(Rational(N));
  for (long d = 1; d <= r; ++d) {
    if (r % d != 0) continue;
    // Need e(Hilb^{dm+1}) while m r/d + r < N, i.e. dm+1 <= d^2 (N - r)/r + 1;
    // a couple of spare terms keep the truncation on the safe side.
    long M = static_cast<long>((N * d * d) / r + 2);
    QSeries A = shift_exponent(hilb_series(24, M + 1), Rational(-1));
    // A = sum_j e(Hilb^{j+1}) q^j; keep j = dm, rescale j -> j r / d^2, so
    // the exponent becomes m r / d, then shift by r.
    QSeries part = residue_extract(A, d, 0);
    part = scale_exponent(part, Rational(Int(r), Int(d) * Int(d)));
    part = shift_exponent(part, Rational(r));
    total = total + part * Rational(Int(d) * Int(d), Int(r) * Int(r));
  }
  return total.truncated(Rational(N)).reduced();
}

QSeries rank2_pred_series(long long N) {
  const Rational cutoff{N};
  const long Nl = static_cast<long>(N);
  // (1/4) q^2 eta(q^2)^{-24}
  QSeries whole = shift_exponent(eta_pow_neg24(Rational(2), Nl), Rational(2)) * Rational(1, 4);
  // (1/2) q^2 (eta(q^{1/2})^{-24} + eta(-q^{1/2})^{-24}): the odd half-integer
  // exponents cancel between the two summands.
  QSeries f = eta_pow_neg24(Rational(1, 2), Nl);
  QSeries half = shift_exponent(f + negate_variable(f), Rational(2)) * Rational(1, 2);
  QSeries out = (whole + half).truncated(cutoff).reduced();
  if (out.step_den() != 1) {
    throw std::logic_error("rank-2 prediction kept a non-integer exponent");
  }
  return out;
}

QSeries odd_c2_series(long long N) {
  QSeries::TermMap terms;
  for (long long c2 = 3; c2 < N; c2 += 2) {
    Int e = hilb_euler(24, static_cast<long>(2 * c2 - 3));
    if (e != 0) terms[c2] = Rational(e);
  }
  return QSeries(1, N, std::move(terms));
}

QSeries prime_rank_display(long r, long long N) {
  if (r < 2) throw std::domain_error("prime rank must be >= 2");
  for (long d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      std::ostringstream os;
      os << "rank " << r << " is not prime";
      throw std::domain_error(os.str());
    }
  }
  const Rational cutoff{N};
  QSeries term1 = shift_exponent(eta_pow_neg24(Rational(r), static_cast<long>(N)), Rational(r)) *
                  Rational(1, Int(r) * Int(r));
  // q^r sum_m e(Hilb^{mr+1}) q^m: take A = sum_j e(Hilb^{j+1}) q^j, keep
  // j = mr by residue extraction, rescale the exponent by 1/r, shift by r.
  long M = static_cast<long>((N - r) * r + r);
  if (M < 2) M = 2;
  QSeries A = shift_exponent(hilb_series(24, M + 1), Rational(-1));
  QSeries term2 = shift_exponent(scale_exponent(residue_extract(A, r, 0), Rational(1, r)), Rational(r));
  return (term1 + term2).truncated(cutoff).reduced();
}

QSeries rs_thickening_series(long r, long long N) {
  if (r < 1) throw std::domain_error("rank must be >= 1");
  // Direct route: (1/r^2) sum_k e(Hilb^k) q^{rk}.
  QSeries::TermMap terms;
  for (long long k = 0; r * k < N; ++k) {
    Int e = hilb_euler(24, static_cast<long>(k));
    if (e != 0) terms[r * k] = Rational(e, Int(r) * Int(r));
  }
  QSeries lhs(1, N, std::move(terms));
  // Eta route: (1/r^2) q^r eta(q^r)^{-24}.
  QSeries rhs = shift_exponent(eta_pow_neg24(Rational(r), static_cast<long>(N)), Rational(r)) *
                Rational(1, Int(r) * Int(r));
  if (lhs != rhs.truncated(Rational(N)).reduced()) {
    throw std::logic_error("point-thickening series disagrees with its eta form");
  }
  return lhs;
}

}  // namespace vwseries
