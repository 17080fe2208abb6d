#include <vwseries/surface.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vwseries {

void validate(const SurfaceData& s) {
  const std::size_t rho = s.gram.size();
  if (rho == 0) throw std::invalid_argument("surface: empty Gram matrix");
  for (const auto& row : s.gram)
    if (row.size() != rho) throw std::invalid_argument("surface: Gram matrix not square");
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j)
      if (s.gram[i][j] != s.gram[j][i])
        throw std::invalid_argument("surface: Gram matrix not symmetric");
  if (s.h.size() != rho || s.k.size() != rho)
    throw std::invalid_argument("surface: h/k dimension does not match the Gram matrix");
  if (s.h01 < 0 || s.h02 < 0 || s.h0K < 0)
    throw std::invalid_argument("surface: negative Hodge number");
  if (s.chiO != 1 - s.h01 + s.h02)
    throw std::invalid_argument("surface: chi(O) inconsistent with Hodge numbers");
  if (intersect(s, s.h, s.h) <= 0)
    throw std::invalid_argument("surface: polarisation must have positive square");
}

void validate(const Charge& a, const SurfaceData& s) {
  if (a.r < 1) throw std::invalid_argument("charge: rank must be positive");
  if (a.c1.size() != s.gram.size())
    throw std::invalid_argument("charge: c1 dimension does not match the surface lattice");
}

bool is_k3(const SurfaceData& s) {
  for (long ki : s.k)
    if (ki != 0) return false;
  for (std::size_t i = 0; i < s.gram.size(); ++i)
    if (s.gram[i][i] % 2 != 0) return false;
  return s.h01 == 0 && s.h02 == 1 && s.h0K == 1 && s.chiO == 2 && s.eulS == 24;
}

long long intersect(const SurfaceData& s, const std::vector<long>& u,
                    const std::vector<long>& v) {
  if (u.size() != s.gram.size() || v.size() != s.gram.size())
    throw std::invalid_argument("intersect: vector dimension does not match the Gram matrix");
  long long acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      acc += static_cast<long long>(u[i]) * s.gram[i][j] * v[j];
  return acc;
}

namespace {

// chi(alpha(n)) as polynomial coefficients {n^0, n^1, n^2}, kept exact.
std::array<Rational, 3> chi_poly(const Charge& a, const SurfaceData& s) {
  validate(a, s);
  const long long HH = intersect(s, s.h, s.h);
  const long long HK = intersect(s, s.h, s.k);
  const long long c1H = intersect(s, a.c1, s.h);
  const long long c1K = intersect(s, a.c1, s.k);
  const long long c1c1 = intersect(s, a.c1, a.c1);
  const Rational n2(Int(a.r) * make_int(HH), Int(2));
  const Rational n1(Int(2) * make_int(c1H) - Int(a.r) * make_int(HK), Int(2));
  const Rational n0(make_int(c1c1) - make_int(c1K) - Int(2) * a.c2 + Int(2) * a.r * s.chiO,
                    Int(2));
  return {n0, n1, n2};
}

}  // namespace

Rational chi_twisted(const Charge& a, const SurfaceData& s, long n) {
  const auto p = chi_poly(a, s);
  const Rational nn(n);
  return p[0] + p[1] * nn + p[2] * nn * nn;
}

std::array<Rational, 3> reduced_hilbert(const Charge& a, const SurfaceData& s) {
  auto p = chi_poly(a, s);
  const Rational r(a.r);
  for (auto& c : p) c = c / r;
  return p;
}

bool is_proportional(const Charge& a, const Charge& b, const SurfaceData& s) {
  return reduced_hilbert(a, s) == reduced_hilbert(b, s);
}

long divisibility(const Charge& a) {
  if (a.r < 1) throw std::invalid_argument("divisibility: rank must be positive");
  long g = a.r;
  for (long c : a.c1) g = std::gcd(g, c);
  g = std::gcd(g, a.c2);
  return g;
}

Charge scale_charge(const Charge& a, long num, long den) {
  if (num < 1 || den < 1) throw std::invalid_argument("scale_charge: scale must be positive");
  const auto scaled = [num, den](long x, const char* what) {
    const long long t = static_cast<long long>(x) * num;
    if (t % den != 0)
      throw std::domain_error(std::string("scale_charge: ") + what + " not divisible");
    return static_cast<long>(t / den);
  };
  Charge b;
  b.r = scaled(a.r, "rank");
  b.c1.reserve(a.c1.size());
  for (long c : a.c1) b.c1.push_back(scaled(c, "c1"));
  b.c2 = scaled(a.c2, "c2");
  if (b.r < 1) throw std::domain_error("scale_charge: scaled rank not positive");
  return b;
}

Rational mukai_chi(const Charge& a, const Charge& b, const SurfaceData& s) {
  if (!is_k3(s)) throw std::domain_error("mukai_chi: surface is not of K3 numerical type");
  validate(a, s);
  validate(b, s);
  // Mukai vectors v = (r, c1, c1^2/2 - c2 + r); pairing <v,w> = v1.w1 - v0*w2 - v2*w0.
  const Rational va2 = Rational(intersect(s, a.c1, a.c1), 2) - Rational(a.c2) + Rational(a.r);
  const Rational vb2 = Rational(intersect(s, b.c1, b.c1), 2) - Rational(b.c2) + Rational(b.r);
  const Rational mid(intersect(s, a.c1, b.c1));
  const Rational pairing = mid - Rational(a.r) * vb2 - va2 * Rational(b.r);
  return -pairing;
}

long long virtual_dimension(const Charge& a, const SurfaceData& s) {
  validate(a, s);
  const long long c1c1 = intersect(s, a.c1, a.c1);
  return 2ll * a.r * a.c2 - (a.r - 1ll) * c1c1 -
         (static_cast<long long>(a.r) * a.r - 1ll) * s.chiO;
}

SpectralChern spectral_chern(const Charge& a, const SurfaceData& s) {
  validate(a, s);
  const long long c1K = intersect(s, a.c1, s.k);
  const long long KK = intersect(s, s.k, s.k);
  const long long c1c1 = intersect(s, a.c1, a.c1);
  SpectralChern out;
  out.fiber_mult = a.r;
  out.c2_c1_coeff = Rational(1);
  out.c2_canonical_coeff = Rational(Int(a.r) * (a.r + 1), Int(2));
  // c1(S) = -K: the cross term (r+1)*c1.c1(S) contributes -(r+1)*c1.K and
  // the square term r(r+1)(r+2)/6 * c1(S)^2 contributes with K^2 unchanged.
  out.c3_scalar = Rational(c1c1) - Rational(2) * Rational(a.c2) -
                  Rational(a.r + 1) * Rational(c1K) +
                  Rational(Int(a.r) * (a.r + 1) * (a.r + 2), Int(6)) * Rational(KK);
  return out;
}

std::string charge_str(const Charge& a) {
  std::ostringstream out;
  out << a.r;
  for (long c : a.c1) out << "," << c;
  out << "," << a.c2;
  return out.str();
}

Charge parse_charge(const std::string& text) {
  std::vector<long> vals;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("charge: empty component in '" + text + "'");
    std::size_t used = 0;
    long v;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("charge: bad integer '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("charge: bad integer '" + item + "'");
    vals.push_back(v);
  }
  if (vals.size() < 2)
    throw std::invalid_argument("charge: need at least rank and c2 in '" + text + "'");
  Charge a;
  a.r = vals.front();
  a.c2 = vals.back();
  a.c1.assign(vals.begin() + 1, vals.end() - 1);
  return a;
}

}  // namespace vwseries
