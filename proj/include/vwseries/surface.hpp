#ifndef VWSERIES_SURFACE_HPP
#define VWSERIES_SURFACE_HPP

// Numerical data of a polarised surface and of sheaf charges on it.
//
// A surface is described by the restriction of its intersection form to the
// sublattice of divisor classes we ever pair (an integer Gram matrix), the
// polarisation H and canonical class K in that basis, and the handful of
// cohomological constants the counting formulas consume: h^{0,1}, h^{0,2},
// h^0(K), chi(O_S), e(S).
//
// A charge is a triple (r, c1, c2): rank, first Chern class in the chosen
// basis, and the integral of c2. Everything derived from these — twisted
// Euler characteristics, reduced Hilbert polynomials, Mukai pairings on K3,
// virtual dimensions, the Chern classes of the associated spectral torsion
// sheaf on the canonical threefold — is computed exactly.

#include <array>
#include <string>
#include <vector>

#include <vwseries/rational.hpp>

namespace vwseries {

struct SurfaceData {
  std::string name;
  std::vector<std::vector<long>> gram;  // intersection form on the tracked sublattice
  std::vector<long> h;                  // polarisation
  std::vector<long> k;                  // canonical class
  long h01 = 0;                         // h^{0,1}
  long h02 = 0;                         // h^{0,2}
  long h0K = 0;                         // h^0(K_S)
  long chiO = 0;                        // chi(O_S) = 1 - h01 + h02
  long eulS = 0;                        // topological Euler number
};

struct Charge {
  long r = 0;               // rank, positive
  std::vector<long> c1;     // first Chern class in the surface basis
  long c2 = 0;              // second Chern number
};

// Structural checks: square symmetric Gram, matching dimensions, positive
// H^2, chiO consistent with the Hodge numbers. Throws invalid_argument.
void validate(const SurfaceData& s);

// Charge sanity against a surface: r >= 1 and c1 in the right lattice.
void validate(const Charge& a, const SurfaceData& s);

// True for the K3 numerical type used by the closed-formula paths:
// K = 0, h01 = 0, h02 = 1, h0K = 1, chi(O) = 2, e = 24, even Gram diagonal.
bool is_k3(const SurfaceData& s);

// u . v under the Gram matrix.
long long intersect(const SurfaceData& s, const std::vector<long>& u, const std::vector<long>& v);

// chi of the twist alpha(n): by Riemann-Roch on the surface,
//   chi(alpha(n)) = r*H^2/2 * n^2 + (c1.H - r*H.K/2) * n
//                   + c1^2/2 - c2 - c1.K/2 + r*chi(O).
Rational chi_twisted(const Charge& a, const SurfaceData& s, long n);

// Coefficients {n^0, n^1, n^2} of chi(alpha(n)) / r.
std::array<Rational, 3> reduced_hilbert(const Charge& a, const SurfaceData& s);

// Same reduced Hilbert polynomial. Under a generic polarisation this is
// exactly "the charges are proportional", which is how the wall-crossing
// sums decide which decompositions contribute.
bool is_proportional(const Charge& a, const Charge& b, const SurfaceData& s);

// Largest m such that alpha/m is still an integral charge.
long divisibility(const Charge& a);

// (num/den) * alpha; requires the result to be integral with positive rank.
Charge scale_charge(const Charge& a, long num, long den);

// Euler pairing chi(alpha, beta) on a K3 surface, as minus the Mukai
// pairing of the Mukai vectors v = (r, c1, c1^2/2 - c2 + r). Errors on
// surfaces that are not of K3 numerical type.
Rational mukai_chi(const Charge& a, const Charge& b, const SurfaceData& s);

// 2*r*c2 - (r-1)*c1^2 - (r^2-1)*chi(O): the virtual dimension of the
// associated moduli problem.
long long virtual_dimension(const Charge& a, const SurfaceData& s);

// Chern data of the rank-0 torsion sheaf on the canonical threefold
// supporting a Higgs pair of charge alpha:
//   c1 = (fiber_mult) * [S],
//   c2 = -push( c2_c1_coeff * c1 + c2_canonical_coeff * c1(S) ),
//   c3 =  push( c3_scalar ),
// with c1(S) = -K and push the inclusion of the zero section.
struct SpectralChern {
  long fiber_mult = 0;
  Rational c2_c1_coeff;
  Rational c2_canonical_coeff;
  Rational c3_scalar;
};
SpectralChern spectral_chern(const Charge& a, const SurfaceData& s);

// Canonical one-line text form "r,c1...,c2" and its parser.
std::string charge_str(const Charge& a);
Charge parse_charge(const std::string& text);

}  // namespace vwseries

#endif  // VWSERIES_SURFACE_HPP
