#ifndef VWSERIES_WALLCROSS_HPP
#define VWSERIES_WALLCROSS_HPP

// Universal wall-crossing between pair invariants and semistable-sheaf
// invariants for charges on a polarised surface with generic polarisation.
//
// Fix a charge alpha with divisibility m and write alpha_0 = alpha/m for the
// primitive charge underneath. Under a generic polarisation the only charges
// sharing alpha's reduced Hilbert polynomial are its rational multiples, so
// the pair invariant of alpha at twist n decomposes over ordered
// compositions (d_1, ..., d_l) of m:
//
//   P(alpha, n) = sum over compositions  (-1)^l / l!
//                 * prod_i sigma(chi_i) * chi_i * inv[d_i],
//
// where chi_i = chi((d_i * alpha_0)(n)), inv[d] is the sheaf invariant of
// d * alpha_0, and sigma is the variant-dependent sign:
//
//   sigma(chi) = (-1)^chi          weighted-Euler-characteristic and
//                                  virtual-localisation variants,
//   sigma(chi) = (-1)^(chi + h0K)  fixed-determinant weighted variant.
//
// First-term variants keep only the length-1 composition — the form the
// identity takes when higher H^0(K)-twisted obstructions kill the longer
// terms — and the Behrend-style first term carries one global factor
// (-1)^h0K.
//
// The inverse direction solves for inv[] from pair values: the equation for
// j * alpha_0 is linear in inv[j] (only the length-1 composition reaches it)
// and otherwise involves inv at indices < j, so ascending j gives a
// triangular solve.

#include <map>
#include <vector>

#include <vwseries/rational.hpp>
#include <vwseries/surface.hpp>

namespace vwseries {

enum class WallKind {
  FULL_SUM_JS,         // all compositions, sigma = (-1)^chi
  FULL_SUM_FIXED_DET,  // all compositions, sigma = (-1)^(chi + h0K)
  FULL_SUM_VIRTUAL,    // all compositions, sigma = (-1)^chi
  FIRST_TERM_BEHREND,  // length-1 only, global extra (-1)^h0K
  FIRST_TERM_VIRTUAL,  // length-1 only
};

struct WallVariant {
  WallKind kind = WallKind::FULL_SUM_JS;
  long h0K = 0;  // consumed by the FIXED_DET / BEHREND signs
};

enum class Theory { BEHREND, VIRTUAL };

// Which variant computes which theory on a given surface:
//   virtual: the full sum needs h^{0,1} = h^{0,2} = 0, else only the first
//            term survives the comparison of obstruction theories;
//   behrend: the fixed-determinant full sum needs h^{0,1} = 0, else the
//            first-term form with the global sign.
WallVariant variant_select(const SurfaceData& s, Theory t);

bool is_first_term(WallKind k);

// Sheaf invariants of the multiples of the primitive charge: index j stands
// for j * (alpha / divisibility(alpha)). The full-sum formulas consume every
// index 1..m (all composition parts), first-term forms only the index they
// are evaluated at.
using InvariantTable = std::map<long, Rational>;

// All ordered tuples of positive integers summing to m, lexicographically:
// (1,1,1) < (1,2) < (2,1) < (3). There are 2^(m-1) of them.
std::vector<std::vector<long>> compositions(long m);

struct PairTerm {
  std::vector<long> parts;  // the composition
  Rational value;           // its contribution to the pair invariant
};

struct PairEvaluation {
  Rational total;
  std::vector<PairTerm> terms;
  std::map<long, Rational> part_chi;  // chi((j * alpha_0)(n)) per used index
};

// Evaluates the pair invariant of alpha at twist n from the sheaf
// invariants. Errors: rank/lattice mismatches, non-integral chi, chi = 0
// (degenerate twist), missing table entries.
PairEvaluation pairs_from_vw_detailed(const Charge& alpha, const SurfaceData& s, long n,
                                      const InvariantTable& table, const WallVariant& v);
Rational pairs_from_vw(const Charge& alpha, const SurfaceData& s, long n,
                       const InvariantTable& table, const WallVariant& v);

// Inverts pairs_from_vw: recovers the invariant table from pair values.
// Full-sum variants require pair values at every index 1..m and solve
// triangularly; first-term variants solve each supplied index on its own.
InvariantTable vw_from_pairs(const Charge& alpha, const SurfaceData& s, long n,
                             const std::map<long, Rational>& pairs, const WallVariant& v);

}  // namespace vwseries

#endif  // VWSERIES_WALLCROSS_HPP
