#include <vwseries/wallcross.hpp>

#include <sstream>
#include <stdexcept>

namespace vwseries {

namespace {

// chi((j/m) * alpha (n)) as an exact integer; throws if the scaled charge or
// its twisted Euler characteristic fails to be integral, which would mean
// the inputs do not describe an actual multiple of a sheaf class.
Int part_chi(const Charge& alpha, const SurfaceData& s, long n, long j, long m) {
  Charge scaled = scale_charge(alpha, j, m);
  Rational chi = chi_twisted(scaled, s, n);
  if (!chi.is_integer()) {
    std::ostringstream os;
    os << "twisted Euler characteristic of " << charge_str(scaled) << " at n=" << n
       << " is not an integer: " << chi.str();
    throw std::domain_error(os.str());
  }
  return chi.num();
}

Int factorial(long l) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(l));
  return f;
}

// sigma(chi) for one composition part.
Rational part_sign(const Int& chi, const WallVariant& v) {
  switch (v.kind) {
    case WallKind::FULL_SUM_FIXED_DET:
      return parity_sign(chi + Int(v.h0K));
    case WallKind::FULL_SUM_JS:
    case WallKind::FULL_SUM_VIRTUAL:
    case WallKind::FIRST_TERM_BEHREND:
    case WallKind::FIRST_TERM_VIRTUAL:
      return parity_sign(chi);
  }
  throw std::logic_error("unhandled wall-crossing variant");
}

}  // namespace

WallVariant variant_select(const SurfaceData& s, Theory t) {
  WallVariant v;
  v.h0K = s.h0K;
  switch (t) {
    case Theory::VIRTUAL:
      v.kind = (s.h01 == 0 && s.h02 == 0) ? WallKind::FULL_SUM_VIRTUAL
                                          : WallKind::FIRST_TERM_VIRTUAL;
      break;
    case Theory::BEHREND:
      v.kind = (s.h01 == 0) ? WallKind::FULL_SUM_FIXED_DET : WallKind::FIRST_TERM_BEHREND;
      break;
  }
  return v;
}

bool is_first_term(WallKind k) {
  return k == WallKind::FIRST_TERM_BEHREND || k == WallKind::FIRST_TERM_VIRTUAL;
}

std::vector<std::vector<long>> compositions(long m) {
  if (m < 1) throw std::domain_error("compositions need m >= 1");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  // Depth-first with ascending first part keeps the output lexicographic.
  auto rec = [&](auto&& self, long rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long d = 1; d <= rest; ++d) {
      cur.push_back(d);
      self(self, rest - d);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

PairEvaluation pairs_from_vw_detailed(const Charge& alpha, const SurfaceData& s, long n,
                                      const InvariantTable& table, const WallVariant& v) {
  validate(s);
  validate(alpha, s);
  const long m = divisibility(alpha);

  PairEvaluation ev;
  // chi of every multiple of the primitive charge that some composition of m
  // can reach, with the degeneracy check: a vanishing chi makes the twist n
  // sit on a wall for that multiple and the decomposition breaks down.
  for (long j = 1; j <= m; ++j) {
    Int chi = part_chi(alpha, s, n, j, m);
    if (chi == 0) {
      std::ostringstream os;
      os << "degenerate n=" << n << ": chi of the multiple " << j << " of the primitive charge vanishes";
      throw std::domain_error(os.str());
    }
    ev.part_chi[j] = Rational(chi);
  }

  std::vector<std::vector<long>> comps;
  if (is_first_term(v.kind)) {
    comps.push_back({m});
  } else {
    comps = compositions(m);
  }

  ev.total = Rational(0);
  for (const auto& comp : comps) {
    const long l = static_cast<long>(comp.size());
    Rational term = parity_sign(l) / Rational(factorial(l));
    for (long d : comp) {
      auto it = table.find(d);
      if (it == table.end()) {
        std::ostringstream os;
        os << "invariant table has no entry for multiple " << d;
        throw std::domain_error(os.str());
      }
      const Int chi = ev.part_chi.at(d).num();
      term = term * part_sign(chi, v) * Rational(chi) * it->second;
    }
    if (v.kind == WallKind::FIRST_TERM_BEHREND) {
      term = term * parity_sign(v.h0K);
    }
    ev.terms.push_back(PairTerm{comp, term});
    ev.total = ev.total + term;
  }
  return ev;
}

Rational pairs_from_vw(const Charge& alpha, const SurfaceData& s, long n,
                       const InvariantTable& table, const WallVariant& v) {
  return pairs_from_vw_detailed(alpha, s, n, table, v).total;
}

InvariantTable vw_from_pairs(const Charge& alpha, const SurfaceData& s, long n,
                             const std::map<long, Rational>& pairs, const WallVariant& v) {
  validate(s);
  validate(alpha, s);
  const long m = divisibility(alpha);
  const Charge prim = scale_charge(alpha, 1, m);

  // Coefficient of inv[j] in the length-1 composition of the pair invariant
  // of j * prim; the solve divides by it, so the degeneracy check matters.
  auto linear_coeff = [&](long j) -> Rational {
    Int chi = part_chi(prim, s, n, j, 1);
    if (chi == 0) {
      std::ostringstream os;
      os << "degenerate n=" << n << ": chi of the multiple " << j << " of the primitive charge vanishes";
      throw std::domain_error(os.str());
    }
    Rational c = Rational(-1) * part_sign(chi, v) * Rational(chi);
    if (v.kind == WallKind::FIRST_TERM_BEHREND) c = c * parity_sign(v.h0K);
    return c;
  };

  InvariantTable table;

  if (is_first_term(v.kind)) {
    // Each index decouples: P(j * prim, n) = c_j * inv[j].
    for (const auto& [j, p] : pairs) {
      if (j < 1) throw std::domain_error("pair indices must be >= 1");
      table[j] = p / linear_coeff(j);
    }
    return table;
  }

  for (long j = 1; j <= m; ++j) {
    auto it = pairs.find(j);
    if (it == pairs.end()) {
      std::ostringstream os;
      os << "full-sum inversion needs pair values at every multiple 1.." << m
         << "; missing " << j;
      throw std::domain_error(os.str());
    }
    // Contribution of all compositions of j avoiding inv[j]: evaluate with a
    // zero placed at index j, which kills exactly the length-1 composition.
    InvariantTable probe = table;
    probe[j] = Rational(0);
    Charge multiple = scale_charge(prim, j, 1);
    Rational rest = pairs_from_vw_detailed(multiple, s, n, probe, v).total;
    table[j] = (it->second - rest) / linear_coeff(j);
  }
  return table;
}

}  // namespace vwseries
