#include <vwseries/checks.hpp>

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <vwseries/hilb.hpp>
#include <vwseries/k3vw.hpp>
#include <vwseries/qseries.hpp>
#include <vwseries/serialize.hpp>
#include <vwseries/surface.hpp>
#include <vwseries/wallcross.hpp>

namespace vwseries {

namespace {

// Deliberately naive expansion of prod_{k=1}^{n} (1 - q^k)^{-24} up to q^n,
// multiplying in one geometric series at a time. This shares no code with
// the divisor-sum recurrence or the series-inversion path it checks.
std::vector<Int> brute_product_neg24(std::size_t n) {
  std::vector<Int> acc(n + 1, Int(0));
  acc[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (int copy = 0; copy < 24; ++copy) {
      std::vector<Int> next(n + 1, Int(0));
      for (std::size_t i = 0; i <= n; ++i) {
        if (acc[i] == 0) continue;
        for (std::size_t j = i; j <= n; j += k) next[j] += acc[i];
      }
      acc = std::move(next);
    }
  }
  return acc;
}

long hilb_index_via_mukai(const Charge& beta, const SurfaceData& s) {
  Rational idx = Rational(1) - mukai_chi(beta, beta, s) / Rational(2);
  return static_cast<long>(idx.to_int().get_si());
}

void check_c1(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  struct Case {
    long c2;
    Rational want;
  };
  const Case cases[] = {{0, Rational(1, 4)}, {1, Rational(0)}, {2, Rational(30)}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    Rational got = vw_k3_charge(Charge{2, {0}, c.c2}, s);
    ok = ok && got == c.want;
    d << "vw(2,0," << c.c2 << ")=" << got.str() << " (want " << c.want.str() << ") ";
  }
  r.pass = ok;
  r.details = d.str();
}

void check_c2(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  const QSeries closed = vw_k3_series_closed(2, 24, s);
  const QSeries pred = rank2_pred_series(24);
  r.pass = closed == pred;
  r.details = r.pass ? "closed form and modular prediction agree to order 24"
                     : "closed: " + closed.str() + " vs prediction: " + pred.str();
}

void check_c3(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  std::ostringstream d;
  bool ok = true;
  for (long rk = 1; rk <= 6; ++rk) {
    const bool eq = vw_k3_series_closed(rk, 24, s) == vw_k3_series_termwise(rk, 24, s);
    ok = ok && eq;
    d << "r=" << rk << (eq ? " ok " : " MISMATCH ");
  }
  r.pass = ok;
  r.details = d.str() + "(order 24)";
}

void check_c4(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  std::ostringstream d;
  bool ok = true;
  for (long rk : {2L, 3L, 5L}) {
    const bool eq = prime_rank_display(rk, 20) == vw_k3_series_closed(rk, 20, s);
    ok = ok && eq;
    d << "r=" << rk << (eq ? " ok " : " MISMATCH ");
  }
  r.pass = ok;
  r.details = d.str() +
              "(order 20). annotation: the display carries +1/r^2 on the q^r eta(q^r)^-24 "
              "term; the variant with -1/r^2 already disagrees with the divisor sum at q^0 "
              "and is not used.";
}

void check_c5(CheckResult& r) {
  const Int expected[] = {Int(1),    Int(24),    Int(324),
                          Int(3200), Int(25650), Int(176256)};
  const auto brute = brute_product_neg24(5);
  std::ostringstream d;
  bool ok = true;
  for (long m = 0; m <= 5; ++m) {
    const Int fast = hilb_euler(24, m);
    const Int& slow = brute[static_cast<std::size_t>(m)];
    const bool eq = fast == expected[m] && slow == expected[m];
    ok = ok && eq;
    d << "e(Hilb^" << m << ")=" << fast.get_str() << (eq ? " ok " : " MISMATCH ");
  }
  r.pass = ok;
  r.details = d.str();
}

void check_c6(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  const WallVariant v = variant_select(s, Theory::BEHREND);
  std::mt19937_64 rng(0x5eed5eedULL);
  const long n = 2;
  int ok = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const long m = 1 + static_cast<long>(rng() % 6);
    Charge prim{1, {0}, 0};
    for (;;) {
      const long r0 = 1 + static_cast<long>(rng() % 4);
      const long a = static_cast<long>(rng() % 7) - 3;
      const long c2 = static_cast<long>(rng() % 11) - 5;
      prim = Charge{r0, {a}, c2};
      if (divisibility(prim) != 1) continue;
      bool usable = true;
      for (long j = 1; j <= m && usable; ++j) {
        usable = !chi_twisted(scale_charge(prim, j, 1), s, n).is_zero();
      }
      if (usable) break;
    }
    const Charge alpha = scale_charge(prim, m, 1);
    InvariantTable table;
    for (long j = 1; j <= m; ++j) {
      const long num = static_cast<long>(rng() % 19) - 9;
      const long den = 1 + static_cast<long>(rng() % 9);
      table[j] = Rational(num, den);
    }
    std::map<long, Rational> pairs;
    for (long j = 1; j <= m; ++j) {
      pairs[j] = pairs_from_vw(scale_charge(alpha, j, m), s, n, table, v);
    }
    if (vw_from_pairs(alpha, s, n, pairs, v) == table) ++ok;
  }
  r.pass = ok == trials;
  std::ostringstream d;
  d << ok << "/" << trials << " random tables round-tripped (divisibilities up to 6, n=" << n
    << ")";
  r.details = d.str();
}

void check_c7(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  const WallVariant v{WallKind::FULL_SUM_FIXED_DET, s.h0K};
  std::ostringstream d;
  bool ok = true;

  const Charge a0{2, {0}, 0};
  const InvariantTable t0{{1, Rational(1)}, {2, Rational(1, 4)}};
  for (long n = 1; n <= 5; ++n) {
    const Rational chiA = chi_twisted(a0, s, n);
    const Rational chiH = chi_twisted(scale_charge(a0, 1, 2), s, n);
    const Rational want = chiA / Rational(4) + chiH * chiH / Rational(2);
    const Rational got = pairs_from_vw(a0, s, n, t0, v);
    ok = ok && got == want;
  }
  d << "charge (2,0,0): P(n) = chi/4 + chi_half^2/2 at n=1..5 " << (ok ? "ok" : "MISMATCH");

  const Charge a2{2, {0}, 2};
  const InvariantTable t2{{1, Rational(24)}, {2, Rational(30)}};
  bool ok2 = true;
  for (long n = 1; n <= 5; ++n) {
    const Rational chiA = chi_twisted(a2, s, n);
    const Rational chiH = chi_twisted(scale_charge(a2, 1, 2), s, n);
    const Rational want =
        Rational(5, 4) * chiA * Rational(24) + chiH * chiH * Rational(576) / Rational(2);
    const Rational got = pairs_from_vw(a2, s, n, t2, v);
    ok2 = ok2 && got == want;
  }
  d << "; charge (2,0,2): P(n) = (5/4)*24*chi + 288*chi_half^2 at n=1..5 "
    << (ok2 ? "ok" : "MISMATCH");
  r.pass = ok && ok2;
  r.details = d.str();
}

void check_c8(CheckResult& r) {
  std::ostringstream d;
  bool ok = true;
  for (long h0K = 2; h0K <= 4; ++h0K) {
    const SurfaceData s = surface_preset("gt" + std::to_string(h0K));
    const WallVariant v = variant_select(s, Theory::VIRTUAL);
    if (v.kind != WallKind::FIRST_TERM_VIRTUAL) {
      ok = false;
      d << "h0K=" << h0K << " selected the wrong variant ";
      continue;
    }
    const Charge alpha{2, {0}, 0};
    const Charge structure_sheaf{1, {0}, 0};
    const Rational want = Rational(h0K) / Rational(2).pow(h0K + 1);
    bool all_n = true;
    for (long n = 3; n <= 7; ++n) {
      const Rational chiO = chi_twisted(structure_sheaf, s, n);
      const Rational p = Rational(-h0K) * chiO / Rational(2).pow(h0K);
      const auto solved = vw_from_pairs(alpha, s, n, {{2, p}}, v);
      all_n = all_n && solved.at(2) == want;
    }
    ok = ok && all_n;
    d << "h0K=" << h0K << " -> " << want.str() << (all_n ? " ok " : " MISMATCH ");
  }
  r.pass = ok;
  r.details = d.str() + "(n=3..7, value independent of n)";
}

void check_c9(CheckResult& r) {
  const QSeries f = eta_pow_neg24(Rational(1), 30);
  std::ostringstream d;
  bool ok = true;
  for (long dd = 1; dd <= 6; ++dd) {
    const bool eq = root_of_unity_avg(f, dd) == residue_extract(f, dd, 0);
    ok = ok && eq;
    d << "d=" << dd << (eq ? " ok " : " MISMATCH ");
  }
  r.pass = ok;
  r.details = d.str() + "(order 30)";
}

void check_c10(CheckResult& r) {
  std::ostringstream d;
  bool ok = true;
  for (long rk = 1; rk <= 4; ++rk) {
    // The constructor itself re-derives the eta form and throws on mismatch;
    // compare once more here so the check stays meaningful on its own.
    const QSeries got = rs_thickening_series(rk, 30);
    QSeries eta = shift_exponent(eta_pow_neg24(Rational(rk), 30), Rational(rk)) *
                  Rational(1, Int(rk) * Int(rk));
    const bool eq = got == eta.truncated(Rational(30)).reduced();
    ok = ok && eq;
    d << "r=" << rk << (eq ? " ok " : " MISMATCH ");
  }
  r.pass = ok;
  r.details = d.str() + "(order 30)";
}

void check_c11(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  const QSeries odd = odd_c2_series(24);
  const QSeries from_closed = residue_extract(vw_k3_series_closed(2, 24, s), 2, 1);
  r.pass = odd == from_closed;
  r.details = r.pass ? "odd-c2 series equals the odd part of the rank-2 closed form (order 24)"
                     : "odd: " + odd.str() + " vs closed-form odd part: " + from_closed.str();
}

void check_c12(CheckResult& r) {
  const SurfaceData s = surface_preset("k3");
  std::ostringstream d;
  bool ok = true;
  for (long k = 0; k <= 10; ++k) {
    const long long vd = virtual_dimension(Charge{1, {0}, k}, s);
    const long idx2 = hilb_index_via_mukai(Charge{2, {0}, 2 * k}, s);
    const long idx1 = hilb_index_via_mukai(Charge{1, {0}, k}, s);
    const bool eq = vd == 2 * k && idx2 == 4 * k - 3 && idx1 == k;
    ok = ok && eq;
    if (!eq) d << "k=" << k << " MISMATCH ";
  }
  r.pass = ok;
  r.details = ok ? "vd(1,0,k)=2k, idx(2,0,2k)=4k-3, idx(1,0,k)=k for k=0..10" : d.str();
}

struct CheckDef {
  const char* id;
  const char* description;
  const char* anchor;
  std::function<void(CheckResult&)> fn;
};

const std::vector<CheckDef>& check_defs() {
  static const std::vector<CheckDef> defs = {
      {"C1", "rank-2 invariants at c2 = 0, 1, 2 on the K3 preset",
       "hand-evaluated divisor sums over Hilbert-scheme Euler numbers", check_c1},
      {"C2", "rank-2 closed form equals the modular prediction to order 24",
       "quarter eta(q^2)^-24 plus the even half-exponent eta combination", check_c2},
      {"C3", "closed form equals the term-by-term series for ranks 1..6 to order 24",
       "divisor-sum reorganisation of the charge-by-charge definition", check_c3},
      {"C4", "prime-rank two-term display equals the closed form for r = 2, 3, 5 to order 20",
       "collapse of the divisor sum at prime rank", check_c4},
      {"C5", "Hilbert-scheme Euler numbers 1, 24, 324, 3200, 25650, 176256",
       "naive geometric-series product expansion written separately from the fast path",
       check_c5},
      {"C6", "pair/invariant conversion round-trips 200 random tables",
       "triangular structure of the composition sum", check_c6},
      {"C7", "worked pair invariants for charges (2,0,0) and (2,0,2)",
       "composition-by-composition evaluation with known tables", check_c7},
      {"C8", "general-type first-term identity gives h0K/2^(h0K+1), independent of n",
       "first-term inversion of P(n) = -2^-h0K * h0K * chi(O(n))", check_c8},
      {"C9", "root-of-unity averaging equals residue extraction for d <= 6 to order 30",
       "trace identity in the cyclotomic quotient ring", check_c9},
      {"C10", "point-thickening series equals its eta form for r <= 4 to order 30",
       "geometric-series substitution q -> q^r", check_c10},
      {"C11", "odd-c2 series equals the odd part of the rank-2 closed form to order 24",
       "residue extraction at odd exponents", check_c11},
      {"C12", "virtual dimensions 2k and Hilbert-scheme indices 4k-3 and k",
       "Euler-form index computations on the even rank-one lattice", check_c12},
  };
  return defs;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& filter) {
  std::vector<CheckResult> out;
  for (const auto& def : check_defs()) {
    if (!filter.empty() && filter != def.id) continue;
    CheckResult r;
    r.id = def.id;
    r.description = def.description;
    r.anchor = def.anchor;
    try {
      def.fn(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vwseries
