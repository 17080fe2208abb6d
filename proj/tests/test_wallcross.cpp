#include <doctest.h>

#include <random>
#include <stdexcept>

#include <vwseries/serialize.hpp>
#include <vwseries/surface.hpp>
#include <vwseries/wallcross.hpp>

using namespace vwseries;

namespace {

SurfaceData k3() { return surface_preset("k3"); }

// Minimal synthetic surfaces steering variant_select's branches.
SurfaceData no_two_forms() {
  SurfaceData s;
  s.name = "rationalish";
  s.gram = {{2}};
  s.h = {1};
  s.k = {-3};
  s.h01 = 0;
  s.h02 = 0;
  s.h0K = 0;
  s.chiO = 1;
  s.eulS = 3;
  validate(s);
  return s;
}

SurfaceData irregular() {
  SurfaceData s;
  s.name = "irregular";
  s.gram = {{2}};
  s.h = {1};
  s.k = {2};
  s.h01 = 1;
  s.h02 = 0;
  s.h0K = 0;
  s.chiO = 0;
  s.eulS = 0;
  validate(s);
  return s;
}

}  // namespace

TEST_CASE("compositions enumerate ordered sums lexicographically") {
  CHECK(compositions(1) == std::vector<std::vector<long>>{{1}});
  CHECK(compositions(3) ==
        std::vector<std::vector<long>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
  for (long m = 1; m <= 7; ++m) {
    CHECK(compositions(m).size() == (1u << (m - 1)));
  }
  CHECK_THROWS_AS(compositions(0), std::domain_error);
}

TEST_CASE("variant selection follows the Hodge numbers") {
  const WallVariant k3b = variant_select(k3(), Theory::BEHREND);
  CHECK(k3b.kind == WallKind::FULL_SUM_FIXED_DET);
  CHECK(k3b.h0K == 1);
  CHECK(variant_select(k3(), Theory::VIRTUAL).kind == WallKind::FIRST_TERM_VIRTUAL);

  CHECK(variant_select(no_two_forms(), Theory::VIRTUAL).kind == WallKind::FULL_SUM_VIRTUAL);
  CHECK(variant_select(no_two_forms(), Theory::BEHREND).kind == WallKind::FULL_SUM_FIXED_DET);

  CHECK(variant_select(irregular(), Theory::BEHREND).kind == WallKind::FIRST_TERM_BEHREND);
  CHECK(variant_select(irregular(), Theory::VIRTUAL).kind == WallKind::FIRST_TERM_VIRTUAL);

  const SurfaceData gt = surface_preset("gt3");
  CHECK(variant_select(gt, Theory::BEHREND).kind == WallKind::FULL_SUM_FIXED_DET);
  CHECK(variant_select(gt, Theory::BEHREND).h0K == 3);
  CHECK(variant_select(gt, Theory::VIRTUAL).kind == WallKind::FIRST_TERM_VIRTUAL);
}

TEST_CASE("worked rank-2 example on the K3 preset") {
  const SurfaceData s = k3();
  const WallVariant v{WallKind::FULL_SUM_FIXED_DET, 1};
  const InvariantTable table{{1, Rational(24)}, {2, Rational(30)}};
  const Charge alpha{2, {0}, 2};

  // divisor-1 charge: single composition, chi((1,0,1)(1)) = 2
  const Rational p1 = pairs_from_vw(scale_charge(alpha, 1, 2), s, 1, table, v);
  CHECK(p1 == Rational(48));

  // full charge: compositions (1,1) and (2), chi((2,0,2)(1)) = 4
  const PairEvaluation ev = pairs_from_vw_detailed(alpha, s, 1, table, v);
  REQUIRE(ev.terms.size() == 2);
  CHECK(ev.terms[0].parts == std::vector<long>{1, 1});
  CHECK(ev.terms[0].value == Rational(1152));  // (1/2)(-1*2*24)^2
  CHECK(ev.terms[1].parts == std::vector<long>{2});
  CHECK(ev.terms[1].value == Rational(120));   // -(-1)^(4+1)*4*30
  CHECK(ev.total == Rational(1272));
  CHECK(ev.part_chi.at(1) == Rational(2));
  CHECK(ev.part_chi.at(2) == Rational(4));

  // and the inverse recovers the table from those pair values
  const auto solved = vw_from_pairs(alpha, s, 1, {{1, Rational(48)}, {2, Rational(1272)}}, v);
  CHECK(solved == table);
}

TEST_CASE("round trip over random tables for every variant") {
  const SurfaceData s = k3();
  std::mt19937_64 rng(0x0ddba11ULL);
  const WallVariant variants[] = {
      {WallKind::FULL_SUM_JS, 0},         {WallKind::FULL_SUM_FIXED_DET, 1},
      {WallKind::FULL_SUM_VIRTUAL, 0},    {WallKind::FIRST_TERM_BEHREND, 1},
      {WallKind::FIRST_TERM_VIRTUAL, 0},
  };
  for (const auto& v : variants) {
    for (int trial = 0; trial < 40; ++trial) {
      const long m = 1 + static_cast<long>(rng() % 6);
      Charge prim{1, {0}, 0};
      for (;;) {
        prim = Charge{1 + static_cast<long>(rng() % 4),
                      {static_cast<long>(rng() % 7) - 3},
                      static_cast<long>(rng() % 11) - 5};
        if (divisibility(prim) != 1) continue;
        bool usable = true;
        for (long j = 1; j <= m && usable; ++j) {
          usable = !chi_twisted(scale_charge(prim, j, 1), s, 2).is_zero();
        }
        if (usable) break;
      }
      const Charge alpha = scale_charge(prim, m, 1);
      InvariantTable table;
      for (long j = 1; j <= m; ++j) {
        table[j] = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 9));
      }
      std::map<long, Rational> pairs;
      for (long j = 1; j <= m; ++j) {
        pairs[j] = pairs_from_vw(scale_charge(alpha, j, m), s, 2, table, v);
      }
      CHECK(vw_from_pairs(alpha, s, 2, pairs, v) == table);
    }
  }
}

TEST_CASE("first-term variants are the length-one slice of the full sums") {
  const SurfaceData s = k3();
  const Charge alpha{4, {0}, 2};  // divisibility 2
  const InvariantTable table{{1, Rational(7, 3)}, {2, Rational(-5, 2)}};
  for (long n = 1; n <= 4; ++n) {
    const auto fixed = pairs_from_vw_detailed(alpha, s, n, table,
                                              WallVariant{WallKind::FULL_SUM_FIXED_DET, 1});
    const Rational behrend_first =
        pairs_from_vw(alpha, s, n, table, WallVariant{WallKind::FIRST_TERM_BEHREND, 1});
    CHECK(fixed.terms.back().parts == std::vector<long>{2});
    CHECK(fixed.terms.back().value == behrend_first);

    const auto full_virtual = pairs_from_vw_detailed(alpha, s, n, table,
                                                     WallVariant{WallKind::FULL_SUM_VIRTUAL, 0});
    const Rational virtual_first =
        pairs_from_vw(alpha, s, n, table, WallVariant{WallKind::FIRST_TERM_VIRTUAL, 0});
    CHECK(full_virtual.terms.back().value == virtual_first);
  }
}

TEST_CASE("worked identities with known tables") {
  const SurfaceData s = k3();
  const WallVariant v{WallKind::FULL_SUM_FIXED_DET, 1};

  const Charge a0{2, {0}, 0};
  const InvariantTable t0{{1, Rational(1)}, {2, Rational(1, 4)}};
  for (long n = 1; n <= 5; ++n) {
    const Rational chiA = chi_twisted(a0, s, n);
    const Rational chiH = chi_twisted(scale_charge(a0, 1, 2), s, n);
    CHECK(pairs_from_vw(a0, s, n, t0, v) == chiA / Rational(4) + chiH * chiH / Rational(2));
  }

  const Charge a2{2, {0}, 2};
  const InvariantTable t2{{1, Rational(24)}, {2, Rational(30)}};
  for (long n = 1; n <= 5; ++n) {
    const Rational chiA = chi_twisted(a2, s, n);
    const Rational chiH = chi_twisted(scale_charge(a2, 1, 2), s, n);
    CHECK(pairs_from_vw(a2, s, n, t2, v) ==
          Rational(5, 4) * Rational(24) * chiA + Rational(288) * chiH * chiH);
  }
}

TEST_CASE("general-type first-term inversion is twist-independent") {
  for (long h0K = 2; h0K <= 4; ++h0K) {
    const SurfaceData s = surface_preset("gt" + std::to_string(h0K));
    const WallVariant v = variant_select(s, Theory::VIRTUAL);
    REQUIRE(v.kind == WallKind::FIRST_TERM_VIRTUAL);
    const Charge alpha{2, {0}, 0};
    const Rational want = Rational(h0K) / Rational(2).pow(h0K + 1);
    for (long n = 3; n <= 7; ++n) {
      const Rational chiO = chi_twisted(Charge{1, {0}, 0}, s, n);
      const Rational p = Rational(-h0K) * chiO / Rational(2).pow(h0K);
      const auto solved = vw_from_pairs(alpha, s, n, {{2, p}}, v);
      REQUIRE(solved.count(2) == 1);
      CHECK(solved.at(2) == want);
    }
  }
}

TEST_CASE("degenerate twists and incomplete inputs are rejected") {
  const SurfaceData s = k3();
  const WallVariant v{WallKind::FULL_SUM_FIXED_DET, 1};

  // chi((1,0,2)(n)) = n^2, so n = 0 sits on a wall
  CHECK_THROWS_AS(
      pairs_from_vw(Charge{1, {0}, 2}, s, 0, InvariantTable{{1, Rational(1)}}, v),
      std::domain_error);
  CHECK_THROWS_AS(
      pairs_from_vw(Charge{2, {0}, 4}, s, 0, InvariantTable{{1, Rational(1)}, {2, Rational(1)}}, v),
      std::domain_error);

  // table missing an index a composition needs
  CHECK_THROWS_AS(
      pairs_from_vw(Charge{2, {0}, 2}, s, 1, InvariantTable{{2, Rational(30)}}, v),
      std::domain_error);

  // full-sum inversion requires every pair value 1..m
  CHECK_THROWS_AS(vw_from_pairs(Charge{2, {0}, 2}, s, 1, {{2, Rational(1272)}}, v),
                  std::domain_error);

  // first-term inversion rejects nonsense indices
  CHECK_THROWS_AS(vw_from_pairs(Charge{2, {0}, 2}, s, 1, {{0, Rational(1)}},
                                WallVariant{WallKind::FIRST_TERM_VIRTUAL, 0}),
                  std::domain_error);

  // degenerate twist on the inversion side
  CHECK_THROWS_AS(vw_from_pairs(Charge{1, {0}, 2}, s, 0, {{1, Rational(1)}},
                                WallVariant{WallKind::FIRST_TERM_VIRTUAL, 0}),
                  std::domain_error);
}

TEST_CASE("non-integral twisted Euler characteristics are rejected loudly") {
  SurfaceData s;
  s.name = "odd-lattice";
  s.gram = {{1}};
  s.h = {1};
  s.k = {0};
  s.h01 = 0;
  s.h02 = 0;
  s.h0K = 0;
  s.chiO = 1;
  s.eulS = 3;
  validate(s);
  // chi((1,1,0)(2)) = 11/2 on this data
  CHECK(chi_twisted(Charge{1, {1}, 0}, s, 2) == Rational(11, 2));
  CHECK_THROWS_AS(pairs_from_vw(Charge{1, {1}, 0}, s, 2, InvariantTable{{1, Rational(1)}},
                                WallVariant{WallKind::FULL_SUM_JS, 0}),
                  std::domain_error);
}
