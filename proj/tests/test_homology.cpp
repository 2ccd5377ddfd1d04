#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slicesieve/homology.hpp"

using namespace slicesieve;

namespace {

const std::vector<PretzelKnot> kGrid = {
    {2, 3, +1}, {3, 5, +1}, {5, 3, +1}, {6, 11, +1},
    {2, 3, -1}, {3, 5, -1}, {4, 3, -1}, {6, 11, -1},
};

CanonicalPoly squared_alternating_sum(long m) {
  LaurentPoly s = power_sum(m - 1, -1);
  return canonicalize(s * s);
}

}  // namespace

TEST_CASE("Seifert matrix matches the banded fixture") {
  PretzelKnot knot(2, 3, +1);
  PolyMatrix a = seifert_matrix(knot);
  REQUIRE(a.rows() == 12);
  REQUIRE(a.cols() == 12);

  LaurentPoly one = LaurentPoly::constant(1);
  // First band: -B_3.
  for (long i : {0, 1, 2}) CHECK(a.at(i, i) == -one);
  CHECK(a.at(0, 1) == one);
  CHECK(a.at(1, 2) == one);
  // Second band: -B_2 transposed, hooked to the last column.
  CHECK(a.at(3, 3) == -one);
  CHECK(a.at(4, 3) == one);
  CHECK(a.at(3, 11) == -one);
  // Third band: B_4 transposed, hooked to the last column.
  for (long i : {5, 6, 7, 8}) CHECK(a.at(i, i) == one);
  CHECK(a.at(6, 5) == -one);
  CHECK(a.at(5, 11) == one);
  // Fourth band: B_2 = [[1,-1],[0,1]].
  CHECK(a.at(9, 9) == one);
  CHECK(a.at(9, 10) == -one);
  CHECK(a.at(10, 10) == one);
  CHECK(a.at(10, 9).is_zero());
  // Gluing row: -U_3 then U_2.
  CHECK(a.at(11, 0) == -one);
  CHECK(a.at(11, 9) == one);
  CHECK(a.at(11, 11).is_zero());

  // The minus family drops two rows from the third band.
  CHECK(seifert_matrix(PretzelKnot(2, 3, -1)).rows() == 10);
}

TEST_CASE("Seifert pairing is unimodular and yields the squared Alexander polynomial") {
  for (const PretzelKnot& knot : kGrid) {
    PolyMatrix a = seifert_matrix(knot);
    LaurentPoly skew_det = mat_det(a - a.transpose(), DetStrategy::Bareiss);
    CHECK(doteq(skew_det, LaurentPoly::constant(1)));

    CanonicalPoly alex = alexander_from_seifert(knot);
    CHECK(alex == squared_alternating_sum(knot.m));
    CHECK(alex.poly().eval_int(1) == 1);
  }
  CHECK(alexander_from_seifert(PretzelKnot(2, 3, +1)) ==
        canonicalize(LaurentPoly::from_coeffs({1, -2, 3, -2, 1})));
}

TEST_CASE("Seifert route agrees with the Fox-calculus Alexander polynomial") {
  for (const PretzelKnot& knot : kGrid) {
    ReducedPresentation rp = reduced_presentation(knot);
    CHECK(alexander_from_seifert(knot) ==
          alexander_from_presentation(rp.relators, 8, rp.meridian));
  }
}

TEST_CASE("branched cover homology is V_p exactly on hypothesis-passing input") {
  GF2ModuleStructure h = branched_cover_h1_mod2(PretzelKnot(2, 3, +1), 3);
  CHECK(h.cyclic);
  CHECK(h.iso_to_vp);
  CHECK(h.f2_dimension == 2);
  REQUIRE(h.invariant_factors.size() == 1);
  CHECK(h.invariant_factors[0] == GF2Poly::all_ones(2));

  GF2ModuleStructure h11 = branched_cover_h1_mod2(PretzelKnot(6, 11, +1), 11);
  CHECK(h11.iso_to_vp);
  CHECK(h11.f2_dimension == 10);

  // 2 is not primitive mod 7 and 7 | 2n+1: two invariant factors.
  GF2ModuleStructure h7 = branched_cover_h1_mod2(PretzelKnot(3, 7, +1), 7);
  CHECK_FALSE(h7.iso_to_vp);
  CHECK_FALSE(h7.cyclic);
  CHECK(h7.invariant_factors.size() == 2);
  CHECK(h7.f2_dimension == 12);

  GF2ModuleStructure hm = branched_cover_h1_mod2(PretzelKnot(4, 5, -1), 5);
  CHECK(hm.iso_to_vp);
  CHECK(hm.f2_dimension == 4);

  CHECK_THROWS_AS(branched_cover_h1_mod2(PretzelKnot(2, 3, +1), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(branched_cover_h1_mod2(PretzelKnot(2, 3, +1), 4),
                  std::invalid_argument);
}

TEST_CASE("hypothesis report flags and split") {
  HypothesisReport r = hypothesis_check(PretzelKnot(6, 11, +1), 11);
  CHECK(r.all_pass());
  CHECK(r.a == 1);
  CHECK(r.b == 1);
  CHECK(r.k == 5);

  HypothesisReport r35 = hypothesis_check(PretzelKnot(3, 5, +1), 5);
  CHECK_FALSE(r35.all_pass());
  CHECK_FALSE(r35.not_exceptional_pair);
  CHECK(r35.m_odd);
  CHECK(r35.p_divides_m);
  CHECK(r35.two_primitive_mod_p);
  CHECK(r35.p_coprime_to_band);
  CHECK(r35.n_at_least_half_p);
  CHECK(r35.split_ok);

  HypothesisReport r7 = hypothesis_check(PretzelKnot(3, 7, +1), 7);
  CHECK_FALSE(r7.all_pass());
  CHECK_FALSE(r7.two_primitive_mod_p);
  CHECK_FALSE(r7.p_coprime_to_band);

  CHECK(hypothesis_check(PretzelKnot(2, 3, +1), 3).all_pass());

  // Sign-matched band word: 2n - 1 for the minus family.
  HypothesisReport rm = hypothesis_check(PretzelKnot(6, 11, -1), 11);
  CHECK_FALSE(rm.p_coprime_to_band);
  // Coprimality can hold while the split still lands on a = p-1.
  HypothesisReport rs = hypothesis_check(PretzelKnot(4, 3, -1), 3);
  CHECK(rs.p_coprime_to_band);
  CHECK(rs.a == 2);
  CHECK_FALSE(rs.split_ok);
  CHECK_FALSE(rs.all_pass());

  CHECK_THROWS_AS(hypothesis_check(PretzelKnot(2, 3, +1), 2), std::invalid_argument);
  CHECK_THROWS_AS(hypothesis_check(PretzelKnot(2, 3, +1), 9), std::invalid_argument);
}

TEST_CASE("passing hypotheses imply the V_p structure on a sweep") {
  for (long m : {3L, 5L, 9L, 11L}) {
    long p = m == 9 ? 3 : m;
    for (long n = 1; n <= 8; ++n)
      for (int sign : {+1, -1}) {
        if (sign < 0 && n < 2) continue;
        PretzelKnot knot(n, m, sign);
        HypothesisReport r = hypothesis_check(knot, p);
        if (!r.all_pass()) continue;
        GF2ModuleStructure h = branched_cover_h1_mod2(knot, p);
        CHECK(h.iso_to_vp);
        CHECK(h.f2_dimension == p - 1);
        // The split is pinned by the coprimality and size flags.
        CHECK(2 * n == r.b * p + r.a);
        CHECK(r.a >= 1);
        CHECK(r.a <= p - 2);
      }
  }
}
