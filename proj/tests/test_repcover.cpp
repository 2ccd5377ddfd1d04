#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slicesieve/gf2poly.hpp"
#include "slicesieve/repcover.hpp"

using namespace slicesieve;

namespace {

// diag(-1, -1, 1, ..., 1), the conjugator between the two meridian images.
PolyMatrix diag_a(long p) {
  PolyMatrix a(p, p);
  for (long i = 0; i < p; ++i)
    a.at(i, i) = LaurentPoly::constant(i < 2 ? -1 : 1);
  return a;
}

CanonicalPoly canon_coeffs(const std::vector<long>& cs) {
  std::vector<Rational> r(cs.begin(), cs.end());
  return canonicalize(LaurentPoly::from_coeffs(r));
}

void check_block(const PolyMatrix& z, size_t bi, size_t bj, const PolyMatrix& expected) {
  size_t p = expected.rows();
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      CHECK(z.at(bi * p + i, bj * p + j) == expected.at(i, j));
}

}  // namespace

TEST_CASE("companion pair matches the 3x3 fixture and closed-form inverses") {
  CompanionPair cp = companion_pair(3);
  LaurentPoly one = LaurentPoly::constant(1);
  LaurentPoly t = LaurentPoly::t();

  PolyMatrix x3(3, 3);
  x3.at(0, 1) = one;
  x3.at(1, 2) = one;
  x3.at(2, 0) = t;
  PolyMatrix y3(3, 3);
  y3.at(0, 1) = one;
  y3.at(1, 2) = -one;
  y3.at(2, 0) = -t;
  CHECK(cp.x == x3);
  CHECK(cp.y == y3);

  for (long p : {3L, 5L, 7L, 11L}) {
    CompanionPair c = companion_pair(p);
    PolyMatrix id = PolyMatrix::identity(p);
    CHECK(c.x * c.x_inv == id);
    CHECK(c.x_inv * c.x == id);
    CHECK(c.y * c.y_inv == id);
    CHECK(c.y_inv * c.y == id);
    CHECK(doteq(mat_det(c.x, DetStrategy::Cofactor), t));
    CHECK(doteq(mat_det(c.y, DetStrategy::Cofactor), t));
  }

  CHECK_THROWS_AS(companion_pair(1), std::invalid_argument);
  CHECK_THROWS_AS(companion_pair(2), std::invalid_argument);
  CHECK_THROWS_AS(companion_pair(4), std::invalid_argument);
  CHECK_THROWS_AS(companion_pair(9), std::invalid_argument);
  CharacterData bad;
  bad.p = 5;
  bad.chi = {0, 7};
  CHECK_THROWS_AS(companion_pair(bad), std::invalid_argument);
}

TEST_CASE("meridian images satisfy the conjugation and power identities") {
  for (long p : {3L, 5L, 7L, 11L}) {
    CompanionPair cp = companion_pair(p);
    PolyMatrix id = PolyMatrix::identity(p);
    PolyMatrix a = diag_a(p);
    CHECK(cp.y == a * cp.x * a);

    PolyMatrix xa = cp.x * a;
    PolyMatrix xap = xa.pow(p);
    CHECK(xap == PolyMatrix::scalar(p, LaurentPoly::t()));
    CHECK(a * xap == xap * a);

    PolyMatrix xy = cp.x * cp.y;
    for (long j : {1L, 2L}) {
      CHECK(xy.pow(j * p) == PolyMatrix::scalar(p, LaurentPoly::monomial(1, 2 * j)));
      CHECK((cp.y * cp.x).pow(j * p) ==
            PolyMatrix::scalar(p, LaurentPoly::monomial(1, 2 * j)));
    }
    for (long k : {(p - 1) / 2, (p - 1) / 2 + p})
      CHECK(xy.pow(k) * cp.x == cp.y * xy.pow(k));

    CHECK_FALSE(mat_det(id - xy, DetStrategy::Bareiss).is_zero());
    LaurentPoly dx = mat_det(id - cp.x, DetStrategy::Bareiss);
    LaurentPoly dy = mat_det(id - cp.y, DetStrategy::Bareiss);
    CHECK(dx == dy);
    CHECK(doteq(dx, LaurentPoly::constant(1) - LaurentPoly::t()));
  }
}

TEST_CASE("cover rep sends every relator to the identity when p divides m") {
  struct Case {
    long n, m, p;
    int sign;
  };
  const std::vector<Case> grid = {
      {2, 3, 3, +1}, {1, 3, 3, +1}, {2, 9, 3, +1}, {3, 5, 5, +1},
      {2, 5, 5, +1}, {2, 3, 3, -1}, {3, 5, 5, -1},
  };
  for (const Case& c : grid) {
    PretzelKnot knot(c.n, c.m, c.sign);
    CharacterData chr;
    chr.p = c.p;
    RepImages rep = cover_rep(chr);
    ReducedPresentation rp = reduced_presentation(knot);
    PolyMatrix id = PolyMatrix::identity(c.p);
    for (const Word& w : rp.wada) CHECK(word_image(w, rep) == id);
    for (const Word& w : rp.relators) CHECK(word_image(w, rep) == id);
  }

  // p = 5 does not divide m = 3: the crossing-count relators fail to close.
  PretzelKnot knot(2, 3, +1);
  CharacterData chr;
  chr.p = 5;
  ReducedPresentation rp = reduced_presentation(knot);
  CHECK(word_image(rp.wada[kGenGamma], cover_rep(chr)) != PolyMatrix::identity(5));
}

TEST_CASE("arc colourings over the cyclotomic quotient exist exactly when p divides m") {
  GF2Poly one = GF2Poly::one();
  CHECK(verify_rho_constraints(PretzelKnot(3, 5, +1), 5));
  CHECK(verify_rho_constraints(PretzelKnot(6, 11, +1), 11));
  CHECK(verify_rho_constraints(PretzelKnot(2, 3, +1), 3));
  CHECK(verify_rho_constraints(PretzelKnot(2, 9, +1), 3));
  CHECK(verify_rho_constraints(PretzelKnot(3, 7, +1), 7));
  CHECK(verify_rho_constraints(PretzelKnot(3, 5, -1), 5));

  CHECK_FALSE(verify_rho_constraints(PretzelKnot(2, 3, +1), 5));
  CHECK_FALSE(verify_rho_constraints(PretzelKnot(3, 5, +1), 7));
  CHECK_FALSE(verify_rho_constraints(PretzelKnot(6, 11, +1), 3));

  // The zero seed is the trivial colouring and always extends.
  CHECK(verify_rho_constraints(PretzelKnot(2, 3, +1), 5, GF2Poly::zero()));
  // Unit seeds are all equivalent to the seed 1.
  for (uint64_t mask : {2ULL, 5ULL})
    CHECK(verify_rho_constraints(PretzelKnot(2, 3, +1), 3, GF2Poly::from_mask(mask)));

  CHECK_THROWS_AS(verify_rho_constraints(PretzelKnot(2, 3, +1), 4, one),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_rho_constraints(PretzelKnot(2, 3, +1), 2, one),
                  std::invalid_argument);
}

TEST_CASE("twisted Fox matrix equals its closed-form block assembly") {
  struct Case {
    long n, m, p;
    int sign;
  };
  const std::vector<Case> grid = {
      {2, 3, 3, +1}, {1, 3, 3, +1}, {2, 9, 3, +1}, {3, 5, 5, +1}, {2, 3, 3, -1},
  };
  for (const Case& c : grid) {
    PretzelKnot knot(c.n, c.m, c.sign);
    CharacterData chr;
    chr.p = c.p;
    PolyMatrix fox = twisted_fox_matrix(knot, chr);
    CHECK(fox.rows() == 7 * c.p);
    CHECK(fox.cols() == 7 * c.p);
    CHECK(fox == twisted_fox_matrix_display(knot, chr));
  }

  // Named block fixtures for (n, m, p) = (2, 3, 3).
  CompanionPair cp = companion_pair(3);
  CharacterData chr;
  PolyMatrix fox = twisted_fox_matrix(PretzelKnot(2, 3, +1), chr);
  check_block(fox, 0, 3, -mat_power_sum(cp.x, 4, -1));
  check_block(fox, 4, 2, (cp.y - PolyMatrix::identity(3)) * cp.x);
  check_block(fox, 4, 6, PolyMatrix::identity(3));
}

TEST_CASE("condensed matrix determinant factors through the corner blocks") {
  // (n, m, p) = (2, 3, 3): full 21x21 against condensed 9x9.
  PretzelKnot knot(2, 3, +1);
  CharacterData chr;
  CompanionPair cp = companion_pair(3);
  PolyMatrix fox = twisted_fox_matrix(knot, chr);
  LaurentPoly det_cof = mat_det(fox, DetStrategy::Cofactor);
  CHECK(det_cof == mat_det(fox, DetStrategy::EvalInterp));
  CHECK(det_cof == mat_det_eval_serial(fox));

  PolyMatrix condensed = condensed_fox_matrix(cp, 2, 1);
  LaurentPoly det_cond = mat_det(condensed, DetStrategy::Bareiss);
  CHECK(doteq(det_cof, det_cond));

  LaurentPoly h = h_poly(cp, 1);
  CHECK(doteq(det_cond, h * h * schur_det(cp, 2, 1)));

  // (n, m, p) = (3, 5, 5): eval-interp on 35x35 against condensed 15x15.
  PretzelKnot knot5(3, 5, +1);
  CharacterData chr5;
  chr5.p = 5;
  CompanionPair cp5 = companion_pair(5);
  LaurentPoly det5 = mat_det(twisted_fox_matrix(knot5, chr5), DetStrategy::EvalInterp);
  PolyMatrix condensed5 = condensed_fox_matrix(cp5, 3, 2);
  CHECK(doteq(det5, mat_det(condensed5, DetStrategy::Bareiss)));
  LaurentPoly h5 = h_poly(cp5, 2);
  CHECK(doteq(mat_det(condensed5, DetStrategy::Bareiss), h5 * h5 * schur_det(cp5, 3, 2)));
}

TEST_CASE("corner blocks satisfy the reduction identities") {
  for (long p : {3L, 5L, 7L}) {
    long k = (p - 1) / 2;
    CompanionPair cp = companion_pair(p);
    PolyMatrix id = PolyMatrix::identity(p);
    PolyMatrix xy = cp.x * cp.y;
    PolyMatrix yx = cp.y * cp.x;
    PolyMatrix w = id + cp.y * xy.pow(k);

    CHECK(block_e(cp, k) * (id - xy) == w * (id - cp.y));
    CHECK(block_c(cp, k) * (id - yx) == w * (id - cp.x));
    CHECK(h_poly(cp, k) == mat_det(block_e(cp, k), DetStrategy::Bareiss));

    for (long n : {2L, 3L}) {
      PolyMatrix a = block_a(cp, n);
      CHECK(block_m(cp, k, n) == -w * a - block_c(cp, k) * cp.y.pow(2 * n + 1));
      CHECK(a * (id + cp.y) == -(id + cp.y.pow(2 * n + 1)));
      CHECK((id + cp.x) * block_b(cp, n) == id - cp.x.pow(2 * n));
    }
  }

  // The Schur column E^{-1} M is independent of the admissible k.
  for (long p : {3L, 5L}) {
    long n = 2;
    long k1 = (p - 1) / 2, k2 = k1 + p;
    CompanionPair cp = companion_pair(p);
    PolyMatrix e1 = block_e(cp, k1), e2 = block_e(cp, k2);
    LaurentPoly d1 = mat_det(e1, DetStrategy::Bareiss);
    LaurentPoly d2 = mat_det(e2, DetStrategy::Bareiss);
    CHECK((mat_adjugate(e1) * block_m(cp, k1, n)).scaled(d2) ==
          (mat_adjugate(e2) * block_m(cp, k2, n)).scaled(d1));
    CHECK(doteq(schur_det(cp, n, k1), schur_det(cp, n, k2)));
  }
}

TEST_CASE("g matrix reproduces the closed form and the table entries") {
  CHECK(canonicalize(g_from_matrix(3, 1, 1)) == canon_coeffs({2, -5, 2}));
  CHECK(canonicalize(g_from_matrix(11, 1, 1)) == canon_coeffs({2, 27, 2}));
  CHECK(canonicalize(g_from_matrix(11, 3, 1)) == canon_coeffs({6, -35, 6}));
  CHECK(canonicalize(g_from_matrix(11, 2, 2)) == canon_coeffs({2, -30, 59, -30, 2}));
  CHECK(canonicalize(g_from_matrix(5, 1, 1)) == canon_coeffs({2, 3, 2}));
  CHECK(canonicalize(g_from_matrix(5, 3, 1)) == canon_coeffs({6, -11, 6}));
  CHECK(canonicalize(g_from_matrix(5, 2, 2)) == canon_coeffs({2, -6, 11, -6, 2}));
  CHECK(canonicalize(g_from_matrix(5, 1, 3)) == canon_coeffs({2, 2, -6, 11, -6, 2, 2}));

  // (4a-6) sum_{i<=2b} (-t)^i + (-t)^b - 4(p-4) t (sum_{i<b} (-t)^i)^2.
  for (long p : {5L, 7L, 11L, 13L})
    for (long b : {1L, 2L, 3L})
      for (long a = 1; a <= p - 2; ++a) {
        LaurentPoly closed =
            power_sum(2 * b, -1).scaled(4 * a - 6) +
            LaurentPoly::monomial(b % 2 ? -1 : 1, b) -
            (power_sum(b - 1, -1) * power_sum(b - 1, -1)).shifted(1).scaled(4 * (p - 4));
        CHECK(doteq(g_from_matrix(p, a, b), closed));
      }

  CHECK_THROWS_AS(matrix_g(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(matrix_g(5, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(matrix_g(5, 1, 0), std::invalid_argument);
}
