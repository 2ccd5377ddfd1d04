#pragma once

#include <vector>

#include "slicesieve/gf2poly.hpp"
#include "slicesieve/group.hpp"
#include "slicesieve/laurent.hpp"
#include "slicesieve/polymat.hpp"
#include "slicesieve/presentation.hpp"

namespace slicesieve {

// Character data for the metabelian cover representation.  p is an odd
// prime; chi lists the residues mod p where the twisting diagonal carries
// a -1; rho_seed is the colouring seed on the second band (0 = trivial).
struct CharacterData {
  long p = 3;
  std::vector<long> chi{0, 2};
  long rho_seed = 1;
};

// Images of the two meridian classes.  x is the cyclic companion block
// (1s on the superdiagonal, t in the lower-left corner); y = x * diag(d)
// with d[j] = -1 exactly for j in chi.  Inverses are closed-form.
struct CompanionPair {
  long p = 0;
  PolyMatrix x;
  PolyMatrix x_inv;
  PolyMatrix y;
  PolyMatrix y_inv;
};

CompanionPair companion_pair(const CharacterData& chr);
CompanionPair companion_pair(long p);

// Generator images for the reduced presentation: a, e, alpha, eta map to x
// and b, c, gamma, beta map to y.
RepImages cover_rep(const CharacterData& chr);

// Solves the arc colouring over F_2[t]/(1+t+...+t^{p-1}) induced by the
// Wirtinger relations, with the first-band starts pinned to 0 and the
// second-band starts pinned to seed.  True iff the system is consistent.
bool verify_rho_constraints(const PretzelKnot& knot, long p, const GF2Poly& seed);
bool verify_rho_constraints(const PretzelKnot& knot, long p);

// Fox matrix of the rearranged relators under cover_rep, meridian column
// deleted: a 7p x 7p block matrix.
PolyMatrix twisted_fox_matrix(const PretzelKnot& knot, const CharacterData& chr);

// Same matrix assembled from closed-form blocks instead of Fox calculus.
// Valid when 2k+1 is a multiple of p with k = (p-1)/2 mod p.
PolyMatrix twisted_fox_matrix_display(const PretzelKnot& knot, const CharacterData& chr);

// Blocks of the condensed 3p x 3p matrix.  Conventions: k = (m-1)/2, and
// n counts half the crossings of the first band.
PolyMatrix block_a(const CompanionPair& cp, long n);   // -sum_{i=0}^{2n} (-y)^i
PolyMatrix block_b(const CompanionPair& cp, long n);   // sum_{i=0}^{2n-1} (-x)^i
PolyMatrix block_c(const CompanionPair& cp, long k);   // 1 + (y-1) x sum_{i<k} (yx)^i
PolyMatrix block_d(const CompanionPair& cp, long k, long n);
PolyMatrix block_e(const CompanionPair& cp, long k);   // 1 + (x-1) y sum_{i<k} (xy)^i
// block_d(cp,k,n) - y (xy)^k block_a(cp,n); the Schur-column complement.
PolyMatrix block_m(const CompanionPair& cp, long k, long n);

// [[-A, 0, B], [y(xy)^k A, C, 0], [D, C, E]] in p x p blocks.
PolyMatrix condensed_fox_matrix(const CompanionPair& cp, long n, long k);

// det of block_c (equals det of block_e); the square factor of the
// condensed determinant.
LaurentPoly h_poly(const CompanionPair& cp, long k);

// det(A + B E^{-1} M) computed as det([[A, -B], [M, E]]) / det(E); the
// division is exact, else throws.
LaurentPoly schur_det(const CompanionPair& cp, long n, long k,
                      DetStrategy strategy = DetStrategy::Bareiss);

// The 3x3 reduced matrix over Z[t,t^-1] for the split 2n = b p + a.
PolyMatrix matrix_g(long p, long a, long b);

// det(matrix_g) / (1 + t); the division is exact, else throws.
LaurentPoly g_from_matrix(long p, long a, long b);

}  // namespace slicesieve
