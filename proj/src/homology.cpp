#include "slicesieve/homology.hpp"

#include <stdexcept>
#include <vector>

#include "slicesieve/numeric.hpp"

namespace slicesieve {

namespace {

// Writes sgn * B_size (or its transpose) at the diagonal offset: sgn on the
// diagonal, -sgn on the adjacent band.
void put_bidiagonal(PolyMatrix& a, size_t off, size_t size, int sgn, bool transpose) {
    for (size_t i = 0; i < size; ++i) {
        a.at(off + i, off + i) = LaurentPoly::constant(sgn);
        if (i + 1 < size) {
            size_t r = transpose ? off + i + 1 : off + i;
            size_t c = transpose ? off + i : off + i + 1;
            a.at(r, c) = LaurentPoly::constant(-sgn);
        }
    }
}

}  // namespace

PolyMatrix seifert_matrix(const PretzelKnot& knot) {
    size_t n = knot.n, m = knot.m;
    // One band per strand, sized one less than its crossing count; the odd
    // negative strand has 2n + sign crossings.
    size_t s1 = 2 * n - 1, s2 = m - 1, s3 = knot.sign > 0 ? 2 * n : 2 * n - 2, s4 = m - 1;
    size_t total = s1 + s2 + s3 + s4 + 1;
    size_t o2 = s1, o3 = s1 + s2, o4 = s1 + s2 + s3, o5 = total - 1;
    PolyMatrix a(total, total);
    put_bidiagonal(a, 0, s1, -1, false);
    put_bidiagonal(a, o2, s2, -1, true);
    put_bidiagonal(a, o3, s3, +1, true);
    put_bidiagonal(a, o4, s4, +1, false);
    a.at(o2, o5) = LaurentPoly::constant(-1);
    a.at(o3, o5) = LaurentPoly::constant(1);
    a.at(o5, 0) = LaurentPoly::constant(-1);
    a.at(o5, o4) = LaurentPoly::constant(1);
    return a;
}

CanonicalPoly alexander_from_seifert(const PretzelKnot& knot) {
    PolyMatrix a = seifert_matrix(knot);
    PolyMatrix z = a.scaled(LaurentPoly::t()) - a.transpose();
    return canonicalize(mat_det(z, DetStrategy::Bareiss));
}

GF2ModuleStructure branched_cover_h1_mod2(const PretzelKnot& knot, long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("branched_cover_h1_mod2: p must be an odd prime");
    if (knot.m % p != 0)
        throw std::invalid_argument("branched_cover_h1_mod2: p must divide m");

    PolyMatrix a = seifert_matrix(knot);
    size_t total = a.rows();
    GF2Poly cyc = GF2Poly::all_ones(p - 1);
    std::vector<std::vector<GF2Poly>> rows(total, std::vector<GF2Poly>(total));
    for (size_t i = 0; i < total; ++i)
        for (size_t j = 0; j < total; ++j) {
            // t a_ij - a_ji mod 2: the exponents cannot collide.
            GF2Poly e;
            if (a.at(j, i).coeff(0).get_num() % 2 != 0) e.set_bit(0);
            if (a.at(i, j).coeff(0).get_num() % 2 != 0) e.set_bit(1);
            rows[i][j] = e;
        }
    for (size_t j = 0; j < total; ++j) {
        std::vector<GF2Poly> ann(total);
        ann[j] = cyc;
        rows.push_back(ann);
    }
    GF2ModuleStructure via_seifert = gf2t_module_reduce(rows, p);

    // Two-generator route: the band sums present the infinite-cover module;
    // the cycle relation is imposed on both generators.
    long hi = knot.sign > 0 ? 2 * knot.n : 2 * knot.n - 2;
    GF2Poly msum = GF2Poly::all_ones(knot.m - 1);
    GF2Poly prod = GF2Poly::all_ones(hi) * GF2Poly::all_ones(2 * knot.n - 1);
    GF2Poly zero = GF2Poly::zero();
    GF2ModuleStructure via_pair =
        gf2t_module_reduce({{msum, prod}, {zero, msum}, {cyc, zero}, {zero, cyc}}, p);

    if (!(via_seifert == via_pair))
        throw std::runtime_error("branched_cover_h1_mod2: presentation routes disagree");
    return via_seifert;
}

HypothesisReport hypothesis_check(const PretzelKnot& knot, long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("hypothesis_check: p must be an odd prime");
    HypothesisReport r;
    r.k = knot.k();
    r.m_odd = knot.m % 2 != 0;
    r.p_divides_m = knot.m % p == 0;
    r.two_primitive_mod_p = is_primitive_root(2, p);
    r.p_coprime_to_band = (2 * knot.n) % p != 0 && (2 * knot.n + knot.sign) % p != 0;
    r.n_at_least_half_p = knot.n >= (p + 1) / 2;
    r.not_exceptional_pair = !(knot.n == 3 && p == 5);
    r.a = (2 * knot.n) % p;
    r.b = (2 * knot.n - r.a) / p;
    r.split_ok = r.a >= 1 && r.a <= p - 2 && r.b >= 1;
    return r;
}

}  // namespace slicesieve
