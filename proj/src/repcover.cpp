#include "slicesieve/repcover.hpp"

#include <stdexcept>

#include "slicesieve/numeric.hpp"

namespace slicesieve {

CompanionPair companion_pair(const CharacterData& chr) {
    long p = chr.p;
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("companion_pair: p must be an odd prime");
    std::vector<int> d(p, 1);
    for (long c : chr.chi) {
        if (c < 0 || c >= p)
            throw std::invalid_argument("companion_pair: chi residue out of range");
        d[c] = -1;
    }
    size_t q = p;
    PolyMatrix x(q, q), xi(q, q), y(q, q), yi(q, q);
    LaurentPoly one = LaurentPoly::constant(1);
    for (size_t i = 0; i + 1 < q; ++i) x.at(i, i + 1) = one;
    x.at(q - 1, 0) = LaurentPoly::t();
    for (size_t i = 0; i + 1 < q; ++i) xi.at(i + 1, i) = one;
    xi.at(0, q - 1) = LaurentPoly::monomial(1, -1);
    // y scales column j of x by d[j]; its inverse scales rows instead.
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j) {
            y.at(i, j) = x.at(i, j).scaled(d[j]);
            yi.at(i, j) = xi.at(i, j).scaled(d[i]);
        }
    return CompanionPair{p, x, xi, y, yi};
}

CompanionPair companion_pair(long p) {
    CharacterData chr;
    chr.p = p;
    return companion_pair(chr);
}

RepImages cover_rep(const CharacterData& chr) {
    RepImages rep;
    if (chr.rho_seed == 0) {
        // Trivial colouring: the twist collapses and only the abelianization
        // survives, so 1x1 images reproduce the classical Alexander route.
        PolyMatrix fwd(1, 1), bwd(1, 1);
        fwd.at(0, 0) = LaurentPoly::t();
        bwd.at(0, 0) = LaurentPoly::monomial(1, -1);
        rep.img.assign(8, fwd);
        rep.inv.assign(8, bwd);
        return rep;
    }
    CompanionPair cp = companion_pair(chr);
    rep.img.assign(8, cp.x);
    rep.inv.assign(8, cp.x_inv);
    for (int g : {kGenB, kGenC, kGenGamma, kGenBeta}) {
        rep.img[g] = cp.y;
        rep.inv[g] = cp.y_inv;
    }
    return rep;
}

bool verify_rho_constraints(const PretzelKnot& knot, long p, const GF2Poly& seed) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("verify_rho_constraints: p must be an odd prime");
    WirtingerPresentation wp = wirtinger_presentation(knot);
    GF2Poly q = GF2Poly::all_ones(p - 1);
    GF2Poly s = seed % q;
    GF2Poly t = GF2Poly::t();
    GF2Poly ct = GF2Poly::one() + t;
    GF2Poly t_inv = GF2Poly::one().shifted(p - 1) % q;
    GF2Poly ct_inv = gf2_mod_inverse(ct, q);
    auto mul = [&q](const GF2Poly& a, const GF2Poly& b) { return (a * b) % q; };

    std::vector<GF2Poly> v(wp.num_arcs + 1);
    std::vector<char> known(wp.num_arcs + 1, 0);
    bool ok = true;
    auto assign = [&](long arc, const GF2Poly& val) {
        if (known[arc]) {
            if (v[arc] != val) ok = false;
            return;
        }
        v[arc] = val;
        known[arc] = 1;
    };
    // Band starts alternate between the two meridian classes; the first
    // class is pinned to 0 and the second to the seed.
    const std::vector<long>& u = wp.run_starts;
    for (long i : {0, 3, 5, 8}) assign(u[i], GF2Poly::zero());
    for (long i : {1, 2, 6, 7}) assign(u[i], s);
    if (!ok) return false;

    // Each relation reads v_lhs = (1+t) v_over + t v_rhs; solve whichever
    // position is the single unknown until nothing new resolves.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const WirtingerRelation& r : wp.relations) {
            int unknowns = !known[r.lhs] + !known[r.over] + !known[r.rhs];
            if (unknowns != 1) continue;
            if (!known[r.lhs])
                assign(r.lhs, mul(ct, v[r.over]) + mul(t, v[r.rhs]));
            else if (!known[r.rhs])
                assign(r.rhs, mul(t_inv, v[r.lhs] + mul(ct, v[r.over])));
            else
                assign(r.over, mul(ct_inv, v[r.lhs] + mul(t, v[r.rhs])));
            progress = true;
        }
    }
    if (!ok) return false;
    for (long arc = 1; arc <= wp.num_arcs; ++arc)
        if (!known[arc]) return false;
    for (const WirtingerRelation& r : wp.relations)
        if (v[r.lhs] != mul(ct, v[r.over]) + mul(t, v[r.rhs])) return false;
    return true;
}

bool verify_rho_constraints(const PretzelKnot& knot, long p) {
    return verify_rho_constraints(knot, p, GF2Poly::one());
}

PolyMatrix twisted_fox_matrix(const PretzelKnot& knot, const CharacterData& chr) {
    ReducedPresentation rp = reduced_presentation(knot);
    return fox_matrix_image(rp.wada, ReducedPresentation::column_order(), cover_rep(chr));
}

PolyMatrix twisted_fox_matrix_display(const PretzelKnot& knot, const CharacterData& chr) {
    CompanionPair cp = companion_pair(chr);
    size_t p = cp.p;
    long n = knot.n, s = knot.s(), k = knot.k();
    const PolyMatrix& x = cp.x;
    const PolyMatrix& y = cp.y;
    PolyMatrix xy = x * y, yx = y * x;
    PolyMatrix id = PolyMatrix::identity(p);
    PolyMatrix z(7 * p, 7 * p, x.ring());
    auto put = [&](size_t bi, size_t bj, const PolyMatrix& blk) {
        z.paste(blk, bi * p, bj * p);
    };
    // Columns follow column_order(): a b c alpha eta beta gamma.
    put(0, 0, x.pow(2 * n));
    put(0, 3, -mat_power_sum(x, 2 * n, -1));
    put(0, 4, mat_power_sum(x, 2 * n - 1, -1));
    put(1, 3, mat_power_sum(x, 2 * n - 1, -1));
    put(1, 4, -mat_power_sum(x, 2 * n - 2, -1));
    put(2, 1, id);
    put(2, 5, -mat_power_sum(y, 2 * s + 1, -1));
    put(2, 6, mat_power_sum(y, 2 * s + 1, -1) - id);
    put(3, 2, id);
    put(3, 5, -mat_power_sum(y, 2 * s, -1));
    put(3, 6, mat_power_sum(y, 2 * s, -1) - id);
    put(4, 2, (y - id) * mat_power_sum(xy, k - 1) * x);
    put(4, 6, id);
    put(5, 2, (x - id) * mat_power_sum(xy, k - 1) * x - xy.pow(k) * x);
    put(5, 4, id);
    put(6, 0, y * mat_power_sum(xy, k - 1) - mat_power_sum(xy, k));
    put(6, 1, (id - x) * mat_power_sum(yx, k - 1));
    put(6, 5, yx.pow(k));
    return z;
}

PolyMatrix block_a(const CompanionPair& cp, long n) {
    return -mat_power_sum(cp.y, 2 * n, -1);
}

PolyMatrix block_b(const CompanionPair& cp, long n) {
    return mat_power_sum(cp.x, 2 * n - 1, -1);
}

PolyMatrix block_c(const CompanionPair& cp, long k) {
    PolyMatrix id = PolyMatrix::identity(cp.p);
    return id + (cp.y - id) * cp.x * mat_power_sum(cp.y * cp.x, k - 1);
}

PolyMatrix block_e(const CompanionPair& cp, long k) {
    PolyMatrix id = PolyMatrix::identity(cp.p);
    return id + (cp.x - id) * cp.y * mat_power_sum(cp.x * cp.y, k - 1);
}

PolyMatrix block_d(const CompanionPair& cp, long k, long n) {
    PolyMatrix id = PolyMatrix::identity(cp.p);
    return mat_power_sum(cp.y, 2 * n + 1, -1) -
           (cp.y - id) * cp.x * mat_power_sum(cp.y * cp.x, k - 1) * cp.y.pow(2 * n + 1);
}

PolyMatrix block_m(const CompanionPair& cp, long k, long n) {
    PolyMatrix a = block_a(cp, n);
    return block_d(cp, k, n) - cp.y * (cp.x * cp.y).pow(k) * a;
}

PolyMatrix condensed_fox_matrix(const CompanionPair& cp, long n, long k) {
    size_t p = cp.p;
    PolyMatrix a = block_a(cp, n);
    PolyMatrix c = block_c(cp, k);
    PolyMatrix z(3 * p, 3 * p, cp.x.ring());
    z.paste(-a, 0, 0);
    z.paste(block_b(cp, n), 0, 2 * p);
    z.paste(cp.y * (cp.x * cp.y).pow(k) * a, p, 0);
    z.paste(c, p, p);
    z.paste(block_d(cp, k, n), 2 * p, 0);
    z.paste(c, 2 * p, p);
    z.paste(block_e(cp, k), 2 * p, 2 * p);
    return z;
}

LaurentPoly h_poly(const CompanionPair& cp, long k) {
    return mat_det(block_c(cp, k), DetStrategy::Bareiss);
}

LaurentPoly schur_det(const CompanionPair& cp, long n, long k, DetStrategy strategy) {
    PolyMatrix big = PolyMatrix::block2x2(block_a(cp, n), -block_b(cp, n),
                                          block_m(cp, k, n), block_e(cp, k));
    LaurentPoly num = mat_det(big, strategy);
    LaurentPoly den = mat_det(block_e(cp, k), DetStrategy::Bareiss);
    auto quot = lp_divexact(num, den);
    if (!quot) throw std::runtime_error("schur_det: not divisible by det of the corner block");
    return *quot;
}

PolyMatrix matrix_g(long p, long a, long b) {
    if (b < 1 || a < 1 || a > p - 2)
        throw std::invalid_argument("matrix_g: need 1 <= a <= p-2 and b >= 1");
    // 2 sum_{i=1}^{j} (-t)^i.
    auto beta_sum = [](long j) {
        return (power_sum(j, -1) - LaurentPoly::constant(1)).scaled(2);
    };
    long sgn = (b % 2) ? -1 : 1;
    LaurentPoly psi =
        (power_sum(2 * b, -1).scaled(2) + LaurentPoly::monomial(sgn, b)).scaled(sgn).shifted(1);
    PolyMatrix g(3, 3);
    g.at(0, 0) = beta_sum(b).scaled(p - a - 2);
    g.at(0, 1) = LaurentPoly::constant(-1);
    g.at(0, 2) = LaurentPoly::constant(-1);
    g.at(1, 0) = psi;
    g.at(1, 1) = LaurentPoly::constant(2 * sgn);
    g.at(1, 2) = LaurentPoly::monomial(-2, b + 1);
    g.at(2, 0) = beta_sum(b + 1).scaled(a - 2);
    g.at(2, 1) = LaurentPoly::constant(1);
    g.at(2, 2) = LaurentPoly::monomial(-1, 1);
    return g;
}

LaurentPoly g_from_matrix(long p, long a, long b) {
    LaurentPoly det = mat_det(matrix_g(p, a, b), DetStrategy::Cofactor);
    auto quot = lp_divexact(det, LaurentPoly::constant(1) + LaurentPoly::t());
    if (!quot) throw std::runtime_error("g_from_matrix: determinant not divisible by 1+t");
    return *quot;
}

}  // namespace slicesieve
