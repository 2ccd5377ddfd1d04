#include "slicesieve/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace slicesieve {

std::string LaurentPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        Rational av = v < 0 ? Rational(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit_coeff = (av == 1) && e != 0;
        if (!unit_coeff) os << av.get_str();
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly geom_sum(const LaurentPoly& r, long lo, long hi) {
    LaurentPoly acc(r.ring());
    if (hi < lo) return acc;
    LaurentPoly pw = r.pow(lo);
    for (long i = lo; i <= hi; ++i) {
        acc += pw;
        if (i < hi) pw *= r;
    }
    return acc;
}

LaurentPoly power_sum(long hi, int sign, Ring ring) {
    LaurentPoly acc(ring);
    for (long i = 0; i <= hi; ++i) acc.add_to(i, (i % 2 == 0 || sign > 0) ? 1 : -1);
    return acc;
}

CanonicalPoly::CanonicalPoly(const LaurentPoly& raw) { *this = canonicalize(raw); }

std::vector<Integer> CanonicalPoly::coeffs() const {
    std::vector<Integer> out;
    if (p_.is_zero()) return out;
    out.resize(static_cast<size_t>(p_.degree()) + 1, 0);
    for (const auto& [e, v] : p_.terms()) out[static_cast<size_t>(e)] = v.get_num();
    return out;
}

CanonicalPoly canonicalize(const LaurentPoly& p) {
    CanonicalPoly out;
    if (p.is_zero()) return out;
    LaurentPoly shifted = p.shifted(-p.low()).with_ring(Ring::Rationals);
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [e, v] : shifted.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [e, v] : shifted.terms()) {
        Integer scaled_num = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (shifted.leading_coeff() < 0) scale = -scale;
    out.p_ = shifted.scaled(scale).with_ring(Ring::Integers);
    return out;
}

bool doteq(const LaurentPoly& a, const LaurentPoly& b) {
    return canonicalize(a) == canonicalize(b);
}

bool doteq(const CanonicalPoly& a, const CanonicalPoly& b) { return a == b; }

bool lp_is_symmetric(const LaurentPoly& p) {
    CanonicalPoly c = canonicalize(p);
    if (c.is_zero()) return true;
    const LaurentPoly& q = c.poly();
    long d = q.degree();
    for (const auto& [e, v] : q.terms())
        if (q.coeff(d - e) != v) return false;
    return true;
}

std::optional<LaurentPoly> lp_divexact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("lp_divexact: zero divisor");
    if (num.is_zero()) return LaurentPoly::zero(num.ring());
    long shift = num.low() - den.low();
    LaurentPoly r = num.shifted(-num.low()).with_ring(Ring::Rationals);
    LaurentPoly d = den.shifted(-den.low()).with_ring(Ring::Rationals);
    LaurentPoly q(Ring::Rationals);
    long dd = d.degree();
    Rational dlead = d.leading_coeff();
    while (!r.is_zero() && r.degree() >= dd) {
        Rational f = r.leading_coeff() / dlead;
        long e = r.degree() - dd;
        q.add_to(e, f);
        r -= d.scaled(f).shifted(e);
    }
    if (!r.is_zero()) return std::nullopt;
    q = q.shifted(shift);
    if (num.ring() == Ring::Integers && den.ring() == Ring::Integers && q.is_integral())
        return q.with_ring(Ring::Integers);
    return q;
}

std::optional<LaurentPoly> lp_sqrt_exact(const LaurentPoly& p) {
    CanonicalPoly c = canonicalize(p);
    if (c.is_zero()) return LaurentPoly::zero(p.ring());
    const LaurentPoly& f = c.poly();
    if (f.degree() % 2 != 0) return std::nullopt;
    long d = f.degree() / 2;
    auto lead_root = integer_sqrt_exact(f.leading_coeff().get_num());
    if (!lead_root) return std::nullopt;
    LaurentPoly s = LaurentPoly::monomial(Rational(*lead_root), d, Ring::Rationals);
    Rational twice_lead = Rational(2 * *lead_root);
    for (long j = d - 1; j >= 0; --j) {
        // Coefficient of t^{d+j} in s*s, with s_j still unknown, is
        // 2*s_d*s_j + sum over known pairs.
        Rational known = 0;
        for (long i = j + 1; i <= d; ++i) {
            long other = d + j - i;
            if (other <= j || other > d) continue;
            if (other < i) break;
            Rational prod = s.coeff(i) * s.coeff(other);
            known += (other == i) ? prod : 2 * prod;
        }
        Rational sj = (f.coeff(d + j) - known) / twice_lead;
        s.set(j, sj);
    }
    if (s * s != f) return std::nullopt;
    if (s.is_integral()) return s.with_ring(Ring::Integers);
    return s;
}

namespace {

// Remainder of ordinary-polynomial division over Q.
LaurentPoly poly_mod(LaurentPoly r, const LaurentPoly& d) {
    long dd = d.degree();
    Rational dlead = d.leading_coeff();
    while (!r.is_zero() && r.degree() >= dd) {
        Rational f = r.leading_coeff() / dlead;
        r -= d.scaled(f).shifted(r.degree() - dd);
    }
    return r;
}

LaurentPoly make_monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading_coeff());
}

}  // namespace

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.is_zero() ? a : a.shifted(-a.low()).with_ring(Ring::Rationals);
    LaurentPoly y = b.is_zero() ? b : b.shifted(-b.low()).with_ring(Ring::Rationals);
    x = x.with_ring(Ring::Rationals);
    y = y.with_ring(Ring::Rationals);
    while (!y.is_zero()) {
        LaurentPoly r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

SquarefreeSplit lp_squarefree_split(const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("lp_squarefree_split: zero input");
    LaurentPoly f = make_monic(canonicalize(q).poly().with_ring(Ring::Rationals));
    LaurentPoly odd = LaurentPoly::constant(1, Ring::Rationals);
    LaurentPoly root = LaurentPoly::constant(1, Ring::Rationals);
    if (f.degree() == 0) return {canonicalize(odd), canonicalize(root)};
    // Yun's algorithm: f = prod a_i^i with a_i squarefree and pairwise coprime.
    LaurentPoly g = lp_gcd(f, f.derivative());
    LaurentPoly cpart = *lp_divexact(f, g);
    LaurentPoly dpart = *lp_divexact(f.derivative(), g) - cpart.derivative();
    long i = 1;
    while (cpart.degree() > 0) {
        LaurentPoly ai = lp_gcd(cpart, dpart);
        if (ai.degree() > 0) {
            if (i % 2 == 1) odd *= ai;
            for (long rep = 0; rep < i / 2; ++rep) root *= ai;
        }
        cpart = *lp_divexact(cpart, ai);
        dpart = *lp_divexact(dpart, ai) - cpart.derivative();
        ++i;
    }
    return {canonicalize(odd), canonicalize(root)};
}

}  // namespace slicesieve
