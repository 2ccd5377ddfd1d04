#include "slicesieve/gf2poly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "slicesieve/numeric.hpp"

namespace slicesieve {

long GF2Poly::degree() const {
    if (w_.empty()) return -1;
    return static_cast<long>((w_.size() - 1) * 64 + std::bit_width(w_.back()) - 1);
}

GF2Poly GF2Poly::operator+(const GF2Poly& o) const {
    GF2Poly r = w_.size() >= o.w_.size() ? *this : o;
    const GF2Poly& s = w_.size() >= o.w_.size() ? o : *this;
    for (size_t i = 0; i < s.w_.size(); ++i) r.w_[i] ^= s.w_[i];
    r.trim();
    return r;
}

GF2Poly GF2Poly::shifted(long k) const {
    if (is_zero() || k == 0) return *this;
    GF2Poly r;
    size_t words = static_cast<size_t>(k) / 64;
    int bits = static_cast<int>(k % 64);
    r.w_.assign(w_.size() + words + 1, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + words] ^= w_[i] << bits;
        if (bits) r.w_[i + words + 1] ^= w_[i] >> (64 - bits);
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::operator*(const GF2Poly& o) const {
    GF2Poly acc;
    long d = o.degree();
    for (long i = 0; i <= d; ++i)
        if (o.get(i)) acc = acc + shifted(i);
    return acc;
}

std::pair<GF2Poly, GF2Poly> GF2Poly::divmod(const GF2Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("GF2Poly::divmod: zero divisor");
    GF2Poly q, r = *this;
    long dd = d.degree();
    while (r.degree() >= dd) {
        long k = r.degree() - dd;
        r = r + d.shifted(k);
        q.set_bit(k);
    }
    return {q, r};
}

bool GF2Poly::operator<(const GF2Poly& o) const {
    if (w_.size() != o.w_.size()) return w_.size() < o.w_.size();
    for (size_t i = w_.size(); i-- > 0;)
        if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
}

std::string GF2Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (!get(i)) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0)
            os << "1";
        else if (i == 1)
            os << var;
        else
            os << var << "^" << i;
    }
    return os.str();
}

GF2Poly gf2_gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        GF2Poly r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool gf2_is_irreducible(const GF2Poly& f) {
    long d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d > 64) throw std::invalid_argument("gf2_is_irreducible: degree too large");
    for (long dd = 1; dd <= d / 2; ++dd)
        for (uint64_t mask = uint64_t(1) << dd; mask < (uint64_t(2) << dd); ++mask)
            if ((f % GF2Poly::from_mask(mask)).is_zero()) return false;
    return true;
}

bool gf2_is_irreducible_cyclotomic(long p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("gf2_is_irreducible_cyclotomic: p must be an odd prime");
    return mod_order(2, p) == p - 1;
}

GF2Poly gf2_mod_inverse(const GF2Poly& a, const GF2Poly& m) {
    // Extended Euclid tracking only the coefficient of a.
    GF2Poly r0 = m, r1 = a % m;
    GF2Poly s0 = GF2Poly::zero(), s1 = GF2Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        GF2Poly s2 = s0 + q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (!r0.is_one()) throw std::invalid_argument("gf2_mod_inverse: not invertible");
    return s0 % m;
}

}  // namespace slicesieve
