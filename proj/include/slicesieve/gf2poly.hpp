#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace slicesieve {

// Dense bit-packed polynomial over F_2; bit i of the word array is the
// coefficient of t^i. Zero has an empty word array.
class GF2Poly {
  public:
    GF2Poly() = default;

    static GF2Poly zero() { return GF2Poly(); }
    static GF2Poly one() { return from_mask(1); }
    static GF2Poly t() { return from_mask(2); }

    // Low 64 coefficients given as an integer mask.
    static GF2Poly from_mask(uint64_t mask) {
        GF2Poly p;
        if (mask) p.w_.push_back(mask);
        return p;
    }

    // 1 + t + ... + t^d.
    static GF2Poly all_ones(long d) {
        GF2Poly p;
        for (long i = 0; i <= d; ++i) p.set_bit(i);
        return p;
    }

    static GF2Poly from_coeffs(const std::vector<int>& coeffs) {
        GF2Poly p;
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] % 2 != 0) p.set_bit(static_cast<long>(i));
        return p;
    }

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

    long degree() const;  // -1 on zero

    bool get(long i) const {
        size_t word = static_cast<size_t>(i) / 64;
        return word < w_.size() && ((w_[word] >> (i % 64)) & 1);
    }

    void set_bit(long i) {
        size_t word = static_cast<size_t>(i) / 64;
        if (word >= w_.size()) w_.resize(word + 1, 0);
        w_[word] ^= uint64_t(1) << (i % 64);
        if (word + 1 == w_.size()) trim();
    }

    GF2Poly operator+(const GF2Poly& o) const;
    GF2Poly operator*(const GF2Poly& o) const;
    GF2Poly shifted(long k) const;  // times t^k, k >= 0

    // Quotient and remainder of division by a nonzero polynomial.
    std::pair<GF2Poly, GF2Poly> divmod(const GF2Poly& d) const;
    GF2Poly operator%(const GF2Poly& d) const { return divmod(d).second; }
    GF2Poly operator/(const GF2Poly& d) const { return divmod(d).first; }

    bool operator==(const GF2Poly& o) const { return w_ == o.w_; }
    bool operator!=(const GF2Poly& o) const { return !(*this == o); }
    bool operator<(const GF2Poly& o) const;  // by degree, then lexicographic words

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<uint64_t> w_;
};

GF2Poly gf2_gcd(GF2Poly a, GF2Poly b);

// Trial division by every polynomial of degree up to deg(f)/2; intended for
// the small degrees that arise here.
bool gf2_is_irreducible(const GF2Poly& f);

// Irreducibility of 1 + t + ... + t^{p-1} over F_2 for an odd prime p,
// decided by the multiplicative order of 2 mod p.
bool gf2_is_irreducible_cyclotomic(long p);

// Inverse of a mod m; throws when gcd(a, m) != 1.
GF2Poly gf2_mod_inverse(const GF2Poly& a, const GF2Poly& m);

}  // namespace slicesieve
