#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicesieve/numeric.hpp"

namespace slicesieve {

enum class Ring { Integers, Rationals };

// Sparse Laurent polynomial over Z or Q. Coefficients are stored as exact
// rationals; the Integers tag is an enforced invariant (denominator 1), not a
// separate representation. No zero coefficients are ever stored.
class LaurentPoly {
  public:
    explicit LaurentPoly(Ring ring = Ring::Integers) : ring_(ring) {}

    static LaurentPoly zero(Ring ring = Ring::Integers) { return LaurentPoly(ring); }

    static LaurentPoly monomial(Rational coeff, long exp, Ring ring = Ring::Integers) {
        LaurentPoly p(ring);
        p.set(exp, std::move(coeff));
        return p;
    }

    static LaurentPoly constant(Rational c, Ring ring = Ring::Integers) {
        return monomial(std::move(c), 0, ring);
    }

    static LaurentPoly t(Ring ring = Ring::Integers) { return monomial(1, 1, ring); }

    // Coefficients lowest exponent first, starting at `shift`.
    static LaurentPoly from_coeffs(const std::vector<Rational>& coeffs, long shift = 0,
                                   Ring ring = Ring::Integers) {
        LaurentPoly p(ring);
        for (size_t i = 0; i < coeffs.size(); ++i) p.set(shift + static_cast<long>(i), coeffs[i]);
        return p;
    }

    Ring ring() const { return ring_; }
    bool is_zero() const { return c_.empty(); }
    size_t term_count() const { return c_.size(); }

    // Highest/lowest exponent; only meaningful on nonzero polynomials.
    long degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    long low() const { return c_.empty() ? 0 : c_.begin()->first; }

    Rational coeff(long exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }

    Rational leading_coeff() const { return c_.empty() ? Rational(0) : c_.rbegin()->second; }

    void set(long exp, Rational v) {
        check_value(v);
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = std::move(v);
    }

    void add_to(long exp, const Rational& v) {
        if (v == 0) return;
        check_value(v);
        auto [it, fresh] = c_.try_emplace(exp, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    const std::map<long, Rational>& terms() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_ring(o);
        for (const auto& [e, v] : o.c_) add_to(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_ring(o);
        for (const auto& [e, v] : o.c_) add_to(e, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r(ring_);
        for (const auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_ring(b);
        LaurentPoly r(a.ring_);
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_to(ea + eb, va * vb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& s) const {
        if (s == 0) return LaurentPoly(ring_);
        LaurentPoly r(ring_);
        check_value(s);
        for (const auto& [e, v] : c_) r.c_[e] = v * s;
        return r;
    }

    LaurentPoly shifted(long k) const {
        LaurentPoly r(ring_);
        for (const auto& [e, v] : c_) r.c_[e + k] = v;
        return r;
    }

    LaurentPoly pow(long k) const {
        if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly acc = constant(1, ring_);
        for (long i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    // The bar involution t -> t^{-1}.
    LaurentPoly bar() const {
        LaurentPoly r(ring_);
        for (const auto& [e, v] : c_) r.c_[-e] = v;
        return r;
    }

    LaurentPoly derivative() const {
        LaurentPoly r(ring_);
        for (const auto& [e, v] : c_)
            if (e != 0) r.c_[e - 1] = v * e;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0, pw = 1;
        long at = 0;
        for (const auto& [e, v] : c_) {
            if (e < 0) throw std::invalid_argument("LaurentPoly::eval: negative exponent");
            while (at < e) {
                pw *= x;
                ++at;
            }
            acc += v * pw;
        }
        return acc;
    }

    // Evaluation at an integer point; requires an integral ordinary polynomial.
    Integer eval_int(const Integer& x) const {
        Integer acc = 0, pw = 1;
        long at = 0;
        for (const auto& [e, v] : c_) {
            if (e < 0) throw std::invalid_argument("LaurentPoly::eval_int: negative exponent");
            if (v.get_den() != 1) throw std::invalid_argument("LaurentPoly::eval_int: non-integer");
            while (at < e) {
                pw *= x;
                ++at;
            }
            acc += v.get_num() * pw;
        }
        return acc;
    }

    bool is_integral() const {
        for (const auto& [e, v] : c_)
            if (v.get_den() != 1) return false;
        return true;
    }

    LaurentPoly with_ring(Ring ring) const {
        if (ring == Ring::Integers && !is_integral())
            throw std::invalid_argument("LaurentPoly: non-integer coefficients under Integers tag");
        LaurentPoly r = *this;
        r.ring_ = ring;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "t") const;

  private:
    void check_ring(const LaurentPoly& o) const {
        if (ring_ != o.ring_) throw std::invalid_argument("LaurentPoly: ring mismatch");
    }
    void check_value(const Rational& v) const {
        if (ring_ == Ring::Integers && v.get_den() != 1)
            throw std::invalid_argument("LaurentPoly: non-integer coefficient under Integers tag");
    }

    Ring ring_;
    std::map<long, Rational> c_;
};

// Geometric sums, the workhorses of every closed form in this project.
// geom_sum(r, lo, hi) = sum_{i=lo}^{hi} r^i (empty when hi < lo).
LaurentPoly geom_sum(const LaurentPoly& r, long lo, long hi);

// sum_{i=0}^{hi} (s*t)^i for s = +1/-1 as a convenience.
LaurentPoly power_sum(long hi, int sign = +1, Ring ring = Ring::Integers);

// Canonical representative of the unit-equivalence class (lambda * t^k over Q):
// lowest exponent 0, integer coefficients with content 1, positive leading
// coefficient. Zero canonicalizes to zero.
class CanonicalPoly {
  public:
    CanonicalPoly() : p_(Ring::Integers) {}
    explicit CanonicalPoly(const LaurentPoly& raw);

    const LaurentPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    long degree() const { return p_.degree(); }
    bool operator==(const CanonicalPoly& o) const { return p_ == o.p_; }
    bool operator!=(const CanonicalPoly& o) const { return !(*this == o); }
    std::string to_string(const std::string& var = "t") const { return p_.to_string(var); }

    std::vector<Integer> coeffs() const;  // lowest first, dense, constant term included

  private:
    friend CanonicalPoly canonicalize(const LaurentPoly&);
    LaurentPoly p_;
};

CanonicalPoly canonicalize(const LaurentPoly& p);

// Equality up to multiplication by a unit lambda * t^k of Q[t, t^-1].
bool doteq(const LaurentPoly& a, const LaurentPoly& b);
bool doteq(const CanonicalPoly& a, const CanonicalPoly& b);

// f is symmetric when bar(f) equals f up to units, i.e. canonical coefficients
// form a palindrome.
bool lp_is_symmetric(const LaurentPoly& p);

// Exact division over Q (the quotient of two Integers-tagged polynomials may
// have rational coefficients). Empty when the division leaves a remainder.
std::optional<LaurentPoly> lp_divexact(const LaurentPoly& num, const LaurentPoly& den);

// Exact square root up to units: returns s with s*s ≐ p, if one exists.
std::optional<LaurentPoly> lp_sqrt_exact(const LaurentPoly& p);

// Monic gcd over Q (Laurent inputs allowed; result is an ordinary polynomial).
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Squarefree splitting q ≐ odd_part * square_root^2 where odd_part is the
// product of the prime factors of odd multiplicity, each taken once.
struct SquarefreeSplit {
    CanonicalPoly odd_part;
    CanonicalPoly square_root;
};
SquarefreeSplit lp_squarefree_split(const LaurentPoly& q);

}  // namespace slicesieve
