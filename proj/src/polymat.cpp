#include "slicesieve/polymat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace slicesieve {

PolyMatrix PolyMatrix::identity(size_t n, Ring ring) {
    PolyMatrix m(n, n, ring);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1, ring);
    return m;
}

PolyMatrix PolyMatrix::scalar(size_t n, const LaurentPoly& v) {
    PolyMatrix m(n, n, v.ring());
    for (size_t i = 0; i < n; ++i) m.at(i, i) = v;
    return m;
}

namespace {

void check_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("PolyMatrix: shape mismatch");
}

}  // namespace

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    check_shape(*this, o);
    PolyMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    check_shape(*this, o);
    PolyMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("PolyMatrix: product shape mismatch");
    if (ring_ != o.ring_) throw std::invalid_argument("PolyMatrix: ring mismatch");
    PolyMatrix r(r_, o.c_, ring_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const LaurentPoly& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& s) const {
    PolyMatrix r(r_, c_, ring_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(c_, r_, ring_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::pow(long k) const {
    if (r_ != c_) throw std::invalid_argument("PolyMatrix::pow: not square");
    if (k < 0) throw std::invalid_argument("PolyMatrix::pow: negative exponent");
    PolyMatrix acc = identity(r_, ring_);
    for (long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool PolyMatrix::is_integral() const {
    for (const auto& v : e_)
        if (!v.is_integral()) return false;
    return true;
}

PolyMatrix PolyMatrix::with_ring(Ring ring) const {
    PolyMatrix r(r_, c_, ring);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].with_ring(ring);
    return r;
}

void PolyMatrix::paste(const PolyMatrix& src, size_t i, size_t j) {
    if (i + src.rows() > r_ || j + src.cols() > c_)
        throw std::invalid_argument("PolyMatrix::paste: out of bounds");
    for (size_t a = 0; a < src.rows(); ++a)
        for (size_t b = 0; b < src.cols(); ++b) at(i + a, j + b) = src.at(a, b);
}

PolyMatrix PolyMatrix::block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                                const PolyMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw std::invalid_argument("PolyMatrix::block2x2: shape mismatch");
    PolyMatrix m(a.rows() + c.rows(), a.cols() + b.cols(), a.ring());
    m.paste(a, 0, 0);
    m.paste(b, 0, a.cols());
    m.paste(c, a.rows(), 0);
    m.paste(d, a.rows(), a.cols());
    return m;
}

PolyMatrix PolyMatrix::without_row_col(size_t row, size_t col) const {
    PolyMatrix r(r_ - 1, c_ - 1, ring_);
    for (size_t i = 0, a = 0; i < r_; ++i) {
        if (i == row) continue;
        for (size_t j = 0, b = 0; j < c_; ++j) {
            if (j == col) continue;
            r.at(a, b) = at(i, j);
            ++b;
        }
        ++a;
    }
    return r;
}

std::string PolyMatrix::to_string(const std::string& var) const {
    std::ostringstream os;
    for (size_t i = 0; i < r_; ++i) {
        os << "[";
        for (size_t j = 0; j < c_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string(var);
        }
        os << "]\n";
    }
    return os.str();
}

DetStrategy det_strategy_from_name(const std::string& name) {
    if (name == "cofactor") return DetStrategy::Cofactor;
    if (name == "bareiss") return DetStrategy::Bareiss;
    if (name == "eval-interp") return DetStrategy::EvalInterp;
    throw std::invalid_argument("unknown determinant strategy: " + name);
}

std::string det_strategy_name(DetStrategy s) {
    switch (s) {
        case DetStrategy::Cofactor: return "cofactor";
        case DetStrategy::Bareiss: return "bareiss";
        case DetStrategy::EvalInterp: return "eval-interp";
    }
    return "?";
}

namespace {

// Memoized cofactor expansion. Rows are visited sparsest first; the memo key
// is the set of still-unused columns.
struct CofactorDet {
    const PolyMatrix& m;
    std::vector<size_t> order;
    std::unordered_map<uint64_t, LaurentPoly> memo;

    explicit CofactorDet(const PolyMatrix& mat) : m(mat) {
        size_t n = m.rows();
        order.resize(n);
        std::iota(order.begin(), order.end(), size_t(0));
        std::vector<size_t> nnz(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!m.at(i, j).is_zero()) ++nnz[i];
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return nnz[a] < nnz[b]; });
    }

    int order_sign() const {
        int sign = 1;
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) sign = -sign;
        return sign;
    }

    LaurentPoly run(size_t k, uint64_t mask) {
        if (k == m.rows()) return LaurentPoly::constant(1, m.ring());
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        LaurentPoly acc(m.ring());
        int pos = 0;
        for (uint64_t bits = mask; bits; bits &= bits - 1, ++pos) {
            size_t j = static_cast<size_t>(std::countr_zero(bits));
            const LaurentPoly& v = m.at(order[k], j);
            if (v.is_zero()) continue;
            LaurentPoly term = v * run(k + 1, mask ^ (bits & -bits));
            if (pos % 2)
                acc -= term;
            else
                acc += term;
        }
        memo.emplace(mask, acc);
        return acc;
    }
};

LaurentPoly det_cofactor(const PolyMatrix& m) {
    size_t n = m.rows();
    if (n == 0) return LaurentPoly::constant(1, m.ring());
    if (n > 64) throw std::invalid_argument("cofactor determinant: more than 64 columns");
    CofactorDet dp(m);
    uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    LaurentPoly d = dp.run(0, full);
    return dp.order_sign() < 0 ? -d : d;
}

// Multiplies each row by a power of t so entries become ordinary polynomials.
// Returns false when some row is identically zero.
bool normalize_rows(PolyMatrix& m, long& total_shift) {
    total_shift = 0;
    for (size_t i = 0; i < m.rows(); ++i) {
        bool seen = false;
        long lo = 0;
        for (size_t j = 0; j < m.cols(); ++j) {
            const LaurentPoly& v = m.at(i, j);
            if (v.is_zero()) continue;
            lo = seen ? std::min(lo, v.low()) : v.low();
            seen = true;
        }
        if (!seen) return false;
        if (lo != 0) {
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j).shifted(-lo);
            total_shift += lo;
        }
    }
    return true;
}

LaurentPoly det_bareiss(const PolyMatrix& m0) {
    size_t n = m0.rows();
    if (n == 0) return LaurentPoly::constant(1, m0.ring());
    PolyMatrix m = m0.with_ring(Ring::Rationals);
    long shift = 0;
    if (!normalize_rows(m, shift)) return LaurentPoly::zero(m0.ring());
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(1, Ring::Rationals);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return LaurentPoly::zero(m0.ring());
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto q = lp_divexact(num, prev);
                if (!q) throw std::logic_error("bareiss: inexact division");
                m.at(i, j) = *q;
            }
            m.at(i, k) = LaurentPoly::zero(Ring::Rationals);
        }
        prev = m.at(k, k);
    }
    LaurentPoly d = m.at(n - 1, n - 1).shifted(shift);
    if (sign < 0) d = -d;
    if (m0.ring() == Ring::Integers && d.is_integral()) return d.with_ring(Ring::Integers);
    return d;
}

Integer int_det_bareiss(std::vector<std::vector<Integer>> a) {
    size_t n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(num);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? Integer(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

LaurentPoly det_eval_interp(const PolyMatrix& m0, bool parallel) {
    size_t n = m0.rows();
    if (n == 0) return LaurentPoly::constant(1, m0.ring());
    PolyMatrix m = m0.with_ring(Ring::Rationals);
    long shift = 0;
    if (!normalize_rows(m, shift)) return LaurentPoly::zero(m0.ring());

    // Clear denominators row by row; the scaled determinant gets divided back.
    Integer denom_total = 1;
    for (size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (size_t j = 0; j < n; ++j)
            for (const auto& [e, v] : m.at(i, j).terms())
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        if (l != 1) {
            for (size_t j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).scaled(Rational(l));
            denom_total *= l;
        }
    }

    long degree_bound = 0;
    for (size_t i = 0; i < n; ++i) {
        long rowdeg = 0;
        for (size_t j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero()) rowdeg = std::max(rowdeg, m.at(i, j).degree());
        degree_bound += rowdeg;
    }

    const long npoints = degree_bound + 1;
    const long nverify = 3;
    std::vector<Integer> vals(static_cast<size_t>(npoints + nverify));

    // The parallel kernel: one exact integer determinant per sample point.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long idx = 0; idx < npoints + nverify; ++idx) {
        Integer x = 2 + idx;
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j).eval_int(x);
        vals[static_cast<size_t>(idx)] = int_det_bareiss(std::move(a));
    }
    (void)parallel;

    // Newton interpolation through the first npoints samples.
    std::vector<Rational> dd(vals.begin(), vals.begin() + npoints);
    for (long lev = 1; lev < npoints; ++lev)
        for (long i = npoints - 1; i >= lev; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) / Rational(lev);
    // x_i = 2 + i, so x_i - x_{i-lev} = lev.
    std::vector<Rational> poly;  // dense, constant first
    poly.reserve(static_cast<size_t>(npoints));
    for (long i = npoints - 1; i >= 0; --i) {
        // poly <- poly * (t - x_i) + dd[i]
        Rational xi(2 + i);
        poly.insert(poly.begin(), Rational(0));
        for (size_t c = 0; c + 1 < poly.size(); ++c) poly[c] -= xi * poly[c + 1];
        poly[0] += dd[static_cast<size_t>(i)];
    }

    // Verification at the held-out points.
    for (long v = 0; v < nverify; ++v) {
        Rational x(2 + npoints + v);
        Rational acc(0);
        for (size_t c = poly.size(); c-- > 0;) acc = acc * x + poly[c];
        if (acc != Rational(vals[static_cast<size_t>(npoints + v)]))
            throw std::logic_error("eval-interp: verification point mismatch");
    }

    LaurentPoly d(Ring::Rationals);
    Rational inv_den(1, denom_total);
    inv_den.canonicalize();
    for (size_t c = 0; c < poly.size(); ++c)
        if (poly[c] != 0) d.set(static_cast<long>(c), poly[c] * inv_den);
    d = d.shifted(shift);
    if (m0.ring() == Ring::Integers) {
        if (!d.is_integral()) throw std::logic_error("eval-interp: non-integral determinant");
        return d.with_ring(Ring::Integers);
    }
    return d;
}

}  // namespace

LaurentPoly mat_det(const PolyMatrix& m, DetStrategy s) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_det: not square");
    switch (s) {
        case DetStrategy::Cofactor: return det_cofactor(m);
        case DetStrategy::Bareiss: return det_bareiss(m);
        case DetStrategy::EvalInterp: return det_eval_interp(m, true);
    }
    throw std::logic_error("mat_det: bad strategy");
}

LaurentPoly mat_det_eval_serial(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_det: not square");
    return det_eval_interp(m, false);
}

PolyMatrix mat_adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_adjugate: not square");
    size_t n = m.rows();
    if (n == 0) return m;
    PolyMatrix adj(n, n, m.ring());
    if (n == 1) {
        adj.at(0, 0) = LaurentPoly::constant(1, m.ring());
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentPoly c = mat_det(m.without_row_col(i, j), DetStrategy::Cofactor);
            adj.at(j, i) = ((i + j) % 2) ? -c : c;
        }
    return adj;
}

PolyMatrix mat_power_sum(const PolyMatrix& m, long hi, int sign) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_power_sum: not square");
    PolyMatrix base = sign >= 0 ? m : -m;
    PolyMatrix acc(m.rows(), m.cols(), m.ring());
    PolyMatrix pw = PolyMatrix::identity(m.rows(), m.ring());
    for (long i = 0; i <= hi; ++i) {
        acc = acc + pw;
        if (i < hi) pw = pw * base;
    }
    return acc;
}

}  // namespace slicesieve
