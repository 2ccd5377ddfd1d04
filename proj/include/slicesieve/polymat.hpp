#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slicesieve/laurent.hpp"

namespace slicesieve {

// Dense matrix over the Laurent polynomial ring. All entries share the ring
// tag; mixed-ring arithmetic throws, as for LaurentPoly itself.
class PolyMatrix {
  public:
    PolyMatrix() : r_(0), c_(0), ring_(Ring::Integers) {}
    PolyMatrix(size_t rows, size_t cols, Ring ring = Ring::Integers)
        : r_(rows), c_(cols), ring_(ring), e_(rows * cols, LaurentPoly(ring)) {}

    static PolyMatrix identity(size_t n, Ring ring = Ring::Integers);
    static PolyMatrix scalar(size_t n, const LaurentPoly& v);  // v * I

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Ring ring() const { return ring_; }

    LaurentPoly& at(size_t i, size_t j) { return e_[i * c_ + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return e_[i * c_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix scaled(const LaurentPoly& s) const;
    PolyMatrix transpose() const;
    PolyMatrix pow(long k) const;  // square matrices, k >= 0

    bool operator==(const PolyMatrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    bool is_integral() const;
    PolyMatrix with_ring(Ring ring) const;

    // Copy src into this matrix with upper-left corner at (i, j).
    void paste(const PolyMatrix& src, size_t i, size_t j);
    static PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                               const PolyMatrix& d);
    PolyMatrix without_row_col(size_t row, size_t col) const;

    std::string to_string(const std::string& var = "t") const;

  private:
    size_t r_, c_;
    Ring ring_;
    std::vector<LaurentPoly> e_;
};

enum class DetStrategy { Cofactor, Bareiss, EvalInterp };

DetStrategy det_strategy_from_name(const std::string& name);
std::string det_strategy_name(DetStrategy s);

// Exact determinant of a square matrix.
//   Cofactor:   memoized expansion over column subsets, rows visited sparsest
//               first with zero skipping (n <= 64).
//   Bareiss:    fraction-free elimination on row-shifted ordinary polynomials.
//   EvalInterp: evaluation at integer points, integer elimination per point,
//               Newton interpolation, then verification at extra points. The
//               point loop is the OpenMP-parallel kernel.
LaurentPoly mat_det(const PolyMatrix& m, DetStrategy s = DetStrategy::EvalInterp);

// Serial reference for the EvalInterp kernel: identical arithmetic, no
// threading. Kept for testing and benchmarked against the parallel kernel.
LaurentPoly mat_det_eval_serial(const PolyMatrix& m);

// Adjugate, satisfying adj(M) * M == det(M) * I.
PolyMatrix mat_adjugate(const PolyMatrix& m);

// sum_{i=0}^{hi} (sign * m)^i for a square m; hi = -1 gives the zero matrix.
PolyMatrix mat_power_sum(const PolyMatrix& m, long hi, int sign = +1);

}  // namespace slicesieve
