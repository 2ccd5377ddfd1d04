#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slicesieve/homology.hpp"
#include "slicesieve/laurent.hpp"
#include "slicesieve/presentation.hpp"
#include "slicesieve/repcover.hpp"

namespace slicesieve {

// f_b = 2 sum_{i=0}^{2b} t^i + sign * t^b; sign matches the knot family sign.
CanonicalPoly f_poly(long b, int sign = +1);

// Closed form at the split 2n = b p + a with 0 < a < p - 1:
// (4a-6) sum_{i=0}^{2b} (-t)^i + (-t)^b - 4(p-4) t (sum_{i=0}^{b-1} (-t)^i)^2.
// b = 0 still evaluates; an out-of-window a throws.
CanonicalPoly g_poly(long n, long p);

// Same polynomial via the 3x3 determinant route, det(matrix_g) / (1 + t).
CanonicalPoly g_matrix_route(long n, long p);

// Reduced twisted polynomial: numerator is det of the twisted Fox matrix,
// the (t-1)^2 denominator is carried formally (it is a norm and cannot
// affect any verdict).  Seed 0 collapses to the abelianization and
// reproduces the classical Alexander polynomial.
struct ReducedTAP {
  CanonicalPoly numerator;
  int denom_power = 2;
  std::optional<std::array<CanonicalPoly, 3>> factors;  // f, g, h
};

ReducedTAP twisted_reduced_polynomial(const PretzelKnot& knot, const CharacterData& chr,
                                      DetStrategy strategy = DetStrategy::EvalInterp);
ReducedTAP twisted_reduced_polynomial(const PretzelKnot& knot, long p,
                                      DetStrategy strategy = DetStrategy::EvalInterp);

// Divides the numerator by f*g, takes the exact square root of the cofactor
// and records the factor triple on tap.  Throws when the numerator is not
// divisible or the cofactor is not a square: those break the factorization
// the verdict relies on.
CanonicalPoly extract_h(ReducedTAP& tap, const CanonicalPoly& f, const CanonicalPoly& g);

// Coefficient-dominance bound putting all roots of a self-reciprocal
// polynomial on the unit circle: decompose f = l (t^2b + ... + 1)
// + sum a_k (t^{2b-k} + t^k) and test |l| >= 2 sum |a_k|.
bool lakatos_check(const CanonicalPoly& f);

// The unique l with f(t) = t^b l(t + 1/t) for a palindromic f of degree 2b,
// assembled from the recursion p_0 = 2, p_1 = u, p_{j+1} = u p_j - p_{j-1}.
LaurentPoly symmetric_descent(const CanonicalPoly& f);

// Irreducibility certificate for the reversal of l at the prime 2: leading
// reversed coefficient odd, all others even, reversed constant != 0 mod 4.
bool eisenstein_at_2(const LaurentPoly& l);

enum class Verdict { ObstructedNotSlice, NormNoObstruction, HypothesesFail, Inconclusive };
std::string verdict_name(Verdict v);

struct NormVerdict {
  bool lakatos_pass = false;
  bool eisenstein_pass = false;
  bool f_divides_g = false;
  LaurentPoly descent_poly;   // l_b, in the variable u = t + 1/t
  Verdict verdict = Verdict::Inconclusive;
  std::string failing_stage;  // nonempty exactly when Inconclusive
};

enum class VerdictMode { ClosedForm, Pipeline, Both };
VerdictMode verdict_mode_from_name(const std::string& name);
std::string verdict_mode_name(VerdictMode mode);

struct ObstructionReport {
  long n = 0;
  long m = 0;
  long p = 0;
  int sign = +1;
  HypothesisReport hypotheses;
  CanonicalPoly f;                // empty until the split 2n = bp + a is valid
  CanonicalPoly g;                // minus-family g comes out of the pipeline
  std::optional<CanonicalPoly> h;
  CanonicalPoly numerator;        // empty when the pipeline was skipped
  NormVerdict chain;

  std::string to_text() const;
};

// The verdict chain.  NormNoObstruction fires when f and g coincide and
// nothing besides the exceptional-pair flag failed; hypothesis failures give
// HypothesesFail; otherwise ObstructedNotSlice needs the Lakatos bound, the
// Eisenstein certificate and f not dividing g.  Minus-family divisibility is
// decided on the pipeline numerator: dividing by f must succeed exactly once
// and the quotient must split as (non-multiple of f) * square, else the
// verdict stays Inconclusive.
ObstructionReport norm_obstruction_verdict(const PretzelKnot& knot, long p,
                                           VerdictMode mode = VerdictMode::Both,
                                           DetStrategy strategy = DetStrategy::EvalInterp);

// Smallest prime divisor of m with 2 a primitive root, or 0 when none is.
long default_prime(long m);

struct TableRow {
  long n = 0;
  std::vector<long> f;  // canonical coefficients, lowest first
  std::vector<long> g;
};

// Published rows: p = 11 covers n = 6..14, p = 5 covers n = 3..9; empty
// for any other prime.
const std::vector<TableRow>& golden_table_rows(long p);

// Rows regenerated from the closed forms; n with an invalid split are
// skipped.
std::vector<TableRow> generate_table_rows(long p, long n_lo, long n_hi);

}  // namespace slicesieve
