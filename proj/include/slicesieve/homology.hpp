#pragma once

#include "slicesieve/gf2module.hpp"
#include "slicesieve/laurent.hpp"
#include "slicesieve/polymat.hpp"
#include "slicesieve/presentation.hpp"

namespace slicesieve {

// Seifert matrix of the pretzel surface: four bidiagonal bands, one per
// strand, glued along the last row and column.  Entries are constants.
PolyMatrix seifert_matrix(const PretzelKnot& knot);

// det(t A - A^T) of the Seifert matrix, canonicalized.
CanonicalPoly alexander_from_seifert(const PretzelKnot& knot);

// Mod-2 first homology of the p-fold branched cover as an F_2[t]-module,
// computed from t A - A^T with the p-cycle relation adjoined and checked
// against the explicit two-generator presentation.  Requires p | m; throws
// when the two routes disagree.
GF2ModuleStructure branched_cover_h1_mod2(const PretzelKnot& knot, long p);

// Applicability flags for the obstruction at the odd prime p, each computed
// independently.  a and b split 2n = b p + a.
struct HypothesisReport {
  bool m_odd = false;
  bool p_divides_m = false;
  bool two_primitive_mod_p = false;
  bool p_coprime_to_band = false;     // p divides neither 2n nor 2n + sign
  bool n_at_least_half_p = false;     // n >= (p+1)/2
  bool not_exceptional_pair = false;  // (n, p) != (3, 5)
  bool split_ok = false;              // 0 < a < p-1 and b >= 1
  long a = 0;
  long b = 0;
  long k = 0;

  bool all_pass() const {
    return m_odd && p_divides_m && two_primitive_mod_p && p_coprime_to_band &&
           n_at_least_half_p && not_exceptional_pair && split_ok;
  }
};

HypothesisReport hypothesis_check(const PretzelKnot& knot, long p);

}  // namespace slicesieve
