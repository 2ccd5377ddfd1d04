#pragma once

#include <string>
#include <vector>

#include "slicesieve/group.hpp"
#include "slicesieve/laurent.hpp"
#include "slicesieve/polymat.hpp"

namespace slicesieve {

// P(2n, m, -(2n+1), -m) for sign +1, P(2n, m, -(2n-1), -m) for sign -1.
struct PretzelKnot {
  long n = 0;
  long m = 0;
  int sign = 1;

  PretzelKnot(long n_, long m_, int sign_);

  long k() const { return (m - 1) / 2; }
  // Half the crossing count of the third band, rounded down.
  long s() const { return sign > 0 ? n : n - 1; }
  std::string name() const;
};

// x_lhs = x_over * x_rhs * x_over^{-1}, arcs 1-based.
struct WirtingerRelation {
  long lhs = 0;
  long over = 0;
  long rhs = 0;
};

struct WirtingerPresentation {
  long num_arcs = 0;
  long meridian = 1;
  // Starts of the ten arc runs the strand walk visits.
  std::vector<long> run_starts;
  std::vector<WirtingerRelation> relations;

  // Relator words over generators 0..num_arcs-1 (arc i -> generator i-1);
  // the final relation is redundant and dropped when square is set.
  std::vector<Word> relators(bool drop_redundant = false) const;
  std::string dump() const;
};

WirtingerPresentation wirtinger_presentation(const PretzelKnot& knot);

// Generator ids of the reduced presentation.
enum ReducedGen {
  kGenA = 0,
  kGenE = 1,
  kGenB = 2,
  kGenC = 3,
  kGenGamma = 4,
  kGenEta = 5,
  kGenBeta = 6,
  kGenAlpha = 7,
};

struct ReducedPresentation {
  std::vector<std::string> names;
  // Defining word for each of the first 7 generators (alpha has none).
  std::vector<Word> defining;
  // Canonical relators g^{-1} * defining(g).
  std::vector<Word> relators;
  // Cyclic rearrangements whose Fox rows match the block layout used by
  // the determinant pipeline.
  std::vector<Word> wada;
  int meridian = kGenE;

  // Arc index (1-based) each generator names in the Wirtinger presentation.
  std::vector<long> arc_of_gen;

  // Column order of the reduced Fox matrix: a, b, c, alpha, eta, beta, gamma.
  static std::vector<int> column_order();

  std::string dump() const;

 private:
  std::vector<std::string> display_;
  friend ReducedPresentation reduced_presentation(const PretzelKnot&);
};

ReducedPresentation reduced_presentation(const PretzelKnot& knot);

// Grid of free Fox derivatives, one row per relator, one column per entry
// of cols.
std::vector<std::vector<GroupRingElem>> fox_matrix(
    const std::vector<Word>& relators, const std::vector<int>& cols);

// Fox matrix image under a representation, glued into one matrix of
// dim*|relators| rows.
PolyMatrix fox_matrix_image(const std::vector<Word>& relators,
                            const std::vector<int>& cols,
                            const RepImages& rep);

// Classical Alexander polynomial: determinant of the Fox matrix under the
// abelianization, with the meridian column deleted. Requires exactly
// num_gens - 1 relators.
CanonicalPoly alexander_from_presentation(const std::vector<Word>& relators,
                                          int num_gens, int meridian);

}  // namespace slicesieve
