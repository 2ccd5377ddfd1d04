#include "slicesieve/presentation.hpp"

#include <stdexcept>

namespace slicesieve {

PretzelKnot::PretzelKnot(long n_, long m_, int sign_) : n(n_), m(m_), sign(sign_) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("PretzelKnot: sign must be +-1");
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("PretzelKnot: m must be odd and >= 3");
  if (n < 1) throw std::invalid_argument("PretzelKnot: n must be positive");
  if (sign < 0 && n < 2) throw std::invalid_argument("PretzelKnot: the minus family needs n >= 2");
}

std::string PretzelKnot::name() const {
  long third = sign > 0 ? 2 * n + 1 : 2 * n - 1;
  return "P(" + std::to_string(2 * n) + "," + std::to_string(m) + ",-" +
         std::to_string(third) + ",-" + std::to_string(m) + ")";
}

WirtingerPresentation wirtinger_presentation(const PretzelKnot& knot) {
  long n = knot.n, k = knot.k(), s = knot.s();
  long u1 = 1;
  long u2 = k + 1;
  long u3 = k + s + 2;
  long u4 = 2 * k + s + 3;
  long u5 = n + 2 * k + s + 2;
  long u6 = u5 + 1;
  long u7 = n + 3 * k + s + 3;
  long u8 = n + 3 * k + 2 * s + 3;
  long u9 = n + 4 * k + 2 * s + 4;
  long u10 = 2 * n + 4 * k + 2 * s + 3;

  WirtingerPresentation wp;
  wp.num_arcs = u10;
  wp.run_starts = {u1, u2, u3, u4, u5, u6, u7, u8, u9, u10};
  auto rel = [&wp](long lhs, long over, long rhs) {
    wp.relations.push_back({lhs, over, rhs});
  };
  // Band 2 (m crossings), first pass.
  for (long j = 1; j <= k; ++j) rel(u1 + j, u8 + j, u1 + j - 1);
  // Band 3 (2s+1 crossings), first pass.
  for (long j = 1; j <= s + 1; ++j) rel(u2 + j, u7 + j - 1, u2 + j - 1);
  // Band 4 (m crossings), first pass.
  for (long j = 1; j <= k + 1; ++j) rel(u3 + j - 1, u6 + j - 1, u3 + j);
  // Band 1 (2n crossings), first pass.
  for (long j = 1; j <= n - 1; ++j) rel(u4 + j - 1, u9 + j, u4 + j);
  rel(u5, u1, u6);
  // Band 4, return pass.
  for (long j = 1; j <= k; ++j) rel(u6 + j - 1, u3 + j, u6 + j);
  // Band 3, return pass.
  for (long j = 1; j <= s; ++j) rel(u7 + j, u2 + j, u7 + j - 1);
  // Band 2, return pass.
  for (long j = 1; j <= k + 1; ++j) rel(u8 + j, u1 + j - 1, u8 + j - 1);
  // Band 1, return pass.
  for (long j = 1; j <= n - 1; ++j) rel(u9 + j - 1, u4 + j - 1, u9 + j);
  rel(u10, u5, 1);
  return wp;
}

std::vector<Word> WirtingerPresentation::relators(bool drop_redundant) const {
  std::vector<Word> out;
  size_t count = relations.size() - (drop_redundant ? 1 : 0);
  for (size_t i = 0; i < count; ++i) {
    const WirtingerRelation& r = relations[i];
    Word over = Word::gen(static_cast<int>(r.over - 1));
    out.push_back(Word::gen(static_cast<int>(r.lhs - 1), -1) * over *
                  Word::gen(static_cast<int>(r.rhs - 1)) * over.inverse());
  }
  return out;
}

std::string WirtingerPresentation::dump() const {
  std::string out;
  for (const WirtingerRelation& r : relations)
    out += "x" + std::to_string(r.lhs) + " = x" + std::to_string(r.over) +
           " . x" + std::to_string(r.rhs) + "\n";
  return out;
}

namespace {

// (u v)^e as a word.
Word pair_pow(int u, int v, long e) {
  return (Word::gen(u) * Word::gen(v)).pow(e);
}

std::string pair_pow_str(const std::string& u, const std::string& v, long e) {
  if (e == 0) return "";
  std::string out = "(" + u + " " + v + ")";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

std::string join_parts(const std::string& name, const std::vector<std::string>& parts) {
  std::string out = name + " =";
  for (const std::string& p : parts)
    if (!p.empty()) out += " " + p;
  return out;
}

}  // namespace

std::vector<int> ReducedPresentation::column_order() {
  return {kGenA, kGenB, kGenC, kGenAlpha, kGenEta, kGenBeta, kGenGamma};
}

std::string ReducedPresentation::dump() const {
  std::string out;
  for (const std::string& line : display_) out += line + "\n";
  return out;
}

ReducedPresentation reduced_presentation(const PretzelKnot& knot) {
  long n = knot.n, k = knot.k(), s = knot.s();
  ReducedPresentation rp;
  rp.names = {"a", "e", "b", "c", "gamma", "eta", "beta", "alpha"};

  Word a = Word::gen(kGenA), e = Word::gen(kGenE), b = Word::gen(kGenB),
       c = Word::gen(kGenC), gamma = Word::gen(kGenGamma), eta = Word::gen(kGenEta),
       beta = Word::gen(kGenBeta), alpha = Word::gen(kGenAlpha);

  rp.defining = {
      pair_pow(kGenEta, kGenAlpha, -n) * alpha * pair_pow(kGenEta, kGenAlpha, n),
      pair_pow(kGenEta, kGenAlpha, -(n - 1)) * alpha.inverse() *
          pair_pow(kGenEta, kGenAlpha, n),
      pair_pow(kGenBeta, kGenGamma, s + 1) * beta.inverse() *
          pair_pow(kGenBeta, kGenGamma, -s),
      pair_pow(kGenBeta, kGenGamma, s) * beta * pair_pow(kGenBeta, kGenGamma, -s),
      pair_pow(kGenE, kGenC, k) * e * pair_pow(kGenE, kGenC, -k),
      pair_pow(kGenE, kGenC, k + 1) * e.inverse() * pair_pow(kGenE, kGenC, -k),
      pair_pow(kGenB, kGenA, -k) * a * pair_pow(kGenB, kGenA, k),
  };
  for (int g = 0; g < 7; ++g)
    rp.relators.push_back(Word::gen(g, -1) * rp.defining[static_cast<size_t>(g)]);

  rp.wada = {
      pair_pow(kGenEta, kGenAlpha, n) * a * pair_pow(kGenEta, kGenAlpha, -n) *
          alpha.inverse(),
      alpha * pair_pow(kGenEta, kGenAlpha, n - 1) * e * pair_pow(kGenEta, kGenAlpha, -n),
      b * pair_pow(kGenBeta, kGenGamma, s) * beta * pair_pow(kGenBeta, kGenGamma, -(s + 1)),
      c * pair_pow(kGenBeta, kGenGamma, s) * beta.inverse() *
          pair_pow(kGenBeta, kGenGamma, -s),
      gamma * pair_pow(kGenE, kGenC, k) * e.inverse() * pair_pow(kGenE, kGenC, -k),
      eta * pair_pow(kGenE, kGenC, k) * e * pair_pow(kGenE, kGenC, -(k + 1)),
      pair_pow(kGenB, kGenA, k) * beta * pair_pow(kGenB, kGenA, -k) * a.inverse(),
  };

  WirtingerPresentation wp = wirtinger_presentation(knot);
  const std::vector<long>& u = wp.run_starts;
  rp.arc_of_gen = {u[5], u[0], u[2], u[7], u[1], u[8], u[6], u[3]};

  rp.display_ = {
      join_parts("a", {pair_pow_str("eta", "alpha", -n), "alpha",
                       pair_pow_str("eta", "alpha", n)}),
      join_parts("e", {pair_pow_str("eta", "alpha", -(n - 1)), "alpha^-1",
                       pair_pow_str("eta", "alpha", n)}),
      join_parts("b", {pair_pow_str("beta", "gamma", s + 1), "beta^-1",
                       pair_pow_str("beta", "gamma", -s)}),
      join_parts("c", {pair_pow_str("beta", "gamma", s), "beta",
                       pair_pow_str("beta", "gamma", -s)}),
      join_parts("gamma", {pair_pow_str("e", "c", k), "e", pair_pow_str("e", "c", -k)}),
      join_parts("eta", {pair_pow_str("e", "c", k + 1), "e^-1",
                         pair_pow_str("e", "c", -k)}),
      join_parts("beta", {pair_pow_str("b", "a", -k), "a", pair_pow_str("b", "a", k)}),
  };
  return rp;
}

std::vector<std::vector<GroupRingElem>> fox_matrix(
    const std::vector<Word>& relators, const std::vector<int>& cols) {
  std::vector<std::vector<GroupRingElem>> grid;
  for (const Word& r : relators) {
    std::vector<GroupRingElem> row;
    for (int g : cols) row.push_back(fox_derivative(r, g));
    grid.push_back(std::move(row));
  }
  return grid;
}

PolyMatrix fox_matrix_image(const std::vector<Word>& relators,
                            const std::vector<int>& cols, const RepImages& rep) {
  long d = rep.dim();
  PolyMatrix out(static_cast<long>(relators.size()) * d,
                 static_cast<long>(cols.size()) * d, rep.ring());
  for (size_t i = 0; i < relators.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out.paste(fox_image(relators[i], cols[j], rep), static_cast<long>(i) * d,
                static_cast<long>(j) * d);
  return out;
}

CanonicalPoly alexander_from_presentation(const std::vector<Word>& relators,
                                          int num_gens, int meridian) {
  if (static_cast<int>(relators.size()) != num_gens - 1)
    throw std::invalid_argument("alexander_from_presentation: need deficiency one");
  std::vector<int> cols;
  for (int g = 0; g < num_gens; ++g)
    if (g != meridian) cols.push_back(g);
  RepImages rep = scalar_rep(num_gens, std::vector<long>(static_cast<size_t>(num_gens), 1));
  PolyMatrix z = fox_matrix_image(relators, cols, rep);
  return canonicalize(mat_det(z, DetStrategy::Bareiss));
}

}  // namespace slicesieve
