#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicesieve/polymat.hpp"

namespace slicesieve {

// One letter of a free-group word: generator index with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.exp < b.exp;
  }
};

// Freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;
  static Word gen(int g, int exp = 1);
  static Word from_letters(const std::vector<Letter>& letters);

  bool is_identity() const { return letters_.empty(); }
  long size() const { return static_cast<long>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(long k) const;
  // u * w * u^{-1}
  Word conjugated_by(const Word& u) const;

  // Sum of exponents; the abelianization weight.
  long epsilon_weight() const;
  long max_gen() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void push(const Letter& l);

  std::vector<Letter> letters_;
};

// Integer group-ring element over the free group; no zero coefficients kept.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  static GroupRingElem zero() { return {}; }
  static GroupRingElem one();
  static GroupRingElem from_word(const Word& w, long long c = 1);

  bool is_zero() const { return terms_.empty(); }
  long term_count() const { return static_cast<long>(terms_.size()); }
  const std::map<Word, long long>& terms() const { return terms_; }

  void add_term(const Word& w, long long c);

  GroupRingElem operator+(const GroupRingElem& o) const;
  GroupRingElem operator-(const GroupRingElem& o) const;
  GroupRingElem operator-() const;
  GroupRingElem operator*(const GroupRingElem& o) const;
  GroupRingElem scaled(long long c) const;

  // Sum of coefficients (augmentation).
  long long augmentation() const;

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) {
    return !(a == b);
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<Word, long long> terms_;
};

// Free differential: d(uv) = du + u dv, dg/dg = 1, dg^{-1}/dg = -g^{-1}.
GroupRingElem fox_derivative(const Word& w, int gen);

// Generator images and their exact inverses under a matrix representation.
struct RepImages {
  std::vector<PolyMatrix> img;
  std::vector<PolyMatrix> inv;

  long dim() const;
  Ring ring() const;
};

// Rank-one representation g -> [t^{weight}]; weight 1 per generator gives
// the abelianization of a knot group.
RepImages scalar_rep(int num_gens, const std::vector<long>& weights);

PolyMatrix word_image(const Word& w, const RepImages& rep);
PolyMatrix ring_image(const GroupRingElem& e, const RepImages& rep);

// Image of fox_derivative(w, gen) without the symbolic expansion: a single
// left-to-right pass keeping the running prefix image.
PolyMatrix fox_image(const Word& w, int gen, const RepImages& rep);

}  // namespace slicesieve
