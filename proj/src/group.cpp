#include "slicesieve/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace slicesieve {

void Word::push(const Letter& l) {
  if (!letters_.empty()) {
    const Letter& back = letters_.back();
    if (back.gen == l.gen && back.exp == -l.exp) {
      letters_.pop_back();
      return;
    }
  }
  letters_.push_back(l);
}

Word Word::gen(int g, int exp) {
  if (g < 0) throw std::invalid_argument("Word: negative generator id");
  if (exp != 1 && exp != -1) throw std::invalid_argument("Word: exponent must be +-1");
  Word w;
  w.letters_.push_back(Letter{g, exp});
  return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("Word: exponent must be +-1");
    w.push(l);
  }
  return w;
}

Word Word::operator*(const Word& other) const {
  Word w = *this;
  for (const Letter& l : other.letters_) w.push(l);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->gen, -it->exp});
  return w;
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  long reps = k < 0 ? -k : k;
  Word out;
  for (long i = 0; i < reps; ++i) out = out * base;
  return out;
}

Word Word::conjugated_by(const Word& u) const { return u * (*this) * u.inverse(); }

long Word::epsilon_weight() const {
  long s = 0;
  for (const Letter& l : letters_) s += l.exp;
  return s;
}

long Word::max_gen() const {
  long m = -1;
  for (const Letter& l : letters_) m = std::max(m, static_cast<long>(l.gen));
  return m;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  // Runs of the same letter print as power shorthand.
  size_t i = 0;
  while (i < letters_.size()) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += " ";
    const Letter& l = letters_[i];
    out += l.gen < static_cast<int>(names.size()) ? names[l.gen]
                                                  : "g" + std::to_string(l.gen);
    long run = static_cast<long>(j - i) * l.exp;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

GroupRingElem GroupRingElem::one() { return from_word(Word()); }

GroupRingElem GroupRingElem::from_word(const Word& w, long long c) {
  GroupRingElem e;
  e.add_term(w, c);
  return e;
}

void GroupRingElem::add_term(const Word& w, long long c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  GroupRingElem out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
  GroupRingElem out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  GroupRingElem out;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupRingElem GroupRingElem::scaled(long long c) const {
  GroupRingElem out;
  if (c == 0) return out;
  for (const auto& [w, cw] : terms_) out.terms_.emplace(w, cw * c);
  return out;
}

long long GroupRingElem::augmentation() const {
  long long s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string GroupRingElem::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    long long av = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (av != 1 || w.is_identity()) {
      out += std::to_string(av);
      if (!w.is_identity()) out += "*";
    }
    if (!w.is_identity()) out += w.to_string(names);
  }
  return out;
}

GroupRingElem fox_derivative(const Word& w, int gen) {
  GroupRingElem out;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.exp == 1) {
        out.add_term(prefix, 1);
      } else {
        out.add_term(prefix * Word::gen(l.gen, -1), -1);
      }
    }
    prefix = prefix * Word::gen(l.gen, l.exp);
  }
  return out;
}

long RepImages::dim() const {
  if (img.empty()) throw std::logic_error("RepImages: empty");
  return img[0].rows();
}

Ring RepImages::ring() const {
  if (img.empty()) throw std::logic_error("RepImages: empty");
  return img[0].ring();
}

RepImages scalar_rep(int num_gens, const std::vector<long>& weights) {
  if (static_cast<int>(weights.size()) != num_gens)
    throw std::invalid_argument("scalar_rep: weight count mismatch");
  RepImages rep;
  for (int g = 0; g < num_gens; ++g) {
    PolyMatrix m(1, 1, Ring::Integers), mi(1, 1, Ring::Integers);
    m.at(0, 0) = LaurentPoly::monomial(Rational(1), weights[g], Ring::Integers);
    mi.at(0, 0) = LaurentPoly::monomial(Rational(1), -weights[g], Ring::Integers);
    rep.img.push_back(m);
    rep.inv.push_back(mi);
  }
  return rep;
}

namespace {

const PolyMatrix& letter_image(const Letter& l, const RepImages& rep) {
  const auto& side = l.exp == 1 ? rep.img : rep.inv;
  if (l.gen < 0 || l.gen >= static_cast<int>(side.size()))
    throw std::invalid_argument("RepImages: generator out of range");
  return side[static_cast<size_t>(l.gen)];
}

}  // namespace

PolyMatrix word_image(const Word& w, const RepImages& rep) {
  PolyMatrix out = PolyMatrix::identity(rep.dim(), rep.ring());
  for (const Letter& l : w.letters()) out = out * letter_image(l, rep);
  return out;
}

PolyMatrix ring_image(const GroupRingElem& e, const RepImages& rep) {
  PolyMatrix out(rep.dim(), rep.dim(), rep.ring());
  for (const auto& [w, c] : e.terms())
    out = out + word_image(w, rep).scaled(
                    LaurentPoly::constant(Rational(static_cast<long>(c)), rep.ring()));
  return out;
}

PolyMatrix fox_image(const Word& w, int gen, const RepImages& rep) {
  PolyMatrix acc(rep.dim(), rep.dim(), rep.ring());
  PolyMatrix prefix = PolyMatrix::identity(rep.dim(), rep.ring());
  for (const Letter& l : w.letters()) {
    const PolyMatrix& li = letter_image(l, rep);
    if (l.gen == gen) {
      if (l.exp == 1) {
        acc = acc + prefix;
      } else {
        acc = acc - prefix * li;
      }
    }
    prefix = prefix * li;
  }
  return acc;
}

}  // namespace slicesieve
