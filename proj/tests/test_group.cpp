#include <random>
#include <vector>

#include "doctest.h"
#include "slicesieve/group.hpp"

using namespace slicesieve;

namespace {

const std::vector<std::string> kNames = {"x", "y", "z"};

Word random_word(std::mt19937& rng, int max_len, int num_gens = 3) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> gen_d(0, num_gens - 1);
  std::uniform_int_distribution<int> exp_d(0, 1);
  int len = len_d(rng);
  Word w;
  for (int i = 0; i < len; ++i) w = w * Word::gen(gen_d(rng), exp_d(rng) ? 1 : -1);
  return w;
}

// Monomial matrices over t: exact inverses, non-commuting images.
RepImages monomial_rep() {
  RepImages rep;
  auto lp = [](long num, long e) {
    return LaurentPoly::monomial(Rational(num), e, Ring::Integers);
  };
  PolyMatrix x(2, 2, Ring::Integers), xi(2, 2, Ring::Integers);
  x.at(0, 1) = lp(1, 0);
  x.at(1, 0) = lp(1, 0);
  xi = x;
  PolyMatrix y(2, 2, Ring::Integers), yi(2, 2, Ring::Integers);
  y.at(0, 0) = lp(1, 1);
  y.at(1, 1) = lp(1, 0);
  yi.at(0, 0) = lp(1, -1);
  yi.at(1, 1) = lp(1, 0);
  PolyMatrix z(2, 2, Ring::Integers), zi(2, 2, Ring::Integers);
  z.at(0, 1) = lp(1, 1);
  z.at(1, 0) = lp(1, 0);
  zi.at(0, 1) = lp(1, 0);
  zi.at(1, 0) = lp(1, -1);
  rep.img = {x, y, z};
  rep.inv = {xi, yi, zi};
  return rep;
}

}  // namespace

TEST_CASE("free reduction and word algebra") {
  Word x = Word::gen(0), y = Word::gen(1);
  CHECK((x * x.inverse()).is_identity());
  CHECK(Word::from_letters({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).is_identity());
  CHECK(x * y * y.inverse() == x);

  std::mt19937 rng(11);
  for (int round = 0; round < 50; ++round) {
    Word w = random_word(rng, 10);
    Word u = random_word(rng, 6);
    CHECK((w * w.inverse()).is_identity());
    CHECK(w.pow(3) == w * w * w);
    CHECK(w.pow(-2) == (w.inverse() * w.inverse()));
    CHECK(w.pow(0).is_identity());
    CHECK(w.conjugated_by(u).conjugated_by(u.inverse()) == w);
    CHECK(w.conjugated_by(u).epsilon_weight() == w.epsilon_weight());
    CHECK((w * u).epsilon_weight() == w.epsilon_weight() + u.epsilon_weight());
  }
}

TEST_CASE("word printing compresses runs") {
  Word x = Word::gen(0), y = Word::gen(1);
  CHECK(Word().to_string(kNames) == "1");
  CHECK((x * x * x).to_string(kNames) == "x^3");
  CHECK((x * x * y.inverse()).to_string(kNames) == "x^2 y^-1");
  CHECK((x * y * x * y).to_string(kNames) == "x y x y");
}

TEST_CASE("fox derivative of a conjugate") {
  Word x = Word::gen(0), y = Word::gen(1);
  Word w = x * y * x.inverse();
  GroupRingElem expect = GroupRingElem::one() + GroupRingElem::from_word(w, -1);
  CHECK(fox_derivative(w, 0) == expect);
  CHECK(fox_derivative(w, 0).to_string(kNames) == "1 - x y x^-1");
  CHECK(fox_derivative(w, 1) == GroupRingElem::from_word(x));
}

TEST_CASE("fox derivative letter rules") {
  Word x = Word::gen(0);
  CHECK(fox_derivative(x, 0) == GroupRingElem::one());
  CHECK(fox_derivative(x.inverse(), 0) ==
        GroupRingElem::from_word(x.inverse(), -1));
  CHECK(fox_derivative(Word::gen(1), 0).is_zero());

  GroupRingElem geom;
  for (int i = 0; i < 5; ++i) geom.add_term(x.pow(i), 1);
  CHECK(fox_derivative(x.pow(5), 0) == geom);

  GroupRingElem neg_geom;
  for (int i = 1; i <= 4; ++i) neg_geom.add_term(x.pow(-i), -1);
  CHECK(fox_derivative(x.pow(-4), 0) == neg_geom);
}

TEST_CASE("fox product rule") {
  std::mt19937 rng(23);
  for (int round = 0; round < 30; ++round) {
    Word u = random_word(rng, 8);
    Word v = random_word(rng, 8);
    for (int g = 0; g < 3; ++g) {
      GroupRingElem lhs = fox_derivative(u * v, g);
      GroupRingElem rhs =
          fox_derivative(u, g) + GroupRingElem::from_word(u) * fox_derivative(v, g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("fox fundamental identity") {
  std::mt19937 rng(37);
  for (int round = 0; round < 100; ++round) {
    Word w = random_word(rng, 12);
    GroupRingElem sum;
    for (int g = 0; g < 3; ++g) {
      GroupRingElem factor =
          GroupRingElem::from_word(Word::gen(g)) - GroupRingElem::one();
      sum = sum + fox_derivative(w, g) * factor;
    }
    GroupRingElem expect =
        GroupRingElem::from_word(w) - GroupRingElem::one();
    CHECK(sum == expect);
    CHECK(sum.augmentation() == 0);
  }
}

TEST_CASE("group ring arithmetic") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> coeff_d(-3, 3);
  auto random_elem = [&](int nterms) {
    GroupRingElem e;
    for (int i = 0; i < nterms; ++i) e.add_term(random_word(rng, 5), coeff_d(rng));
    return e;
  };
  for (int round = 0; round < 25; ++round) {
    GroupRingElem a = random_elem(3), b = random_elem(3), c = random_elem(3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == GroupRingElem::zero());
    CHECK(-a == GroupRingElem::zero() - a);
    CHECK(a.scaled(2) == a + a);
  }
}

TEST_CASE("representation images") {
  RepImages mono = monomial_rep();
  RepImages scal = scalar_rep(3, {1, 1, 1});
  PolyMatrix id2 = PolyMatrix::identity(2, Ring::Integers);

  std::mt19937 rng(53);
  for (int round = 0; round < 40; ++round) {
    Word u = random_word(rng, 8);
    Word v = random_word(rng, 8);
    CHECK(word_image(u * v, mono) == word_image(u, mono) * word_image(v, mono));
    CHECK(word_image(u, mono) * word_image(u.inverse(), mono) == id2);
    CHECK(word_image(u, scal).at(0, 0) ==
          LaurentPoly::monomial(Rational(1), u.epsilon_weight(), Ring::Integers));
  }
}

TEST_CASE("fox image matches symbolic route") {
  RepImages mono = monomial_rep();
  RepImages scal = scalar_rep(3, {1, 1, 1});
  std::mt19937 rng(61);
  for (int round = 0; round < 40; ++round) {
    Word w = random_word(rng, 10);
    for (int g = 0; g < 3; ++g) {
      CHECK(fox_image(w, g, mono) == ring_image(fox_derivative(w, g), mono));
      CHECK(fox_image(w, g, scal) == ring_image(fox_derivative(w, g), scal));
    }
  }
}

TEST_CASE("matrix-level fundamental identity") {
  RepImages mono = monomial_rep();
  PolyMatrix id2 = PolyMatrix::identity(2, Ring::Integers);
  std::mt19937 rng(71);
  for (int round = 0; round < 30; ++round) {
    Word w = random_word(rng, 10);
    PolyMatrix sum(2, 2, Ring::Integers);
    for (int g = 0; g < 3; ++g)
      sum = sum + fox_image(w, g, mono) * (mono.img[g] - id2);
    CHECK(sum == word_image(w, mono) - id2);
  }
}
