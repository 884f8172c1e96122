#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "qcov/algebra.hpp"
#include "qcov/random.hpp"

using namespace qcov;

namespace {

Scalar t(int order, int k = 1) { return Scalar::t_power(order, k); }
Scalar c(int order, long r) { return Scalar::constant(order, r); }
Element word(int n, int apow, int g, int gs, const Scalar& coeff) {
  return Element::monomial(n, Word{apow, g, gs}, coeff);
}
Element word(int n, int apow, int g, int gs) { return word(n, apow, g, gs, Scalar::one(n)); }

}  // namespace

TEST(Mul, BaseExamples) {
  const Element al = Element::alpha(1), bt = Element::beta(1);
  EXPECT_EQ(bt * al, word(1, 1, 1, 0, t(1, -1)));
  EXPECT_EQ(al * Element::alpha_star(1), Element::unit(1) - word(1, 0, 1, 1, Scalar::q(1).pow(2)));
  EXPECT_EQ(Element::alpha_star(1) * al, Element::unit(1) - word(1, 0, 1, 1));
}

TEST(Mul, CoveringCommutation) {
  const Element al = Element::alpha(2), gt = Element::gamma(2);
  EXPECT_EQ(gt * al, word(2, 1, 1, 0, t(2, -1)));
  EXPECT_EQ(Element::gamma_star(2) * al, word(2, 1, 0, 1, t(2, -1)));
  EXPECT_EQ(gt * Element::alpha_star(2), word(2, -1, 1, 0, t(2)));
  EXPECT_EQ(Element::gamma_star(2) * gt, word(2, 0, 1, 1));
  EXPECT_EQ(al * Element::alpha_star(2), Element::unit(2) - word(2, 0, 2, 2, t(2, 4)));
}

TEST(Mul, Identity) {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 20; ++i) {
      const Element x = random_element(rng, n);
      EXPECT_EQ(Element::unit(n) * x, x);
      EXPECT_EQ(x * Element::unit(n), x);
    }
  }
}

TEST(Mul, ParameterMismatch) {
  EXPECT_THROW(Element::alpha(1) * Element::alpha(2), DomainError);
  EXPECT_THROW(Element(2, 3), DomainError);
  EXPECT_THROW(Element(0), DomainError);
}

TEST(Mul, MatchesLetterRewriting) {
  std::mt19937_64 rng(17);
  RandomSpec spec;
  for (int n : {1, 2, 3}) {
    for (int order : {n, 2 * n}) {
      for (int i = 0; i < 150; ++i) {
        const Word x = random_word(rng, spec);
        const Word y = random_word(rng, spec);
        Element got(n, order);
        for (const auto& [w, s] : multiply_words(n, order, x, y)) got.add(w, s);
        EXPECT_EQ(got, oracle::naive_mul(n, order, x, y))
            << "n=" << n << " order=" << order << " x=" << oracle::letters(x) << " y=" << oracle::letters(y);
      }
    }
  }
}

TEST(Mul, Associativity) {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 170; ++i) {
      const Element x = Element::monomial(n, random_word(rng));
      const Element y = Element::monomial(n, random_word(rng));
      const Element z = Element::monomial(n, random_word(rng));
      ASSERT_EQ((x * y) * z, x * (y * z));
    }
  }
}

TEST(Mul, DefiningRelations) {
  const Element al = Element::alpha(1), als = Element::alpha_star(1);
  const Element bt = Element::beta(1), bts = Element::beta_star(1);
  const Scalar q = Scalar::q(1);
  const Element one = Element::unit(1);
  EXPECT_TRUE((als * al + bts * bt - one).is_zero());
  EXPECT_TRUE((al * als + q * q * (bt * bts) - one).is_zero());
  EXPECT_TRUE((al * bt - q * (bt * al)).is_zero());
  EXPECT_TRUE((al * bts - q * (bts * al)).is_zero());
  EXPECT_TRUE((bts * bt - bt * bts).is_zero());
}

TEST(Mul, CoveringRelationsWithBeta) {
  for (int n : {2, 3, 4}) {
    const Element al = Element::alpha(n), als = Element::alpha_star(n);
    const Element bt = Element::beta(n), bts = Element::beta_star(n);
    const Scalar q = Scalar::q(n);
    const Element one = Element::unit(n);
    EXPECT_EQ(bt, power(Element::gamma(n), n));
    EXPECT_TRUE((als * al + bts * bt - one).is_zero());
    EXPECT_TRUE((al * als + q * q * (bt * bts) - one).is_zero());
    EXPECT_TRUE((al * bt - q * (bt * al)).is_zero());
    EXPECT_TRUE((al * bts - q * (bts * al)).is_zero());
  }
}

TEST(Mul, WrongRuleBreaksCommutation) {
  RewriteRules wrong;
  wrong.gamma_alpha_sign = +1;
  const Element got = mul(Element::gamma(2), Element::alpha(2), wrong);
  EXPECT_EQ(got, word(2, 1, 1, 0, t(2, 1)));
}

TEST(Star, Examples) {
  EXPECT_EQ(star(Element::alpha(1)), Element::alpha_star(1));
  const Element ab = Element::alpha(1) * Element::beta(1);
  EXPECT_EQ(star(ab), word(1, -1, 0, 1, Scalar::q(1)));
  EXPECT_EQ(star(Scalar::q(1) * (Element::beta(1) * Element::alpha(1))), star(ab));
  EXPECT_EQ(star(Element::constant(3, Scalar::root_of_unity(3, 1))),
            Element::constant(3, Scalar::root_of_unity(3, 2)));
}

TEST(Star, InvolutiveAntihomomorphism) {
  std::mt19937_64 rng(9);
  for (int n : {1, 2, 3, 4}) {
    for (int i = 0; i < 60; ++i) {
      const Element x = random_element(rng, n);
      const Element y = random_element(rng, n);
      EXPECT_EQ(star(star(x)), x);
      EXPECT_EQ(star(x * y), star(y) * star(x));
      EXPECT_EQ(star(x + y), star(x) + star(y));
    }
  }
}

TEST(Embed, Examples) {
  for (int n : {1, 2, 3}) {
    EXPECT_EQ(embed_base(Element::beta(1), n), power(Element::gamma(n), n));
    EXPECT_EQ(embed_base(Element::unit(1), n), Element::unit(n));
    EXPECT_EQ(embed_base(Element::constant(1, Scalar::q(1)), n), Element::constant(n, Scalar::q(n)));
  }
}

TEST(Embed, HomomorphismInjectiveStarPreserving) {
  std::mt19937_64 rng(13);
  for (int n : {2, 3}) {
    std::set<Word> images;
    for (int i = 0; i < 80; ++i) {
      const Element a = random_element(rng, 1);
      const Element b = random_element(rng, 1);
      EXPECT_EQ(embed_base(a * b, n), embed_base(a, n) * embed_base(b, n));
      EXPECT_EQ(embed_base(star(a), n), star(embed_base(a, n)));
      const auto back = pullback_base(embed_base(a, n));
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, lift_order(a, n));
    }
    for (int k = -3; k <= 3; ++k)
      for (int g = 0; g <= 3; ++g)
        for (int gs = 0; gs <= 3; ++gs) {
          const Element e = embed_base(Element::monomial(1, Word{k, g, gs}), n);
          ASSERT_EQ(e.terms().size(), 1u);
          EXPECT_TRUE(images.insert(e.terms().begin()->first).second);
        }
    EXPECT_FALSE(pullback_base(Element::gamma(n)).has_value());
  }
}

TEST(Grade, Examples) {
  const auto g1 = grade(Element::beta(1));
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_EQ(g1.at(1), Element::beta(1));
  const auto g2 = grade(embed_base(Element::beta(1), 2));
  ASSERT_EQ(g2.size(), 1u);
  EXPECT_EQ(g2.at(2), power(Element::gamma(2), 2));
  const Element x = Element::unit(2) + Element::alpha(2) * Element::gamma(2);
  const auto g3 = grade(x);
  ASSERT_EQ(g3.size(), 2u);
  EXPECT_EQ(g3.at(0), Element::unit(2));
  EXPECT_EQ(g3.at(1), Element::alpha(2) * Element::gamma(2));
}

TEST(Grade, Multiplicative) {
  std::mt19937_64 rng(21);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 40; ++i) {
      const Element x = random_element(rng, n);
      const Element y = random_element(rng, n);
      std::map<int, Element> conv;
      for (const auto& [dx, px] : grade(x))
        for (const auto& [dy, py] : grade(y)) {
          auto it = conv.try_emplace(dx + dy, Element(n)).first;
          it->second += px * py;
        }
      for (auto it = conv.begin(); it != conv.end();) it = it->second.is_zero() ? conv.erase(it) : std::next(it);
      EXPECT_EQ(grade(x * y), conv);
    }
  }
}

TEST(U1Act, Examples) {
  const Scalar z2 = Scalar::root_of_unity(2, 1);
  EXPECT_EQ(u1_act(Element::gamma(2), z2), z2 * Element::gamma(2));
  EXPECT_EQ(u1_act(Element::alpha(2), Scalar::t_power(2, 3)), Element::alpha(2));
  EXPECT_EQ(u1_act(power(Element::gamma_star(2), 2), z2), power(Element::gamma_star(2), 2));
  EXPECT_THROW(u1_act(Element::gamma_star(2), c(2, 1) + t(2)), DomainError);
}

TEST(Power, SmallCases) {
  EXPECT_EQ(power(Element::gamma(3), 0), Element::unit(3));
  EXPECT_EQ(power(Element::gamma(3), 3), Element::beta(3));
  EXPECT_THROW(power(Element::alpha(1), -1), DomainError);
}
