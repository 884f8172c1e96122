#include <gtest/gtest.h>

#include "qcov/commcontrol.hpp"

using namespace qcov;

namespace {

int value(const Scalar& s) { return s.is_zero() ? 0 : s.is_one() ? 1 : -1; }

}  // namespace

TEST(Comult, DeltaFunctions) {
  for (int m = 1; m <= 6; ++m) {
    for (int i = 0; i < m; ++i) {
      const FunTable t = comult(CyclicFun::delta(m, i, 1));
      ASSERT_EQ(t.size(), static_cast<std::size_t>(m));
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) EXPECT_EQ(value(t[x][y]), (x + y) % m == i ? 1 : 0);
    }
  }
}

TEST(Comult, CoassociativeAndStarCompatible) {
  for (int m = 1; m <= 6; ++m) {
    for (int i = 0; i < m; ++i) {
      const CyclicFun f = CyclicFun::delta(m, i, m);
      EXPECT_TRUE(coassoc_check(f).pass);
      EXPECT_TRUE(star_check(f).pass);
    }
    CyclicFun chi{m, {}};
    for (int x = 0; x < m; ++x) chi.values.push_back(Scalar::root_of_unity(m, x));
    EXPECT_TRUE(coassoc_check(chi).pass);
    EXPECT_TRUE(star_check(chi).pass);
  }
}

TEST(CoverEmbed, PullbackValues) {
  const CyclicFun e = cover_embed(CyclicFun::delta(2, 0, 1), 2);
  ASSERT_EQ(e.m, 4);
  std::vector<int> got;
  for (const auto& v : e.values) got.push_back(value(v));
  EXPECT_EQ(got, (std::vector<int>{1, 0, 1, 0}));
  EXPECT_THROW(cover_embed(e, 0), DomainError);
}

TEST(Deck, TranslateDelta) {
  const CyclicFun d1 = CyclicFun::delta(4, 1, 1);
  EXPECT_EQ(deck_translate(d1, 2, 2), CyclicFun::delta(4, 3, 1));
  EXPECT_EQ(deck_translate(d1, 4, 2), d1);
  EXPECT_EQ(deck_translate(d1, -2, 2), CyclicFun::delta(4, 3, 1));
  EXPECT_THROW(deck_translate(d1, 1, 2), DomainError);
}

TEST(Deck, FixedAlgebraIsBase) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{1, 4}, std::pair{4, 1}}) {
    EXPECT_EQ(fixed_basis(m, n).size(), static_cast<std::size_t>(m));
    EXPECT_TRUE(fixed_algebra_check(m, n).pass) << m << "," << n;
    EXPECT_TRUE(restriction_check(m, n).pass) << m << "," << n;
    EXPECT_TRUE(character_check(m, n).pass) << m << "," << n;
  }
  // each basis vector is constant on cosets of m Z_{mn}
  for (const auto& v : fixed_basis(3, 2))
    for (int x = 0; x < 6; ++x) EXPECT_EQ(v[x], v[(x + 3) % 6]);
}

TEST(Equivariance, OneLegHoldsTwoLegFails) {
  const LemmaReport r = lemma_equivariance_report(2, 2);
  EXPECT_TRUE(r.one_leg_all);
  EXPECT_FALSE(r.two_leg_all);
  EXPECT_TRUE(r.checks_pass());
  ASSERT_EQ(r.cases.size(), 8u);
  for (const auto& c : r.cases) {
    if (c.f_index == 1 && c.h == 2) {
      EXPECT_TRUE(c.one_leg);
      EXPECT_FALSE(c.two_leg);
    }
    if (c.h == 0) {
      EXPECT_TRUE(c.one_leg);
      EXPECT_TRUE(c.two_leg);
    }
  }
}

TEST(Equivariance, DirectComputation) {
  // delta(L_h f)(x, y) = f(x + y - h), one leg: f(x - h + y), two legs: f(x + y - 2h)
  const int m = 3, n = 2, size = 6;
  for (int i = 0; i < size; ++i) {
    const CyclicFun f = CyclicFun::delta(size, i, size);
    const FunTable lhs = comult(deck_translate(f, m, m));
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        const int want = ((x + y - m) % size + size) % size == i ? 1 : 0;
        EXPECT_EQ(value(lhs[x][y]), want);
      }
  }
  const LemmaReport r = lemma_equivariance_report(m, n);
  EXPECT_TRUE(r.one_leg_all);
  EXPECT_FALSE(r.two_leg_all);
  EXPECT_TRUE(r.checks_pass());
}

TEST(Equivariance, TrivialCoveringBothHold) {
  const LemmaReport r = lemma_equivariance_report(3, 1);
  EXPECT_TRUE(r.one_leg_all);
  EXPECT_TRUE(r.two_leg_all);
  EXPECT_THROW(lemma_equivariance_report(0, 2), DomainError);
  EXPECT_THROW(lemma_equivariance_report(2, 0), DomainError);
}

TEST(Characters, GroupLike) {
  const int size = 6;
  for (int k = 0; k < size; ++k) {
    CyclicFun chi{size, {}};
    for (int x = 0; x < size; ++x) chi.values.push_back(Scalar::root_of_unity(size, k * x));
    const FunTable t = comult(chi);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) EXPECT_EQ(t[x][y], chi.values[x] * chi.values[y]);
  }
  const CheckReport big = character_check(5, 3);
  EXPECT_TRUE(big.pass);
  EXPECT_FALSE(big.notes.empty());
}
