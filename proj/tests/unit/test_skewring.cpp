#include <gtest/gtest.h>

#include "pinf/expr.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

using S = SkewElem<LinRep>;
const Domain kQ2{Field::rationals(), 2, false};

S E(const std::string& s, const Domain& d = kQ2) { return eval_skew(parse_expr(s), d); }

}  // namespace

TEST(Skew, DefiningRelations) {
  for (std::size_t n : {1u, 2u, 4u}) {
    Domain d{Field::rationals(), n, false};
    S e = S::idempotent(d), total = e;
    for (Letter i = 0; i < n; ++i) {
      for (Letter j = 0; j < n; ++j)
        EXPECT_TRUE((S::x(d, i) * S::y(d, j)).equals(i == j ? S::one(d) : S::zero(d)));
      EXPECT_TRUE((e * S::y(d, i)).is_zero());
      EXPECT_TRUE((S::x(d, i) * e).is_zero());
      total = total + S::y(d, i) * S::x(d, i);
    }
    EXPECT_TRUE((e * e).equals(e));
    EXPECT_TRUE(total.equals(S::one(d)));
  }
}

TEST(Skew, CommutationRule) {
  Random r(51);
  for (int k = 0; k < 60; ++k) {
    LinRep a = r.series(kQ2, 3);
    for (Letter i = 0; i < 2; ++i) {
      S lhs = S::coeff(a) * S::y(kQ2, i);
      S rhs = S::y(kQ2, i) * S::scalar(kQ2, a.constant_term()) + S::coeff(a.transduce(i));
      ASSERT_TRUE(lhs.equals(rhs));
    }
  }
}

TEST(Skew, Associativity) {
  Random r(52);
  for (int k = 0; k < 40; ++k) {
    S a = r.skew(kQ2, 2, 2, 2), b = r.skew(kQ2, 2, 2, 2), c = r.skew(kQ2, 2, 2, 2);
    ASSERT_TRUE(((a * b) * c).equals(a * (b * c)));
    ASSERT_TRUE((a * (b + c)).equals(a * b + a * c));
  }
}

TEST(Skew, IdealMembership) {
  EXPECT_TRUE(ideal_member(E("e")).value);
  EXPECT_TRUE(ideal_member(E("y0*e*x1 + e*(1 - x0)^-1")).value);
  EXPECT_FALSE(ideal_member(E("1")).value);
  EXPECT_FALSE(ideal_member(E("y0*x0")).value);
  EXPECT_FALSE(ideal_member(E("x0")).value);
  EXPECT_TRUE(ideal_member(E("1 - y0*x0 - y1*x1")).value);

  Random r(53);
  S e = S::idempotent(kQ2);
  for (int k = 0; k < 60; ++k) {
    S a = r.skew(kQ2, 2, 2, 2), b = r.skew(kQ2, 2, 2, 2);
    ASSERT_TRUE(ideal_member(a * e * b).value);
    S u = a * e * b + S::one(kQ2);
    ASSERT_FALSE(ideal_member(u).value);
  }
}

TEST(Skew, WitnessesMultiplyToOne) {
  Random r(54);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    S a = r.skew(kQ2, 2, 2, 2);
    if (ideal_member(a).value) {
      EXPECT_THROW(t_witness(a), MathError);
      continue;
    }
    TWitness<LinRep> w = t_witness(a);
    ASSERT_TRUE(t_equal(S::x_word(kQ2, w.m) * a * w.g, S::one(kQ2)).value);
    ++checked;
  }
  EXPECT_GT(checked, 30);
  TWitness<LinRep> w = t_witness(E("y0*y1*(1 - x0)^-1 + e"));
  EXPECT_EQ(w.m, Word({1, 0}));
}

TEST(Skew, InvertingYWord) {
  Domain d3{Field::rationals(), 3, false};
  LinRep r1 = eval_series(parse_expr("x0*x1 + x2"), d3);
  LinRep r2 = eval_series(parse_expr("x1*x2*(1 - x0)^-1"), d3);
  InvertingWord res = inverting_y_word<LinRep>({r2, r1});
  EXPECT_EQ(res.w, Word{2});
  EXPECT_EQ(res.index, 1u);
  EXPECT_THROW(inverting_y_word<LinRep>({LinRep::zero(d3)}), MathError);

  Random r(55);
  for (int k = 0; k < 100; ++k) {
    std::vector<LinRep> rs;
    for (int j = 0; j < 3; ++j) rs.push_back(r.nonzero_series(kQ2, 3));
    InvertingWord l = inverting_y_word<LinRep>(rs);
    for (std::size_t j = 0; j < rs.size(); ++j) {
      S p = S::coeff(rs[j]) * S::y_word(kQ2, l.w);
      ASSERT_EQ(p.y_degree().value_or(0), 0u);
      if (j == l.index) {
        ASSERT_FALSE(p.coefficient(Word()).constant_term().is_zero());
      }
    }
  }
}

TEST(Skew, WordSystems) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Domain d{Field::rationals(), n + 1, false};
    std::vector<Word> ws;
    std::vector<S> qs;
    for (Letter i = 0; i <= n; ++i) {
      ws.push_back(Word{i});
      qs.push_back(S::x(d, i));
    }
    auto rep = verify_word_system(ws, qs, n);
    EXPECT_TRUE(rep.valid) << (rep.violations.empty() ? "" : rep.violations[0]);
    EXPECT_EQ(rep.residue, 1 % n);

    std::swap(qs[0], qs[1]);
    auto bad = verify_word_system(ws, qs, n);
    EXPECT_FALSE(bad.valid);
    ASSERT_FALSE(bad.violations.empty());
  }
  Domain d{Field::rationals(), 3, false};
  std::vector<Word> ws{Word{0}, Word{1}, Word({2, 0}), Word({2, 1}), Word({2, 2})};
  std::vector<S> qs{S::x(d, 0), S::x(d, 1), S::x_word(d, Word({0, 2})), S::x_word(d, Word({1, 2})),
                    S::x_word(d, Word({2, 2}))};
  auto rep = verify_word_system(ws, qs, 2);
  EXPECT_TRUE(rep.valid);
  EXPECT_EQ(rep.s, 5u);
}

TEST(Skew, DynamicAlphabetGrows) {
  Domain d{Field::rationals(), 1, true};
  S a = E("y3*x3", d);
  EXPECT_GE(a.domain().letters, 4u);
  EXPECT_TRUE((E("x3", d) * E("y3", d)).equals(S::one(d)));
  EXPECT_THROW(E("y5"), InputError);
}

TEST(Skew, InversionOnlyForCoefficients) {
  EXPECT_TRUE(E("(1 - x0)^-1 * (1 - x0)").equals(E("1")));
  EXPECT_THROW(E("(1 + y0)^-1"), NotInvertible);
}
