#include <gtest/gtest.h>

#include "pinf/expr.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

const Domain kQ3{Field::rationals(), 3, false};

FreeElem P(const std::string& s, const Domain& d = kQ3) { return eval_polynomial(parse_expr(s), d); }

}  // namespace

TEST(FreeAlgebra, Examples) {
  EXPECT_EQ((P("x1") * P("x2")).to_string(), "x1*x2");
  EXPECT_EQ((P("1 + x0") * P("1 - x0")), P("1 - x0^2"));
  EXPECT_EQ((P("1 + x0") * P("1 - x0")).to_string(), "1 - x0^2");
  FreeElem sq = P("x0 + x1") * P("x0 + x1");
  EXPECT_EQ(sq.to_string(), "x0^2 + x0*x1 + x1*x0 + x1^2");
}

TEST(FreeAlgebra, Stats) {
  FreeElem a = P("x0*x1 + x0");
  EXPECT_EQ(a.order(), 1u);
  EXPECT_EQ(a.degree(), 2u);
  EXPECT_EQ(a.support_size(), 2u);
  EXPECT_TRUE(a.constant_term().is_zero());

  FreeElem z = FreeElem::zero(kQ3);
  EXPECT_FALSE(z.order().has_value());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_EQ(z.support_size(), 0u);

  FreeElem c = P("3 + x0^3");
  EXPECT_EQ(c.order(), 0u);
  EXPECT_EQ(c.degree(), 3u);
  EXPECT_EQ(c.support_size(), 2u);
  EXPECT_EQ(c.constant_term(), Scalar::from_int(kQ3.field, 3));
}

TEST(FreeAlgebra, RingAxioms) {
  Random r(21);
  for (const Field& f : {Field::rationals(), Field::prime(5), Field::rational_functions(1)}) {
    Domain d{f, 2, false};
    for (int k = 0; k < 100; ++k) {
      FreeElem a = r.polynomial(d, 3, 3), b = r.polynomial(d, 3, 3), c = r.polynomial(d, 3, 3);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(a + b, b + a);
      ASSERT_TRUE((a - a).is_zero());
      ASSERT_EQ(a * FreeElem::one(d), a);
    }
  }
}

TEST(FreeAlgebra, OrderAndDegreeAreAdditive) {
  Random r(22);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::rational_functions(1)}) {
    Domain d{f, 3, false};
    for (int k = 0; k < 200; ++k) {
      FreeElem a = r.polynomial(d, 4, 4), b = r.polynomial(d, 4, 4);
      if (a.is_zero() || b.is_zero()) continue;
      FreeElem ab = a * b;
      ASSERT_FALSE(ab.is_zero()) << "zero divisors in a free algebra";
      ASSERT_EQ(*ab.order(), *a.order() + *b.order());
      ASSERT_EQ(*ab.degree(), *a.degree() + *b.degree());
    }
  }
}

TEST(FreeAlgebra, TransductionReadsSuffixes) {
  Random r(23);
  Domain d{Field::rationals(), 2, false};
  for (int k = 0; k < 100; ++k) {
    FreeElem a = r.polynomial(d, 5, 4);
    for (Letter i = 0; i < 2; ++i) {
      FreeElem t = a.transduce(i);
      for (int len = 0; len < 4; ++len)
        for (int rep = 0; rep < 4; ++rep) {
          Word w = r.word(2, static_cast<std::size_t>(len), static_cast<std::size_t>(len));
          ASSERT_EQ(t.coefficient(w), a.coefficient(w + Word{i}));
        }
    }
  }
}

TEST(FreeAlgebra, MinMonomialAndInverse) {
  EXPECT_EQ(P("x2*x0 + x1*x1 + x0").min_monomial(), Word{0});
  EXPECT_EQ(P("x2*x0 + x1*x1").min_monomial(), Word({1, 1}));
  EXPECT_EQ(P("2").inverse(), P("1/2"));
  EXPECT_THROW(P("1 + x0").inverse(), NotInvertible);
}

TEST(FreeAlgebra, TextRoundTrip) {
  Random r(24);
  for (const Field& f : {Field::rationals(), Field::prime(7), Field::rational_functions(2)}) {
    Domain d{f, 3, false};
    for (int k = 0; k < 200; ++k) {
      FreeElem a = r.polynomial(d, 4, 3);
      ASSERT_EQ(P(a.to_string(), d), a) << a.to_string();
    }
  }
  EXPECT_EQ(P("3*x0*x1 + x2^2").to_string(), "3*x0*x1 + x2^2");
}

TEST(FreeAlgebra, AlphabetsMustMatch) {
  Domain d2{Field::rationals(), 2, false};
  EXPECT_THROW(P("x0", d2) + P("x0"), Mismatch);
  EXPECT_THROW(P("x2", d2), InputError);
}
