#include <gtest/gtest.h>

#include "pinf/expr.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

std::vector<Field> fields() {
  return {Field::rationals(), Field::prime(2), Field::prime(7), Field::rational_functions(1),
          Field::rational_functions(2), Field::rational_functions(1, 5)};
}

}  // namespace

TEST(Field, ParseAndName) {
  for (const char* s : {"q", "fp:7", "qt:1", "qt:3", "fpt:5:2"}) EXPECT_EQ(Field::parse(s).name(), s);
  EXPECT_THROW(Field::parse("fp:8"), InputError);
  EXPECT_THROW(Field::parse("fp:1"), InputError);
  EXPECT_THROW(Field::parse("r"), InputError);
  EXPECT_THROW(Field::parse("qt:0"), InputError);
}

TEST(Field, AxiomsOnRandomTriples) {
  Random r(101);
  for (const Field& f : fields()) {
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (int k = 0; k < 150; ++k) {
      Scalar a = r.scalar(f), b = r.scalar(f), c = r.scalar(f);
      ASSERT_EQ((a + b) + c, a + (b + c)) << f.name();
      ASSERT_EQ((a * b) * c, a * (b * c)) << f.name();
      ASSERT_EQ(a + b, b + a) << f.name();
      ASSERT_EQ(a * b, b * a) << f.name();
      ASSERT_EQ(a * (b + c), a * b + a * c) << f.name();
      ASSERT_EQ(a + zero, a);
      ASSERT_EQ(a * one, a);
      ASSERT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        ASSERT_TRUE((a * a.inverse()).is_one()) << f.name() << " " << a;
        ASSERT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(Scalar, RationalsAreCanonical) {
  Field q = Field::rationals();
  Scalar a = Scalar::from_rational(q, mpq_class(-3, 3));
  EXPECT_EQ(a, Scalar::from_int(q, -1));
  EXPECT_EQ(a.to_string(), "-1");
  EXPECT_EQ(Scalar::from_rational(q, mpq_class(6, -4)).to_string(), "-3/2");
  EXPECT_EQ(Scalar::from_rational(Field::prime(7), mpq_class(1, 2)), Scalar::from_int(Field::prime(7), 4));
  EXPECT_THROW(Scalar::from_rational(Field::prime(7), mpq_class(1, 7)), DivisionByZero);
}

TEST(Scalar, PrimeField) {
  Field f = Field::prime(7);
  EXPECT_EQ(Scalar::from_int(f, 3) * Scalar::from_int(f, 5), Scalar::one(f));
  EXPECT_EQ(Scalar::from_int(f, -1), Scalar::from_int(f, 6));
  EXPECT_THROW(Scalar::zero(f).inverse(), DivisionByZero);
}

TEST(Scalar, RationalFunctionsReduce) {
  Field f = Field::rational_functions(1);
  Scalar t = Scalar::indeterminate(f, 1), one = Scalar::one(f);
  Scalar q = (t * t - one) / (t - one);
  EXPECT_EQ(q, t + one);
  EXPECT_EQ(q.to_string(), "t + 1");
  EXPECT_THROW(Scalar::indeterminate(f, 2), InputError);
  EXPECT_FALSE(t.is_rational_constant());
  EXPECT_TRUE((t / t).is_rational_constant());
}

TEST(Scalar, GcdDividesCommonFactor) {
  Random r(7);
  Field f = Field::rational_functions(2);
  auto poly = [&](const Scalar& s) { return s.rational_function().numerator(); };
  for (int k = 0; k < 60; ++k) {
    Scalar a = r.scalar(f), b = r.scalar(f), c = r.scalar(f, true);
    Poly pa = poly(a), pb = poly(b), pc = poly(c);
    if (pa.is_zero() || pb.is_zero()) continue;
    Poly g = gcd(pa * pc, pb * pc);
    EXPECT_NO_THROW(g.divide_exact(pc));
    EXPECT_NO_THROW((pa * pc).divide_exact(g));
    EXPECT_NO_THROW((pb * pc).divide_exact(g));
  }
}

TEST(Scalar, MixedFieldsAreRejected) {
  EXPECT_THROW(Scalar::one(Field::rationals()) + Scalar::one(Field::prime(3)), Mismatch);
}

TEST(Scalar, PrintedFormParsesBack) {
  Random r(11);
  for (const Field& f : fields())
    for (int k = 0; k < 100; ++k) {
      Scalar a = r.scalar(f);
      ASSERT_EQ(parse_scalar(a.to_string(), f), a) << f.name() << ": " << a;
    }
}
