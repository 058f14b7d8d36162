#include <gtest/gtest.h>

#include "pinf/expr.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

const Field kQ = Field::rationals();

Expr leaf(Random& r) {
  Expr e;
  switch (r.integer(0, 4)) {
    case 0:
      e.kind = Expr::Kind::Number;
      e.number = r.integer(0, 12);
      break;
    case 1:
      e.kind = Expr::Kind::Param;
      e.index = static_cast<std::uint32_t>(r.integer(1, 2));
      break;
    case 2:
      e.kind = Expr::Kind::X;
      e.index = static_cast<std::uint32_t>(r.integer(0, 2));
      break;
    case 3:
      e.kind = Expr::Kind::Y;
      e.index = static_cast<std::uint32_t>(r.integer(0, 2));
      break;
    default:
      e.kind = Expr::Kind::Idempotent;
  }
  return e;
}

Expr tree(Random& r, int depth) {
  if (depth == 0 || r.coin(0.25)) return leaf(r);
  Expr e;
  long k = r.integer(0, 6);
  const Expr::Kind binary[] = {Expr::Kind::Add, Expr::Kind::Sub, Expr::Kind::Mul, Expr::Kind::Div};
  if (k < 4) {
    e.kind = binary[k];
    e.kids = {tree(r, depth - 1), tree(r, depth - 1)};
  } else if (k == 4) {
    e.kind = Expr::Kind::Neg;
    e.kids = {tree(r, depth - 1)};
  } else {
    e.kind = Expr::Kind::Pow;
    e.exponent = r.integer(-2, 3);
    e.kids = {tree(r, depth - 1)};
  }
  return e;
}

std::size_t error_column(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST(Expr, Syntax) {
  EXPECT_EQ(error_column("x0 +"), 5u);
  EXPECT_EQ(error_column("(x0"), 4u);
  EXPECT_EQ(error_column("x0 ) "), 4u);
  EXPECT_EQ(error_column("z1"), 1u);
  EXPECT_GT(error_column("x"), 0u);
  EXPECT_GT(error_column("x0^2^3"), 0u);
  EXPECT_GT(error_column("x0^9999999"), 0u);
  EXPECT_EQ(error_column("x_1 * y_2"), 0u);
  EXPECT_EQ(parse_expr("x_1"), parse_expr("x1"));
  EXPECT_EQ(parse_expr("t"), parse_expr("t1"));
  EXPECT_EQ(parse_expr("x0^(-1)"), parse_expr("x0^-1"));
}

TEST(Expr, ColumnsCountCodePoints) {
  EXPECT_EQ(parse_expr("x0 − y0"), parse_expr("x0 - y0"));
  EXPECT_EQ(parse_expr("2·x0"), parse_expr("2*x0"));
  EXPECT_EQ(error_column("−x0 +"), 6u);
}

TEST(Expr, Precedence) {
  EXPECT_EQ(parse_expr("1 + 2*x0^2").to_string(), "1 + 2*x0^2");
  EXPECT_EQ(parse_expr("(1 + x0)*y0").to_string(), "(1 + x0)*y0");
  EXPECT_EQ(parse_expr("((x0))").to_string(), "x0");
  EXPECT_EQ(parse_expr("x0 - (x1 - x2)").to_string(), "x0 - (x1 - x2)");
  EXPECT_EQ(parse_expr("(x0 - x1) - x2").to_string(), "x0 - x1 - x2");
  EXPECT_EQ(parse_expr("-x0^2"), parse_expr("-(x0^2)"));
  EXPECT_EQ(parse_expr("x0/x1/x2"), parse_expr("(x0/x1)/x2"));
}

TEST(Expr, PrintParsesBack) {
  Random r(91);
  for (int k = 0; k < 1000; ++k) {
    Expr e = tree(r, 4);
    std::string s = e.to_string();
    Expr back;
    ASSERT_NO_THROW(back = parse_expr(s)) << s;
    ASSERT_EQ(back, e) << s;
    ASSERT_EQ(back.to_string(), s);
  }
}

TEST(Expr, ElementPrintersParseBack) {
  Random r(92);
  for (const char* spec : {"q", "fp:5", "qt:1"}) {
    Field f = Field::parse(spec);
    Domain d{f, 3, false};
    for (int k = 0; k < 100; ++k) {
      Scalar c = r.scalar(f);
      ASSERT_EQ(parse_scalar(c.to_string(), f), c) << spec;
      FreeElem p = r.polynomial(d, 4, 3);
      ASSERT_EQ(eval_polynomial(parse_expr(p.to_string()), d), p) << p.to_string();
      UElem u = r.uelem(f, 2, 3, 3);
      ASSERT_EQ(eval_leavitt(parse_expr(u.to_string()), f, 2), u) << u.to_string();
    }
  }
}

TEST(Expr, EvaluationErrors) {
  Domain d{kQ, 2, false};
  EXPECT_THROW(eval_series(parse_expr("x2"), d), InputError);
  EXPECT_THROW(eval_series(parse_expr("y0"), d), InputError);
  EXPECT_THROW(eval_series(parse_expr("e"), d), InputError);
  EXPECT_THROW(eval_series(parse_expr("x0^-1"), d), NotInvertible);
  EXPECT_THROW(eval_series(parse_expr("1/(2 - 2)"), d), DivisionByZero);
  EXPECT_THROW(eval_polynomial(parse_expr("(1 - x0)^-1"), d), NotInvertible);
  EXPECT_THROW(eval_series(parse_expr("t"), d), InputError);
  EXPECT_NO_THROW(eval_series(parse_expr("t*x0"), Domain{Field::rational_functions(1), 2, false}));
  EXPECT_THROW(eval_skew(parse_expr("(1 + y0)^-1"), d), NotInvertible);
  EXPECT_THROW(eval_leavitt(parse_expr("e"), kQ, 2, true), InputError);
  try {
    eval_series(parse_expr("1 + x7"), d);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos) << e.what();
  }
}

TEST(Expr, ScalarsFold) {
  Domain d{kQ, 2, false};
  EXPECT_EQ(parse_scalar("(1/2 + 1/3)^2", kQ).to_string(), "25/36");
  EXPECT_EQ(parse_scalar("3/6", Field::parse("fp:7")).to_string(), "4");
  EXPECT_EQ(eval_series(parse_expr("(1 - 1/2*x0)^-1"), d), eval_series(parse_expr("2*(2 - x0)^-1"), d));
  EXPECT_FALSE(scalar_value(parse_expr("x0"), kQ).has_value());
}
