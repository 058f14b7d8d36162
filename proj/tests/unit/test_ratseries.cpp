#include <gtest/gtest.h>

#include "pinf/expr.hpp"
#include "pinf/json.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

const Domain kQ2{Field::rationals(), 2, false};

LinRep R(const std::string& s, const Domain& d = kQ2) { return eval_series(parse_expr(s), d); }

std::vector<Word> words_up_to(std::size_t letters, std::size_t len) {
  std::vector<Word> out{Word()};
  std::vector<Word> level{Word()};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (Letter a = 0; a < letters; ++a) next.push_back(w + Word{a});
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

// Rank of the Hankel block (coefficient of uv) over all words of length <= len.
std::size_t hankel_rank(const LinRep& a, std::size_t len) {
  auto ws = words_up_to(a.domain().letters, len);
  RowSpan span(a.field(), ws.size());
  for (const Word& u : ws) {
    Vector row;
    for (const Word& v : ws) row.push_back(a.coefficient(u + v));
    span.insert(row);
  }
  return span.size();
}

}  // namespace

TEST(RationalSeries, GeometricSeries) {
  LinRep g = R("(1 - x0)^-1");
  for (std::size_t k = 0; k < 10; ++k) EXPECT_TRUE(g.coefficient(Word::power(0, k)).is_one());
  EXPECT_TRUE(g.coefficient(Word{1}).is_zero());
  EXPECT_TRUE(g.coefficient(Word({0, 1, 0})).is_zero());
  EXPECT_EQ(g.dim(), 1u);

  LinRep all = R("(1 - x0 - x1)^-1");
  Random r(1);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE(all.coefficient(r.word(2, 9)).is_one());

  LinRep two = R("(1 - 2*x0)^-1");
  EXPECT_EQ(two.coefficient(Word::power(0, 10)), Scalar::from_int(kQ2.field, 1024));
  EXPECT_EQ(R("x0").star(), R("(1 - x0)^-1"));
  EXPECT_THROW(R("x0").inverse(), NotInvertible);
  EXPECT_THROW(R("1 + x0").star(), MathError);
}

TEST(RationalSeries, ProductMatchesConvolution) {
  Random r(31);
  for (int k = 0; k < 40; ++k) {
    LinRep a = r.series(kQ2, 3), b = r.series(kQ2, 3);
    LinRep ab = a * b, s = a + b;
    for (int rep = 0; rep < 10; ++rep) {
      Word w = r.word(2, 5);
      Scalar expect = Scalar::zero(kQ2.field);
      for (std::size_t cut = 0; cut <= w.size(); ++cut)
        expect += a.coefficient(w.take(cut)) * b.coefficient(w.drop_front(cut));
      ASSERT_EQ(ab.coefficient(w), expect);
      ASSERT_EQ(s.coefficient(w), a.coefficient(w) + b.coefficient(w));
    }
  }
}

TEST(RationalSeries, InverseIsTwoSided) {
  Random r(32);
  for (const Field& f : {Field::rationals(), Field::prime(7), Field::rational_functions(1)}) {
    Domain d{f, 2, false};
    for (int k = 0; k < 40; ++k) {
      LinRep a = r.series(d, 3);
      if (a.constant_term().is_zero()) a = a + LinRep::one(d);
      LinRep inv = a.inverse();
      ASSERT_EQ(a * inv, LinRep::one(d));
      ASSERT_EQ(inv * a, LinRep::one(d));
    }
  }
}

TEST(RationalSeries, DerivationLaw) {
  Random r(33);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::rational_functions(1)}) {
    Domain d{f, 2, false};
    for (int k = 0; k < 30; ++k) {
      LinRep a = r.series(d, 3), b = r.series(d, 3);
      for (Letter i = 0; i < 2; ++i)
        ASSERT_EQ((a * b).transduce(i), a.transduce(i).scaled(b.constant_term()) + a * b.transduce(i));
    }
  }
}

TEST(RationalSeries, TransductionKeepsDimension) {
  Random r(34);
  for (int k = 0; k < 60; ++k) {
    LinRep a = r.series(kQ2, 4);
    for (Letter i = 0; i < 2; ++i) {
      LinRep raw = a.transduce(i, false);
      ASSERT_LE(raw.dim(), a.dim());
      ASSERT_LE(a.transduce(i).dim(), a.dim());
      for (int rep = 0; rep < 5; ++rep) {
        Word w = r.word(2, 5);
        ASSERT_EQ(raw.coefficient(w), a.coefficient(w + Word{i}));
      }
    }
  }
}

TEST(RationalSeries, ReductionIsMinimal) {
  Random r(35);
  for (int k = 0; k < 40; ++k) {
    LinRep a = r.series(kQ2, 3, 0.6);
    LinRep b = r.series(kQ2, 2, 0.6);
    LinRep c = a * b + a;  // unreduced sum would have dimension up to 3 + 2 + 3
    ASSERT_EQ(c.reduced().dim(), c.dim());
    ASSERT_EQ(hankel_rank(c, c.dim()), c.dim()) << "reduced dimension differs from the Hankel rank";
  }
  EXPECT_EQ((R("x0") - R("x0")).dim(), 0u);
  EXPECT_TRUE((R("(1 - x0)^-1 - 1 - x0*(1 - x0)^-1")).is_zero());
}

TEST(RationalSeries, OrderAndMinimalMonomial) {
  Random r(36);
  for (int k = 0; k < 60; ++k) {
    LinRep a = r.series(kQ2, 3);
    FreeElem head = a.truncation(2 * a.dim() + 2);
    if (a.is_zero()) {
      EXPECT_FALSE(a.order().has_value());
      continue;
    }
    ASSERT_EQ(a.order(), head.order());
    ASSERT_EQ(a.min_monomial(), head.min_monomial());
  }
  EXPECT_EQ(R("x1*x0 + x0*x1*(1 - x0)^-1").min_monomial(), Word({0, 1}));
}

TEST(RationalSeries, PolynomialDetection) {
  EXPECT_EQ(R("(x0 + x1)^3").as_polynomial()->support_size(), 8u);
  EXPECT_FALSE(R("(1 - x0)^-1").as_polynomial().has_value());
  EXPECT_EQ(R("(1 - x0)^-1*(1 - x0)").to_string(), "1");
}

TEST(RationalSeries, MatrixInversion) {
  Random r(37);
  for (int k = 0; k < 20; ++k) {
    std::size_t n = static_cast<std::size_t>(r.integer(1, 3));
    SeriesMatrix m(n, std::vector<LinRep>(n, LinRep::zero(kQ2)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        LinRep v = r.series(kQ2, 2);
        m[i][j] = v - LinRep::constant(kQ2, v.constant_term());
        if (i == j) m[i][j] = m[i][j] + LinRep::one(kQ2);
      }
    SeriesMatrix inv = invert_matrix_series(m);
    ASSERT_TRUE(is_identity(multiply(m, inv)));
    ASSERT_TRUE(is_identity(multiply(inv, m)));
  }
  SeriesMatrix singular{{R("1 + x0"), R("1")}, {R("1"), R("1")}};
  EXPECT_THROW(invert_matrix_series(singular), NotInvertible);
}

TEST(RationalSeries, JsonRoundTrip) {
  Random r(38);
  for (const Field& f : {Field::rationals(), Field::prime(7), Field::rational_functions(1)}) {
    Domain d{f, 2, false};
    for (int k = 0; k < 30; ++k) {
      LinRep a = r.series(d, 3);
      Json j = to_json(a);
      ASSERT_EQ(j["dimension"], a.dim());
      ASSERT_EQ(linrep_from_json(Json::parse(j.dump())), a);
    }
  }
  EXPECT_THROW(linrep_from_json(Json::parse(R"({"lambda":["1"],"mu":[[["1","2"]]],"gamma":["1"]})")),
               InputError);
}
