#include <gtest/gtest.h>

#include "pinf/expr.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

const Field kQ = Field::rationals();

UElem U(const std::string& s, std::size_t n = 2, bool dynamic = false) {
  return eval_leavitt(parse_expr(s), kQ, n, dynamic);
}

bool has_forbidden_site(const UElem& a) {
  const Letter n = static_cast<Letter>(a.n());
  for (const auto& [m, c] : a.terms())
    if (!m.y.empty() && !m.x.empty() && m.y.back() == n && m.x.front() == n) return true;
  return false;
}

}  // namespace

TEST(Leavitt, MonowordProducts) {
  EXPECT_EQ(*u_mul({Word{1}, Word{2}}, {Word{2}, Word{1}}), (Monoword{Word{1}, Word{1}}));
  EXPECT_FALSE(u_mul({Word(), Word{1}}, {Word{2}, Word()}).has_value());
  EXPECT_EQ(*u_mul({Word(), Word({1, 2})}, {Word{2}, Word()}), (Monoword{Word(), Word{1}}));
  EXPECT_EQ(*u_mul({Word(), Word{2}}, {Word({2, 1}), Word()}), (Monoword{Word{1}, Word()}));
  EXPECT_EQ(U("x1*y1"), U("1"));
  EXPECT_TRUE((U("x1*y2")).is_zero());
}

TEST(Leavitt, Associativity) {
  Random r(61);
  for (int k = 0; k < 200; ++k) {
    UElem a = r.uelem(kQ, 3, 3, 4), b = r.uelem(kQ, 3, 3, 4), c = r.uelem(kQ, 3, 3, 4);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Leavitt, RewritingIsConfluentOnRandomLetterWords) {
  Random r(62);
  for (int k = 0; k < 500; ++k) {
    std::size_t n = static_cast<std::size_t>(r.integer(1, 3));
    std::vector<std::pair<LetterWord, Scalar>> terms;
    std::size_t count = static_cast<std::size_t>(r.integer(1, 3));
    for (std::size_t t = 0; t < count; ++t) {
      LetterWord w;
      std::size_t len = static_cast<std::size_t>(r.integer(0, 6));
      for (std::size_t p = 0; p < len; ++p)
        w.push_back({r.coin() ? LetterKind::X : LetterKind::Y, static_cast<Letter>(r.integer(1, static_cast<long>(n)))});
      terms.emplace_back(w, r.scalar(kQ, true));
    }
    UElem left = reduce_letter_words(kQ, n, terms, SiteOrder::Leftmost);
    UElem right = reduce_letter_words(kQ, n, terms, SiteOrder::Rightmost);
    ASSERT_EQ(left, right) << "element " << k;
    ASSERT_FALSE(has_forbidden_site(left));
  }
}

TEST(Leavitt, NormalForm) {
  EXPECT_TRUE(v_normal_form(UElem::idempotent(kQ, 2)).is_zero());
  EXPECT_TRUE(v_normal_form(U("e")).is_zero());
  EXPECT_EQ(v_normal_form(U("y2*x2")), U("1 - y1*x1"));
  EXPECT_EQ(v_normal_form(U("y1*y2*x2*x1")), U("y1*x1 - y1^2*x1^2"));
  Random r(63);
  for (int k = 0; k < 200; ++k) {
    UElem a = r.uelem(kQ, 2, 3, 5);
    UElem nf = v_normal_form(a);
    ASSERT_FALSE(has_forbidden_site(nf));
    ASSERT_EQ(v_normal_form(nf), nf);
    ASSERT_EQ(v_normal_form(a, SiteOrder::Rightmost), nf);
  }
}

TEST(Leavitt, WitnessExample) {
  UWitness w = v_witness(U("y1*x2"));
  EXPECT_EQ(w.beta.to_string(), "x1");
  EXPECT_EQ(w.gamma.to_string(), "y2");
  EXPECT_THROW(v_witness(U("e")), MathError);
  EXPECT_THROW(v_witness(U("x1", 1)), InputError);
}

TEST(Leavitt, WitnessesAreSound) {
  Random r(64);
  int v_checked = 0;
  for (int k = 0; k < 150; ++k) {
    std::size_t n = static_cast<std::size_t>(r.integer(2, 3));
    UElem a = r.uelem(kQ, n, 3, 4);
    if (v_normal_form(a).is_zero()) continue;
    UWitness w = v_witness(a);
    ASSERT_EQ(v_normal_form(w.beta * a * w.gamma), UElem::one(kQ, n)) << a.to_string();
    ++v_checked;
  }
  EXPECT_GT(v_checked, 100);
  for (int k = 0; k < 60; ++k) {
    UElem a = r.uelem(kQ, 2, 3, 4, true);
    if (a.is_zero()) continue;
    UWitness w = uinf_witness(a);
    ASSERT_EQ(w.beta * a * w.gamma, UElem::one(kQ, 2, true)) << a.to_string();
  }
}

TEST(Leavitt, AgreesWithSkewMultiplication) {
  Random r(65);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(r.integer(1, 3));
    UElem a = r.uelem(kQ, n, 3, 4), b = r.uelem(kQ, n, 3, 4);
    ASSERT_EQ(from_skew(to_skew(a), n), a);
    ASSERT_TRUE(to_skew(a * b).equals(to_skew(a) * to_skew(b))) << a.to_string() << " | " << b.to_string();
  }
}

TEST(Leavitt, IndicesStartAtOne) {
  EXPECT_THROW(U("x0"), InputError);
  EXPECT_THROW(U("y3"), InputError);
  EXPECT_NO_THROW(U("y3", 2, true));
  EXPECT_THROW(U("(1 + x1)^-1"), NotInvertible);
  EXPECT_EQ(U("(2)^-1*x1"), U("1/2*x1"));
}
