#include <gtest/gtest.h>

#include "pinf/random.hpp"

using namespace pinf;

TEST(Word, ReverseIsAnInvolution) {
  Random r(3);
  for (int k = 0; k < 1000; ++k) {
    Word w = r.word(4, 12);
    ASSERT_EQ(w.reversed().reversed(), w);
    ASSERT_EQ(w.reversed().size(), w.size());
  }
}

TEST(Word, LengthLexOrder) {
  EXPECT_LT(Word({5}), Word({0, 0}));
  EXPECT_LT(Word({0, 1}), Word({1, 0}));
  EXPECT_LT(Word(), Word({0}));
  Random r(5);
  for (int k = 0; k < 500; ++k) {
    Word a = r.word(2, 4), b = r.word(2, 4), c = r.word(2, 4);
    if (a < b && b < c) {
      ASSERT_LT(a, c);
    }
    ASSERT_EQ(a < b, !(b < a) && !(a == b));
  }
}

TEST(Word, Rendering) {
  EXPECT_EQ(Word({0, 0, 1}).to_string('x'), "x0^2*x1");
  EXPECT_EQ(Word({0, 0, 1}).to_string('x', false), "x0*x0*x1");
  EXPECT_EQ(Word().to_string('y'), "1");
  EXPECT_EQ((Monoword{Word{1}, Word{2}}).to_string(), "y1*x2");
  EXPECT_EQ((Monoword{Word(), Word()}).to_string(), "1");
}

TEST(Word, QuotientsAndSlices) {
  Word w{0, 1, 2};
  EXPECT_EQ(*Word({0, 1}).left_quotient(w), Word{2});
  EXPECT_FALSE(Word({1}).left_quotient(w).has_value());
  EXPECT_EQ(w.drop_front(), Word({1, 2}));
  EXPECT_EQ(w.drop_back(2), Word{0});
  EXPECT_EQ(w.take(2), Word({0, 1}));
  EXPECT_EQ(w.max_letter(), 2u);
  EXPECT_EQ(Word({0}) + Word({1}), Word({0, 1}));
}

TEST(Alphabet, DynamicAllocationIsFresh) {
  Alphabet a(LetterKind::X, 2, 1, true);
  Letter first = a.allocate(), second = a.allocate();
  EXPECT_NE(first, second);
  EXPECT_GE(first, 3u);
  EXPECT_TRUE(a.contains(first));
  Alphabet fixed(LetterKind::Y, 2, 1, false);
  EXPECT_TRUE(fixed.contains(2));
  EXPECT_FALSE(fixed.contains(0));
  EXPECT_FALSE(fixed.contains(3));
}
