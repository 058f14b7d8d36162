#include <gtest/gtest.h>

#include <numeric>

#include "pinf/core/error.hpp"
#include "pinf/kzero.hpp"
#include "pinf/random.hpp"

using namespace pinf;

namespace {

std::vector<long> factors(const AbGroup& g) {
  std::vector<long> out;
  for (const auto& d : g.invariant_factors) out.push_back(d.get_si());
  return out;
}

std::vector<long> image(const AbGroup& g, std::size_t i) {
  std::vector<long> out;
  for (const auto& z : g.images[i]) out.push_back(z.get_si());
  return out;
}

}  // namespace

TEST(KZero, LeavittFamily) {
  for (long n = 2; n <= 12; ++n) {
    auto p = MonoidPresentation::parse("I | " + std::to_string(n) + "I = I");
    AbGroup g = grothendieck_group(p);
    if (n == 2) {
      EXPECT_TRUE(g.invariant_factors.empty());
      EXPECT_EQ(g.order(), 1);
      continue;
    }
    EXPECT_EQ(factors(g), std::vector<long>{n - 1});
    EXPECT_EQ(image(g, 0), std::vector<long>{1});
  }
}

TEST(KZero, FreeCases) {
  AbGroup g = grothendieck_group(MonoidPresentation::parse("g, p | g = 2g + p"));
  EXPECT_EQ(factors(g), std::vector<long>{0});
  EXPECT_EQ(g.order(), 0);
  // The generator of Z is determined up to sign; the images must be opposite.
  ASSERT_EQ(image(g, 0).size(), 1u);
  EXPECT_EQ(std::abs(image(g, 0)[0]), 1);
  EXPECT_EQ(image(g, 1)[0], -image(g, 0)[0]);

  AbGroup f = grothendieck_group(MonoidPresentation::parse("g |"));
  EXPECT_EQ(factors(f), std::vector<long>{0});
  EXPECT_EQ(image(f, 0), std::vector<long>{1});
}

TEST(KZero, RankDeficient) {
  AbGroup g = abelian_quotient({{2, 4}}, 2);
  EXPECT_EQ(factors(g), (std::vector<long>{2, 0}));
  EXPECT_FALSE(g.is_finite());
}

// Oracle for a full-rank lattice L in Z^2: v lies in L iff det divides every
// entry of v * adj(M), so the order of v is |det| / gcd(|det|, v * adj(M)).
// The largest order is the exponent d2 and d1 = |det| / d2.
TEST(KZero, SmithFormMatchesBruteForce) {
  Random r(71);
  int checked = 0;
  while (checked < 300) {
    long a = r.integer(-6, 6), b = r.integer(-6, 6), c = r.integer(-6, 6), d = r.integer(-6, 6);
    long det = std::labs(a * d - b * c);
    if (det == 0 || det > 30) continue;
    ++checked;
    long exponent = 1;
    for (long u = 0; u < det; ++u)
      for (long v = 0; v < det; ++v) {
        long p = u * d - v * c, q = -u * b + v * a;
        long order = det / std::gcd(det, std::gcd(std::labs(p), std::labs(q)));
        exponent = std::max(exponent, order);
      }
    std::vector<long> expect;
    if (det / exponent > 1) expect.push_back(det / exponent);
    if (exponent > 1) expect.push_back(exponent);
    AbGroup g = abelian_quotient({{a, b}, {c, d}}, 2);
    ASSERT_EQ(factors(g), expect) << a << " " << b << " " << c << " " << d;
    ASSERT_EQ(g.order(), det);
    for (std::size_t i = 0; i + 1 < g.invariant_factors.size(); ++i)
      ASSERT_EQ(g.invariant_factors[i + 1] % g.invariant_factors[i], 0);
    // Each relation maps to zero.
    for (const auto& row : std::vector<IntVector>{{a, b}, {c, d}}) {
      std::vector<mpz_class> sum(g.invariant_factors.size(), 0);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = row[0] * g.images[0][k] + row[1] * g.images[1][k];
      for (const auto& z : g.reduce(sum)) ASSERT_EQ(z, 0);
    }
  }
}

TEST(KZero, ParsingAndCanonicalForm) {
  auto p = MonoidPresentation::parse("I, P | I = 2I + P; 3*I = I");
  EXPECT_EQ(p.generators, (std::vector<std::string>{"I", "P"}));
  EXPECT_EQ(p.relations.size(), 2u);
  auto q = MonoidPresentation::parse(p.to_string());
  p.canonicalize();
  q.canonicalize();
  EXPECT_EQ(p.relations, q.relations);
  EXPECT_THROW(MonoidPresentation::parse("I | 3J = I"), InputError);
  EXPECT_THROW(MonoidPresentation::parse("I | 3I"), InputError);
  EXPECT_THROW(MonoidPresentation::parse("I, I | I = I"), InputError);
}

TEST(KZero, Enumeration) {
  auto p = MonoidPresentation::parse("I | 3I = I");
  MonoidTable t = monoid_enumerate(p, 64);
  EXPECT_FALSE(t.overflow);
  EXPECT_EQ(t.elements.size(), 3u);
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    EXPECT_EQ(t.add[0][i], i);
    for (std::size_t j = 0; j < t.elements.size(); ++j) EXPECT_EQ(t.add[i][j], t.add[j][i]);
  }
  EXPECT_TRUE(monoid_enumerate(MonoidPresentation::parse("g, p | g = 2g + p"), 50).overflow);
  auto several = MonoidPresentation::parse("a, b | 2a = a; 2b = b");
  EXPECT_THROW(monoid_enumerate(several, 64), InputError);
  EXPECT_FALSE(monoid_enumerate(several, 64, true).overflow);
}

TEST(KZero, ShapeMatchesGrothendieckGroup) {
  for (long n = 2; n <= 8; ++n) {
    auto p = MonoidPresentation::parse("I | " + std::to_string(n) + "I = I");
    MonoidShapeReport s = analyze_pisr_shape(p, 256);
    ASSERT_FALSE(s.overflow);
    EXPECT_EQ(s.elements, static_cast<std::size_t>(n));
    EXPECT_EQ(s.conical, true);
    EXPECT_EQ(s.simple, true);
    EXPECT_EQ(s.nonzero_group, true);
    EXPECT_EQ(s.matches_k0, true);
    EXPECT_EQ(s.k0.order(), n - 1);
  }
  MonoidShapeReport s = analyze_pisr_shape(MonoidPresentation::parse("g, p | g = 2g + p"), 40);
  EXPECT_TRUE(s.overflow);
  // Whenever the nonzero part is a group it agrees with K0.
  Random r(72);
  for (int k = 0; k < 40; ++k) {
    long m = r.integer(1, 5), n = r.integer(1, 5);
    if (m == n) continue;
    auto q = MonoidPresentation::parse("g | " + std::to_string(m) + "g = " + std::to_string(n) + "g");
    MonoidShapeReport t = analyze_pisr_shape(q, 128);
    if (t.nonzero_group == true) {
      EXPECT_EQ(t.matches_k0, true) << q.to_string();
    }
  }
}
