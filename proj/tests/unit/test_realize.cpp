#include <gtest/gtest.h>

#include "pinf/random.hpp"
#include "pinf/realize.hpp"

using namespace pinf;

namespace {

long reduce_mod(long v, long m) { return m >= 2 ? ((v % m) + m) % m : v; }

bool well_defined(long n, long m, long mult) {
  try {
    HomSpec{n, m, canonical_multiplier(mult, m)}.validate();
    return true;
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace

TEST(Realize, ConstructionSelection) {
  EXPECT_EQ((HomSpec{2, 4, 2}).construction(), 1);
  EXPECT_EQ((HomSpec{0, 3, 1}).construction(), 2);
  EXPECT_EQ((HomSpec{0, 0, 2}).construction(), 2);
  EXPECT_EQ((HomSpec{0, 0, 0}).construction(), 3);
  EXPECT_EQ((HomSpec{3, 0, 0}).construction(), 4);
  EXPECT_EQ((HomSpec{2, 4, 2}).h(), 1);
  EXPECT_EQ((HomSpec{3, 3, 2}).h(), 2);
  EXPECT_THROW((HomSpec{0, 0, 1}).h(), InputError);
}

TEST(Realize, InvalidSpecsAreRejected) {
  EXPECT_THROW((HomSpec{1, 2, 1}).validate(), InputError);
  EXPECT_THROW((HomSpec{2, 1, 1}).validate(), InputError);
  EXPECT_THROW((HomSpec{2, 4, 1}).validate(), InputError);
  EXPECT_THROW((HomSpec{2, 0, 1}).validate(), InputError);
  EXPECT_THROW((HomSpec{2, 3, 0}).validate(), InputError);
  EXPECT_THROW((HomSpec{2, 3, 4}).validate(), InputError);
  EXPECT_EQ(canonical_multiplier(-1, 3), 2);
  EXPECT_EQ(canonical_multiplier(6, 3), 3);
  EXPECT_EQ(canonical_multiplier(-2, 0), -2);
}

TEST(Realize, AllConstructionsVerify) {
  std::vector<HomSpec> specs{{2, 2, 2}, {2, 4, 2}, {3, 3, 1}, {4, 2, 1}, {0, 2, 1}, {0, 3, 2},
                             {0, 0, 1}, {0, 0, -2}, {0, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}};
  for (const HomSpec& s : specs) {
    GeneratorMatrices g = build_generators(s);
    EXPECT_EQ(g.construction, s.construction());
    VerificationReport rep = verify_generators(g);
    EXPECT_TRUE(rep.all_pass()) << s.to_string() << ": " << rep.first_failure().value_or("");
    EXPECT_EQ(g.quotient, s.m >= 2);
    EXPECT_EQ(g.a.size(), g.b.size());
    VerificationReport bad = verify_generators(tampered(g));
    ASSERT_FALSE(bad.all_pass()) << s.to_string();
    EXPECT_EQ(*bad.first_failure(), "A0*B0 = E");
  }
}

TEST(Realize, SumIdentityAppliesToFiniteSourcesOnly) {
  auto finite = verify_generators(build_generators({3, 3, 1}));
  auto infinite = verify_generators(build_generators({0, 3, 1}));
  auto find = [](const VerificationReport& r) {
    for (const auto& c : r.checks)
      if (c.name == "sum B_i*A_i = E") return c;
    return IdentityCheck{};
  };
  EXPECT_TRUE(find(finite).applicable);
  EXPECT_TRUE(find(finite).pass);
  EXPECT_FALSE(find(infinite).applicable);
}

TEST(Realize, FieldWithoutIndeterminateIsRefused) {
  EXPECT_THROW(build_generators({2, 2, 1}, Field::rationals()), InputError);
  EXPECT_NO_THROW(build_generators({2, 2, 2}, Field::rational_functions(2), 2));
}

TEST(Realize, SigmaSpotChecks) {
  Random r(81);
  for (HomSpec s : std::vector<HomSpec>{{2, 2, 2}, {3, 3, 1}, {0, 2, 1}, {0, 0, 1}}) {
    GeneratorMatrices g = build_generators(s);
    Domain zd{Field::rationals(), g.a.size(), false};
    for (int k = 0; k < 4; ++k) {
      std::size_t rows = static_cast<std::size_t>(r.integer(1, 2));
      std::vector<std::vector<FreeElem>> p(rows, std::vector<FreeElem>(rows, FreeElem::zero(zd)));
      for (auto& row : p)
        for (auto& v : row) v = r.polynomial(zd, 2, 2, true);
      SigmaCertificate c = spot_check_sigma_prime(g, p);
      ASSERT_TRUE(c.ok()) << s.to_string();
      EXPECT_EQ(c.rows, rows * g.size);
    }
  }
  GeneratorMatrices g = build_generators({2, 2, 2});
  Domain zd{Field::rationals(), g.a.size(), false};
  std::vector<std::vector<FreeElem>> with_constant{{FreeElem::one(zd)}};
  EXPECT_THROW(spot_check_sigma_prime(g, with_constant), InputError);
  EXPECT_THROW(spot_check_sigma_prime(build_generators({3, 0, 0}), {{FreeElem::zero(zd)}}), InputError);
}

TEST(Realize, PlannerOnRandomChains) {
  Random r(82);
  const long tags[] = {2, 3, 4, 0};
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t len = static_cast<std::size_t>(r.integer(2, 4));
    std::vector<CyclicGroup> groups;
    std::vector<std::vector<std::vector<long>>> maps;
    CyclicGroup g0;
    std::size_t k0 = static_cast<std::size_t>(r.integer(1, 2));
    for (std::size_t i = 0; i < k0; ++i) {
      g0.cyclic.push_back(tags[r.index(4)]);
      g0.u.push_back(reduce_mod(r.integer(0, 3), g0.cyclic.back()));
    }
    groups.push_back(g0);
    for (std::size_t t = 1; t < len; ++t) {
      const CyclicGroup& prev = groups.back();
      CyclicGroup next;
      std::size_t k = static_cast<std::size_t>(r.integer(1, 2));
      for (std::size_t j = 0; j < k; ++j) next.cyclic.push_back(tags[r.index(4)]);
      std::vector<std::vector<long>> map(k, std::vector<long>(prev.cyclic.size(), 0));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < prev.cyclic.size(); ++i) {
          long mult;
          do mult = r.integer(-2, 4);
          while (!well_defined(prev.cyclic[i], next.cyclic[j], mult));
          map[j][i] = mult;
        }
      for (std::size_t j = 0; j < k; ++j) {
        long v = 0;
        for (std::size_t i = 0; i < prev.cyclic.size(); ++i) v += map[j][i] * prev.u[i];
        next.u.push_back(reduce_mod(v, next.cyclic[j]));
      }
      groups.push_back(next);
      maps.push_back(map);
    }
    ChainPlan plan = plan_chain(groups, maps);
    ASSERT_EQ(plan.steps.size(), len - 1);
    for (const ChainStep& st : plan.steps) {
      ASSERT_TRUE(st.matches_transition);
      ASSERT_TRUE(st.u_compatible);
      EXPECT_EQ(st.field, st.step == 0 ? "Q(t1)" : st.step == 1 ? "Q(t1,t2)" : "Q(t1,t2,t3)");
      for (std::size_t j = 0; j < st.specs.size(); ++j)
        for (std::size_t i = 0; i < st.specs[j].size(); ++i) {
          const HomSpec& s = st.specs[j][i];
          ASSERT_NO_THROW(s.validate());
          long m = groups[st.step + 1].cyclic[j];
          ASSERT_EQ(reduce_mod(st.rebuilt[j][i] - maps[st.step][j][i], m), 0);
        }
    }
  }
  CyclicGroup a{{2}, {1}}, b{{4}, {1}};
  EXPECT_THROW(plan_chain({a, b}, {{{2}}}), InputError);
  EXPECT_THROW(plan_chain({a, b}, {{{1}}}), InputError);
  EXPECT_THROW(plan_chain({a, b}, {}), InputError);
}
