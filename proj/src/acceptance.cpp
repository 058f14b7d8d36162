#include "pinf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "pinf/kzero.hpp"
#include "pinf/leavitt.hpp"
#include "pinf/random.hpp"
#include "pinf/ratseries.hpp"
#include "pinf/realize.hpp"
#include "pinf/skewring.hpp"
#include "pinf/truncseries.hpp"

namespace pinf {

namespace {

using S = SkewElem<LinRep>;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Domain q_domain(std::size_t letters) { return Domain{Field::rationals(), letters, false}; }

Outcome k0_family(Random&) {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    auto p = MonoidPresentation::parse("I | " + std::to_string(n) + "I=I");
    AbGroup g = grothendieck_group(p);
    bool ok;
    if (n == 2) {
      ok = g.invariant_factors.empty();
    } else {
      ok = g.invariant_factors.size() == 1 && g.invariant_factors[0] == n - 1 && g.images.size() == 1 &&
           g.images[0].size() == 1 && g.images[0][0] == 1;
    }
    if (!ok) o.fail("<I | " + std::to_string(n) + "I=I> gave " + g.to_string());
  }
  for (int n = 2; n <= 6; ++n) {
    auto p = MonoidPresentation::parse("I, P | I = " + std::to_string(n) + "I + P");
    AbGroup g = grothendieck_group(p);
    if (!(g.invariant_factors.size() == 1 && g.invariant_factors[0] == 0))
      o.fail("<I,P | I = " + std::to_string(n) + "I + P> gave " + g.to_string());
  }
  if (o.pass) o.detail = "Z/(n-1) for n = 2..12 (trivial for n = 2), Z for the U family";
  return o;
}

Outcome skew_relations(Random&) {
  Outcome o;
  const Domain d = q_domain(3);
  const S one = S::one(d), zero = S::zero(d), e = S::idempotent(d);
  S total = e;
  for (Letter i = 0; i < 3; ++i) {
    for (Letter j = 0; j < 3; ++j)
      if (!(S::x(d, i) * S::y(d, j)).equals(i == j ? one : zero))
        o.fail("x" + std::to_string(i) + "*y" + std::to_string(j));
    if (!(e * S::y(d, i)).is_zero()) o.fail("e*y" + std::to_string(i) + " != 0");
    if (!(S::x(d, i) * e).is_zero()) o.fail("x" + std::to_string(i) + "*e != 0");
    total = total + S::y(d, i) * S::x(d, i);
  }
  if (!(e * e).equals(e)) o.fail("e^2 != e");
  if (!total.equals(one)) o.fail("e + sum y_i x_i != 1");
  if (o.pass) o.detail = "x_i y_j = delta_ij, e^2 = e, e y_j = x_j e = 0, e + sum y_i x_i = 1";
  return o;
}

Outcome derivation_law(Random& r) {
  Outcome o;
  const std::vector<Field> fields{Field::rationals(), Field::prime(7), Field::rational_functions(1)};
  for (const Field& f : fields) {
    Domain d{f, 2, false};
    for (int k = 0; k < 100; ++k) {
      LinRep a = r.nonzero_series(d, 3), b = r.nonzero_series(d, 3);
      LinRep ab = a * b;
      for (Letter i = 0; i < 2; ++i) {
        LinRep lhs = ab.transduce(i);
        LinRep rhs = a.transduce(i).scaled(b.constant_term()) + a * b.transduce(i);
        if (!(lhs == rhs)) o.fail(f.name() + ": pair " + std::to_string(k) + ", letter " + std::to_string(i));
      }
    }
  }
  if (o.pass) o.detail = "300 pairs, both letters, exact equivalence";
  return o;
}

Outcome backend_agreement(Random& r) {
  Outcome o;
  const Domain d = q_domain(2);
  const int length = 12;
  std::size_t words = 0;
  for (int k = 0; k < 100 && o.pass; ++k) {
    auto tree = SeriesTree::random(r, d, 5);
    LinRep exact = tree->exact(d);
    TruncSeries approx = tree->truncated(d, length);
    if (approx.precision() < length) {
      o.fail("tree " + std::to_string(k) + " lost precision");
      break;
    }
    // All words of length < 12 over two letters.
    for (int len = 0; len < length && o.pass; ++len)
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        std::vector<Letter> w(static_cast<std::size_t>(len));
        for (int p = 0; p < len; ++p) w[static_cast<std::size_t>(p)] = (bits >> p) & 1u;
        Word ww(w);
        ++words;
        if (!(exact.coefficient(ww) == approx.coefficient(ww))) {
          o.fail("tree " + std::to_string(k) + " " + tree->to_string() + " differs at " + ww.to_string('x'));
          break;
        }
      }
  }
  if (o.pass) o.detail = std::to_string(words) + " coefficients compared";
  return o;
}

Outcome membership(Random& r) {
  Outcome o;
  const Domain d = q_domain(3);
  const S e = S::idempotent(d);
  for (int k = 0; k < 200; ++k) {
    S a = S::zero(d);
    long terms = r.integer(1, 3);
    for (long t = 0; t < terms; ++t)
      a = a + S::y_word(d, r.word(3, 3)) * e * S::coeff(r.series(d, 3));
    if (!ideal_member(a).value) o.fail("sum y_I e r sample " + std::to_string(k) + " not in I");
  }
  for (int k = 0; k < 200; ++k) {
    LinRep c = r.nonzero_series(d, 3);
    if (ideal_member(S::coeff(c)).value) o.fail("coefficient sample " + std::to_string(k) + " in I");
  }
  if (o.pass) o.detail = "200 ideal elements accepted, 200 nonzero coefficients rejected";
  return o;
}

Outcome witnesses(Random& r) {
  Outcome o;
  const Domain d = q_domain(3);
  int done = 0;
  while (done < 100) {
    S a = r.skew(d, 3, 3, 2);
    if (ideal_member(a).value) continue;
    auto w = t_witness(a);
    if (!t_equal(S::x_word(d, w.m) * a * w.g, S::one(d)).value) o.fail("t_witness sample " + std::to_string(done));
    ++done;
  }
  const Field q = Field::rationals();
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    done = 0;
    while (done < 100) {
      UElem a = v_normal_form(r.uelem(q, n, 3, 3));
      if (a.is_zero()) continue;
      auto w = v_witness(a);
      if (!(v_normal_form(w.beta * a * w.gamma) == UElem::one(q, n)))
        o.fail("v_witness n=" + std::to_string(n) + " sample " + std::to_string(done));
      ++done;
    }
  }
  done = 0;
  while (done < 50) {
    UElem a = r.uelem(q, 3, 3, 3, true);
    if (a.is_zero()) continue;
    auto w = uinf_witness(a);
    if (!(w.beta * a * w.gamma == UElem::one(q, 3, true))) o.fail("uinf_witness sample " + std::to_string(done));
    ++done;
  }
  if (o.pass) o.detail = "100 T witnesses, 200 V witnesses, 50 U_inf witnesses verified";
  return o;
}

Outcome inverting_words(Random& r) {
  Outcome o;
  const Domain d = q_domain(3);
  auto product = [&](const LinRep& a, const Word& w) { return S::coeff(a) * S::y_word(d, w); };
  for (int k = 0; k < 100; ++k) {
    LinRep a = r.nonzero_series(d, 6, 0.3);
    auto res = inverting_y_word<LinRep>({a});
    S p = product(a, res.w);
    if (p.y_degree().value_or(0) != 0 || p.coefficient(Word()).constant_term().is_zero())
      o.fail("single input " + std::to_string(k));
  }
  for (int k = 0; k < 100; ++k) {
    std::vector<LinRep> rs;
    for (int j = 0; j < 3; ++j) rs.push_back(r.nonzero_series(d, 6, 0.3));
    auto res = inverting_y_word<LinRep>(rs);
    for (std::size_t j = 0; j < rs.size(); ++j) {
      S p = product(rs[j], res.w);
      if (p.y_degree().value_or(0) != 0) o.fail("triple " + std::to_string(k) + ": product left R");
      if (j == res.index && p.coefficient(Word()).constant_term().is_zero())
        o.fail("triple " + std::to_string(k) + ": chosen product not invertible");
    }
  }
  if (o.pass) o.detail = "100 single and 100 triple inputs";
  return o;
}

Outcome word_systems(Random&) {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const Domain d = q_domain(n + 1);
    std::vector<Word> ws;
    std::vector<S> qs;
    for (Letter i = 0; i <= n; ++i) {
      ws.push_back(Word{i});
      qs.push_back(S::x(d, i));
    }
    auto rep = verify_word_system(ws, qs, n);
    if (!rep.valid || rep.residue != 1) o.fail("canonical system rejected for n=" + std::to_string(n));

    auto expect = [&](const std::vector<Word>& w, const std::vector<S>& q, const std::string& violation) {
      auto bad = verify_word_system(w, q, n);
      bool named = false;
      for (const auto& v : bad.violations) named = named || v == violation;
      if (bad.valid || !named) o.fail("n=" + std::to_string(n) + ": expected violation '" + violation + "'");
    };
    expect({Word{0}, Word{0}}, {S::x(d, 0), S::x(d, 0)}, "q_1 w_2 != 0");
    expect(std::vector<Word>(ws.begin(), ws.end() - 1), std::vector<S>(qs.begin(), qs.end() - 1), "sum w_i q_i != 1");
    std::vector<S> zeroed = qs;
    zeroed[0] = S::zero(d);
    expect(ws, zeroed, "q_1 w_1 == 0");
  }
  if (o.pass) o.detail = "canonical systems valid with s = 1 (mod n); tampered systems named";
  return o;
}

std::vector<HomSpec> legal_grid() {
  std::vector<HomSpec> out;
  for (long n : {0L, 2L, 3L, 4L})
    for (long m : {0L, 2L, 3L, 4L}) {
      std::vector<long> ls;
      if (m >= 2) {
        if (n == 0) {
          ls = {1, 2};
        } else {
          for (long l = 1; l <= m; ++l) ls.push_back(l);
        }
      } else if (n == 0) {
        ls = {1, 2, 0, -1, -2};
      } else {
        ls = {0};
      }
      for (long l : ls) {
        HomSpec s{n, m, l};
        try {
          s.validate();
        } catch (const InputError&) {
          continue;
        }
        if (s.construction() == 4 && n > 3) continue;
        out.push_back(s);
      }
    }
  return out;
}

Outcome generator_grid(Random&) {
  Outcome o;
  std::map<int, int> per_case;
  for (const HomSpec& s : legal_grid()) {
    auto g = build_generators(s);
    auto rep = verify_generators(g);
    if (!rep.all_pass()) o.fail(s.to_string() + ": " + *rep.first_failure());
    auto bad = verify_generators(tampered(g));
    if (bad.all_pass() || *bad.first_failure() != "A0*B0 = E") o.fail(s.to_string() + ": tampered input accepted");
    ++per_case[g.construction];
  }
  if (o.pass) {
    std::ostringstream os;
    os << "instances per construction:";
    for (auto [c, k] : per_case) os << " " << c << ":" << k;
    o.detail = os.str();
  }
  return o;
}

Outcome sigma_spot_checks(Random& r) {
  Outcome o;
  int certs = 0;
  for (const HomSpec& s : legal_grid()) {
    int c = s.construction();
    if (c != 1 && c != 2) continue;
    auto g = build_generators(s);
    Domain zd = q_domain(g.a.size());
    for (int k = 0; k < 5; ++k) {
      std::size_t rr = static_cast<std::size_t>(r.integer(1, 2));
      std::vector<std::vector<FreeElem>> p(rr, std::vector<FreeElem>(rr, FreeElem::zero(zd)));
      for (auto& row : p)
        for (auto& v : row) v = r.polynomial(zd, 2, 2, true);
      auto cert = spot_check_sigma_prime(g, p);
      if (!cert.ok()) o.fail(s.to_string() + ": certificate failed for sample " + std::to_string(k));
      ++certs;
    }
  }
  if (o.pass) o.detail = std::to_string(certs) + " certificates verified";
  return o;
}

std::vector<std::vector<long>> mat_mul(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
  std::vector<std::vector<long>> c(a.size(), std::vector<long>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Outcome chain_planner(Random&) {
  Outcome o;
  CyclicGroup g{{2, 0}, {1, 1}};
  std::vector<CyclicGroup> groups(4, g);
  std::vector<std::vector<std::vector<long>>> maps(3, {{1, 0}, {0, 1}});
  ChainPlan plan = plan_chain(groups, maps);
  const int expected[2][2] = {{1, 2}, {4, 2}};  // [target][source]
  std::vector<std::vector<long>> composed{{1, 0}, {0, 1}}, given = composed;
  int verified = 0;
  for (const ChainStep& st : plan.steps) {
    if (!st.matches_transition || !st.u_compatible) o.fail("step " + std::to_string(st.step) + " inconsistent");
    composed = mat_mul(st.rebuilt, composed);
    given = mat_mul(maps[st.step], given);
    Field f = Field::rational_functions(static_cast<int>(st.step) + 1);
    for (std::size_t j = 0; j < st.specs.size(); ++j)
      for (std::size_t i = 0; i < st.specs[j].size(); ++i) {
        const HomSpec& s = st.specs[j][i];
        if (s.construction() != expected[j][i])
          o.fail("step " + std::to_string(st.step) + ": " + s.to_string() + " uses construction " +
                 std::to_string(s.construction()));
        auto gm = build_generators(s, s.construction() == 1 || s.construction() == 4 ? std::optional<Field>(f)
                                                                                       : std::nullopt,
                                   static_cast<int>(st.step) + 1);
        if (!verify_generators(gm).all_pass()) o.fail("step " + std::to_string(st.step) + ": " + s.to_string());
        ++verified;
      }
  }
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) {
      long m = g.cyclic[j];
      long a = composed[j][i], b = given[j][i];
      if (m >= 2 ? ((a - b) % m + m) % m != 0 : a != b) o.fail("composite transition differs");
    }
  if (o.pass) o.detail = std::to_string(plan.steps.size()) + " steps, " + std::to_string(verified) + " specs verified";
  return o;
}

Outcome monoid_shape(Random&) {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    auto p = MonoidPresentation::parse("g | " + std::to_string(n) + "g=g");
    auto rep = analyze_pisr_shape(p, 64);
    AbGroup k0 = grothendieck_group(p);
    bool group_ok = n == 2 ? k0.invariant_factors.empty()
                           : k0.invariant_factors.size() == 1 && k0.invariant_factors[0] == n - 1;
    if (rep.overflow || !rep.conical.value_or(false) || !rep.simple.value_or(false) ||
        !rep.nonzero_group.value_or(false) || !rep.matches_k0.value_or(false) || !group_ok ||
        rep.elements != static_cast<std::size_t>(n))
      o.fail("<g | " + std::to_string(n) + "g=g>: " + rep.shape());
  }
  if (o.pass) o.detail = "conical, simple, nonzero part = Z/(n-1) = K0 for n = 2..6";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  Outcome (*run)(Random&);
};

const Criterion kCriteria[] = {
    {1, "K0 of Leavitt algebras", 1, k0_family},
    {2, "skew relations", 1, skew_relations},
    {3, "derivation law", 10, derivation_law},
    {4, "backend agreement", 30, backend_agreement},
    {5, "ideal membership", 60, membership},
    {6, "witness soundness", 120, witnesses},
    {7, "Y-word making series invertible", 10, inverting_words},
    {8, "word system verifier", 5, word_systems},
    {9, "generator matrix grid", 300, generator_grid},
    {10, "invertibility spot checks", 120, sigma_spot_checks},
    {11, "chain planner", 120, chain_planner},
    {12, "monoid shape", 1, monoid_shape},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only, std::ostream* log) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult res;
    res.id = c.id;
    res.name = c.name;
    res.limit_seconds = c.limit;
    Random rng(seed + static_cast<std::uint64_t>(c.id));
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(rng);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.pass = o.pass && res.seconds < c.limit;
    res.detail = o.detail;
    if (o.pass && !res.pass) res.detail += " (time limit exceeded)";
    if (log) *log << format_result(res) << std::endl;
    out.push_back(std::move(res));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  " << r.name << "  ["
     << std::fixed << std::setprecision(2) << r.seconds << "s / " << std::setprecision(0) << r.limit_seconds
     << "s]  " << r.detail;
  return os.str();
}

}  // namespace pinf
