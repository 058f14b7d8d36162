#include "pinf/realize.hpp"

#include <sstream>

namespace pinf {

SkewMatrix skew_zero(const Domain& d, std::size_t size) {
  return SkewMatrix(size, std::vector<Skew>(size, Skew::zero(d)));
}

SkewMatrix skew_identity(const Domain& d, std::size_t size) {
  SkewMatrix m = skew_zero(d, size);
  for (std::size_t i = 0; i < size; ++i) m[i][i] = Skew::one(d);
  return m;
}

SkewMatrix operator*(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) throw Mismatch("matrix shape mismatch");
  const Domain& d = a.front().front().domain();
  SkewMatrix out(a.size(), std::vector<Skew>(b.front().size(), Skew::zero(d)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j)
        if (!b[k][j].is_zero()) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.size() != b.size()) throw Mismatch("matrix shape mismatch");
  SkewMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw Mismatch("matrix shape mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] + b[i][j];
  }
  return out;
}

// ---------------------------------------------------------------- HomSpec

void HomSpec::validate() const {
  auto tag = [](long v, const char* what) {
    if (v < 0 || v == 1)
      throw InputError(std::string(what) + " must be 0 (for Z) or at least 2, got " + std::to_string(v));
  };
  tag(n, "source");
  tag(m, "target");
  if (m >= 2) {
    if (mult < 1 || mult > m)
      throw InputError("multiplier into Z/" + std::to_string(m) + " must lie in 1.." + std::to_string(m));
    if ((mult * n) % m != 0)
      throw InputError("multiplication by " + std::to_string(mult) + " is not well defined from Z/" +
                       std::to_string(n) + " to Z/" + std::to_string(m));
  } else if (n >= 2 && mult != 0) {
    throw InputError("the only homomorphism Z/" + std::to_string(n) + " -> Z is 0");
  }
}

int HomSpec::construction() const {
  validate();
  if (n >= 2 && m >= 2) return 1;
  if (n == 0) return mult > 0 ? 2 : 3;
  return 4;
}

long HomSpec::h() const {
  if (m < 2) throw InputError("h is defined only for finite targets");
  return mult * n / m;
}

std::string HomSpec::to_string() const {
  auto g = [](long v) { return v == 0 ? std::string("Z") : "Z/" + std::to_string(v); };
  return g(n) + " -> " + g(m) + " by " + std::to_string(mult);
}

long canonical_multiplier(long mult, long m) {
  if (m < 2) return mult;
  long r = ((mult % m) + m) % m;
  return r == 0 ? m : r;
}

// ---------------------------------------------------------------- construction

namespace {

Skew x_term(const Domain& d, const Word& w, const Scalar& c) {
  return Skew::coeff(word_coefficient<LinRep>(d, w).scaled(c));
}

Skew x_term(const Domain& d, const Word& w) { return x_term(d, w, Scalar::one(d.field)); }

// 1 - sum_{i=0}^{k} y_i x_i
Skew truncated_idempotent(const Domain& d, std::size_t k) {
  Skew e = Skew::one(d);
  for (Letter i = 0; i <= k; ++i) e = e - Skew::y(d, i) * Skew::x(d, i);
  return e;
}

SkewMatrix diagonal(const Domain& d, std::size_t size, const Skew& v) {
  SkewMatrix m = skew_zero(d, size);
  for (std::size_t i = 0; i < size; ++i) m[i][i] = v;
  return m;
}

void build_finite_to_finite(GeneratorMatrices& g, const Field& f, int t_index) {
  const long n = g.spec.n, m = g.spec.m, l = g.spec.mult, h = g.spec.h();
  Domain d{f, static_cast<std::size_t>(m + 1), false};
  g.domain = d;
  g.quotient = true;
  g.size = static_cast<std::size_t>(l);

  std::vector<Word> xs{Word::power(0, h)};
  for (long k = h - 1; k >= 0; --k)
    for (long p = 1; p <= m; ++p) xs.push_back(Word{static_cast<Letter>(p)} + Word::power(0, k));

  const Scalar t = Scalar::indeterminate(f, t_index);
  const Skew tt = Skew::scalar(d, t), ti = Skew::scalar(d, t.inverse());
  const std::size_t L = g.size;

  SkewMatrix a0 = diagonal(d, L, tt), b0 = diagonal(d, L, ti);
  a0[L - 1][L - 1] = x_term(d, xs[0]);
  b0[L - 1][L - 1] = Skew::y_word(d, xs[0].reversed());
  g.a.push_back(a0);
  g.b.push_back(b0);
  for (long i = 1; i <= n; ++i) {
    SkewMatrix ai = skew_zero(d, L), bi = skew_zero(d, L);
    for (std::size_t al = 0; al < L; ++al) {
      const Word& w = xs[static_cast<std::size_t>(i - 1) * L + al + 1];
      ai[al][L - 1] = x_term(d, w);
      bi[L - 1][al] = Skew::y_word(d, w.reversed());
    }
    g.a.push_back(ai);
    g.b.push_back(bi);
  }
  for (long i = 0; i <= n; ++i) g.labels.push_back(static_cast<std::size_t>(i));
  g.e = skew_identity(d, L);
}

void build_integer_positive(GeneratorMatrices& g, const Field& f) {
  const long m = g.spec.m;
  Domain d = m >= 2 ? Domain{f, static_cast<std::size_t>(m + 1), false} : Domain{f, 2, true};
  g.domain = d;
  g.quotient = m >= 2;
  g.size = static_cast<std::size_t>(g.spec.mult);
  for (std::size_t i = 0; i < 4; ++i) {
    Word xw = Word{0} + Word::power(1, i);
    g.a.push_back(diagonal(d, g.size, x_term(d, xw)));
    g.b.push_back(diagonal(d, g.size, Skew::y_word(d, xw.reversed())));
    g.labels.push_back(i);
  }
  g.e = skew_identity(d, g.size);
}

void build_integer_nonpositive(GeneratorMatrices& g, const Field& f) {
  const std::size_t k = static_cast<std::size_t>(-g.spec.mult);
  Domain d{f, k + 2, true};
  g.domain = d;
  g.quotient = false;
  g.size = 1;
  Skew e = truncated_idempotent(d, k);
  for (std::size_t i = 0; i < 4; ++i) {
    Letter idx = static_cast<Letter>(k + 1 + i);
    g.a.push_back({{e * Skew::x(d.covering(idx), idx)}});
    g.b.push_back({{Skew::y(d.covering(idx), idx) * e}});
    g.labels.push_back(i);
  }
  g.e = {{e}};
}

void build_finite_to_integer(GeneratorMatrices& g, const Field& f, int t_index) {
  const std::size_t n = static_cast<std::size_t>(g.spec.n);
  Domain d{f, n + 1, true};
  g.domain = d;
  g.quotient = false;
  g.size = n + 1;
  const Scalar t = Scalar::indeterminate(f, t_index);
  Skew e = truncated_idempotent(d, n);
  Skew te = e.scaled(t), tie = e.scaled(t.inverse());

  SkewMatrix a0 = diagonal(d, n + 1, Skew::x(d, 0)), b0 = diagonal(d, n + 1, Skew::y(d, 0));
  a0[0][0] = te;
  b0[0][0] = tie;
  g.a.push_back(a0);
  g.b.push_back(b0);
  for (std::size_t i = 1; i <= n; ++i) {
    SkewMatrix ai = skew_zero(d, n + 1), bi = skew_zero(d, n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
      ai[r][i] = r == 0 ? te : Skew::x(d, static_cast<Letter>(r));
      bi[i][r] = r == 0 ? tie : Skew::y(d, static_cast<Letter>(r));
    }
    g.a.push_back(ai);
    g.b.push_back(bi);
  }
  for (std::size_t i = 0; i <= n; ++i) g.labels.push_back(i);
  g.e = diagonal(d, n + 1, Skew::one(d));
  g.e[0][0] = e;
}

}  // namespace

GeneratorMatrices build_generators(const HomSpec& spec, std::optional<Field> field, int t_index) {
  GeneratorMatrices g;
  g.spec = spec;
  g.construction = spec.construction();
  const bool needs_t = g.construction == 1 || g.construction == 4;
  Field f = field ? *field : (needs_t ? Field::rational_functions(t_index) : Field::rationals());
  switch (g.construction) {
    case 1:
      build_finite_to_finite(g, f, t_index);
      break;
    case 2:
      build_integer_positive(g, f);
      break;
    case 3:
      build_integer_nonpositive(g, f);
      break;
    default:
      build_finite_to_integer(g, f, t_index);
      break;
  }
  return g;
}

GeneratorMatrices tampered(GeneratorMatrices g) {
  if (g.b.size() < 2) throw InputError("at least two generators are needed to tamper");
  std::swap(g.b[0], g.b[1]);
  return g;
}

// ---------------------------------------------------------------- verification

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

std::optional<std::string> VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return c.name;
  return std::nullopt;
}

bool matrices_equal(const SkewMatrix& a, const SkewMatrix& b, bool quotient) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (quotient ? !t_equal(a[i][j], b[i][j]).value : !a[i][j].equals(b[i][j])) return false;
    }
  }
  return true;
}

namespace {

std::string first_mismatch(const SkewMatrix& a, const SkewMatrix& b, bool quotient) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      bool eq = quotient ? t_equal(a[i][j], b[i][j]).value : a[i][j].equals(b[i][j]);
      if (!eq)
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + a[i][j].to_string() +
               " vs " + b[i][j].to_string();
    }
  return "";
}

}  // namespace

VerificationReport verify_generators(const GeneratorMatrices& g) {
  VerificationReport rep;
  const SkewMatrix zero = skew_zero(g.domain, g.size);
  auto check = [&](const std::string& name, const SkewMatrix& lhs, const SkewMatrix& rhs) {
    IdentityCheck c;
    c.name = name;
    c.pass = matrices_equal(lhs, rhs, g.quotient);
    if (!c.pass) c.detail = first_mismatch(lhs, rhs, g.quotient);
    rep.checks.push_back(std::move(c));
  };
  auto lab = [&](std::size_t k) { return std::to_string(g.labels[k]); };

  for (std::size_t i = 0; i < g.a.size(); ++i)
    for (std::size_t j = 0; j < g.b.size(); ++j)
      check("A" + lab(i) + "*B" + lab(j) + (i == j ? " = E" : " = 0"), g.a[i] * g.b[j], i == j ? g.e : zero);

  if (g.spec.n >= 2) {
    SkewMatrix total = zero;
    for (std::size_t i = 0; i < g.a.size(); ++i) total = total + g.b[i] * g.a[i];
    check("sum B_i*A_i = E", total, g.e);
  } else {
    rep.checks.push_back({"sum B_i*A_i = E", true, false, "not applicable: the source Z has infinitely many generators"});
  }

  check("E*E = E", g.e * g.e, g.e);
  for (std::size_t i = 0; i < g.a.size(); ++i) check("E*A" + lab(i) + "*E = A" + lab(i), g.e * g.a[i] * g.e, g.a[i]);
  for (std::size_t j = 0; j < g.b.size(); ++j) check("E*B" + lab(j) + "*E = B" + lab(j), g.e * g.b[j] * g.e, g.b[j]);
  return rep;
}

// ---------------------------------------------------------------- Sigma' spot check

SigmaCertificate spot_check_sigma_prime(const GeneratorMatrices& g, const std::vector<std::vector<FreeElem>>& p) {
  if (g.construction != 1 && g.construction != 2)
    throw InputError("the spot check applies to the first two constructions only");
  const std::size_t r = p.size();
  if (r == 0) throw InputError("empty polynomial matrix");
  for (const auto& row : p)
    if (row.size() != r) throw InputError("polynomial matrix must be square");
  const std::size_t L = g.size, N = L * r;

  SkewMatrix big = skew_zero(g.domain, N);
  for (std::size_t bi = 0; bi < r; ++bi)
    for (std::size_t bj = 0; bj < r; ++bj) {
      const FreeElem& q = p[bi][bj];
      if (!q.constant_term().is_zero()) throw InputError("polynomials must have zero constant term");
      SkewMatrix block = skew_zero(g.domain, L);
      for (const auto& [w, c] : q.terms()) {
        SkewMatrix prod = skew_identity(g.domain, L);
        for (Letter z : w) {
          if (z >= g.a.size())
            throw InputError("variable Z" + std::to_string(z) + " has no generator matrix");
          prod = prod * g.a[z];
        }
        Scalar cc = Scalar::from_rational(g.domain.field, c.rational());
        for (auto& rowv : prod)
          for (auto& v : rowv) v = v.scaled(cc);
        block = block + prod;
      }
      for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j) big[bi * L + i][bj * L + j] = block[i][j];
    }

  SigmaCertificate cert;
  cert.rows = N;
  cert.matrix.assign(N, std::vector<LinRep>(N, LinRep::zero(g.domain)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Skew& v = big[i][j];
      if (v.y_degree().value_or(0) != 0) throw Error("internal: entry left the coefficient ring");
      cert.matrix[i][j] = v.coefficient(Word());
      if (i == j) cert.matrix[i][j] = cert.matrix[i][j] + LinRep::one(g.domain);
    }
  cert.inverse = invert_matrix_series(cert.matrix);
  cert.right_identity = is_identity(multiply(cert.matrix, cert.inverse));
  cert.left_identity = is_identity(multiply(cert.inverse, cert.matrix));
  return cert;
}

// ---------------------------------------------------------------- chains

ChainPlan plan_chain(const std::vector<CyclicGroup>& groups, const std::vector<std::vector<std::vector<long>>>& maps) {
  if (groups.empty()) throw InputError("at least one group is required");
  if (maps.size() + 1 != groups.size())
    throw InputError("expected " + std::to_string(groups.size() - 1) + " maps for " + std::to_string(groups.size()) +
                     " groups");
  for (std::size_t t = 0; t < groups.size(); ++t) {
    const CyclicGroup& G = groups[t];
    if (G.cyclic.empty()) throw InputError("group " + std::to_string(t) + " has no factors");
    if (G.u.size() != G.cyclic.size())
      throw InputError("group " + std::to_string(t) + ": u has the wrong number of coordinates");
    for (long c : G.cyclic)
      if (c < 0 || c == 1) throw InputError("group " + std::to_string(t) + ": cyclic tags must be 0 or >= 2");
  }

  ChainPlan plan;
  plan.groups = groups;
  for (std::size_t t = 0; t < maps.size(); ++t) {
    const CyclicGroup &G = groups[t], &H = groups[t + 1];
    const auto& eta = maps[t];
    const std::string where = "map " + std::to_string(t) + ": ";
    if (eta.size() != H.cyclic.size()) throw InputError(where + "row count must match the target rank");
    for (const auto& row : eta)
      if (row.size() != G.cyclic.size()) throw InputError(where + "column count must match the source rank");

    ChainStep step;
    step.step = t;
    step.field = "Q(";
    for (std::size_t k = 1; k <= t + 1; ++k) step.field += (k > 1 ? ",t" : "t") + std::to_string(k);
    step.field += ")";
    step.specs.assign(H.cyclic.size(), {});
    step.rebuilt.assign(H.cyclic.size(), std::vector<long>(G.cyclic.size(), 0));
    step.matches_transition = true;
    step.u_compatible = true;

    for (std::size_t j = 0; j < H.cyclic.size(); ++j) {
      const long m = H.cyclic[j];
      long image = 0;
      for (std::size_t i = 0; i < G.cyclic.size(); ++i) {
        const long n = G.cyclic[i];
        const long e = eta[j][i];
        if (m == 0 && n >= 2 && e != 0)
          throw InputError(where + "component " + std::to_string(i) + " -> " + std::to_string(j) +
                           " is not well defined (a finite group maps to Z only by 0)");
        HomSpec s{n, m, canonical_multiplier(e, m)};
        try {
          s.validate();
        } catch (const InputError& err) {
          throw InputError(where + "component " + std::to_string(i) + " -> " + std::to_string(j) + ": " + err.what());
        }
        step.specs[j].push_back(s);
        long rebuilt = m >= 2 ? s.mult % m : s.mult;
        long given = m >= 2 ? ((e % m) + m) % m : e;
        step.rebuilt[j][i] = rebuilt;
        if (rebuilt != given) step.matches_transition = false;
        if (e == 0 && m >= 2)
          plan.notes.push_back("step " + std::to_string(t) + ": zero component " + std::to_string(i) + " -> " +
                               std::to_string(j) + " uses multiplier " + std::to_string(m));
        image += e * G.u[i];
      }
      bool ok = m >= 2 ? ((image - H.u[j]) % m + m) % m == 0 : image == H.u[j];
      if (!ok) step.u_compatible = false;
    }
    if (!step.u_compatible) throw InputError(where + "the distinguished element is not carried to the next one");
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

}  // namespace pinf
