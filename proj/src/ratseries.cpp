#include "pinf/ratseries.hpp"

#include <deque>
#include <functional>
#include <map>

namespace pinf {

namespace {

Matrix zero_matrix(const Field& f, std::size_t n) { return Matrix(f, n, n); }

// Keeps only the subspace reachable from the rows of init.
RepData forward_restrict(const RepData& r) {
  const Field& f = r.init.field();
  const std::size_t D = r.dim();
  RowSpan span(f, D);
  std::deque<Vector> queue;
  for (std::size_t i = 0; i < r.init.rows(); ++i) {
    Vector v = r.init.row_vector(i);
    if (span.insert(v)) queue.push_back(std::move(v));
  }
  while (!queue.empty() && span.size() < D) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : r.trans) {
      Vector u = v * t;
      if (span.insert(u)) queue.push_back(std::move(u));
    }
  }
  if (span.size() == D) return r;

  const auto& basis = span.basis();
  const std::size_t d = basis.size();
  RepData out;
  out.init = Matrix(f, r.init.rows(), d);
  for (std::size_t i = 0; i < r.init.rows(); ++i) {
    Vector c = span.coordinates(r.init.row_vector(i));
    for (std::size_t j = 0; j < d; ++j) out.init.at(i, j) = c[j];
  }
  for (const auto& t : r.trans) {
    Matrix m(f, d, d);
    for (std::size_t a = 0; a < d; ++a) {
      Vector c = span.coordinates(basis[a] * t);
      for (std::size_t b = 0; b < d; ++b) m.at(a, b) = c[b];
    }
    out.trans.push_back(std::move(m));
  }
  out.fin = Matrix(f, d, r.fin.cols());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < r.fin.cols(); ++j) {
      Scalar s = Scalar::zero(f);
      for (std::size_t k = 0; k < D; ++k)
        if (!basis[a][k].is_zero() && !r.fin.at(k, j).is_zero()) s += basis[a][k] * r.fin.at(k, j);
      out.fin.at(a, j) = s;
    }
  return out;
}

RepData transposed(const RepData& r) {
  RepData t;
  t.init = r.fin.transposed();
  t.fin = r.init.transposed();
  for (const auto& m : r.trans) t.trans.push_back(m.transposed());
  return t;
}

}  // namespace

RepData minimize(const RepData& r) { return transposed(forward_restrict(transposed(forward_restrict(r)))); }

Matrix evaluate(const RepData& r, const Word& w) {
  Matrix cur = r.init;
  for (Letter l : w) {
    if (l >= r.trans.size()) return Matrix(r.init.field(), r.init.rows(), r.fin.cols());
    cur = cur * r.trans[l];
  }
  return cur * r.fin;
}

// ---------------------------------------------------------------- LinRep

LinRep::LinRep(Domain d) : dom_(std::move(d)) {}

LinRep::LinRep(Domain d, Vector lambda, std::vector<Matrix> mu, Vector gamma)
    : dom_(std::move(d)), lambda_(std::move(lambda)), mu_(std::move(mu)), gamma_(std::move(gamma)) {
  if (gamma_.size() != lambda_.size()) throw Mismatch("initial and final vectors differ in length");
  for (const auto& m : mu_)
    if (m.rows() != lambda_.size() || m.cols() != lambda_.size())
      throw Mismatch("transition matrix has wrong size");
  if (mu_.size() > dom_.letters) dom_ = dom_.covering(mu_.size() - 1);
}

LinRep LinRep::constant(const Domain& d, const Scalar& c) {
  if (c.is_zero()) return LinRep(d);
  return LinRep(d, {c}, {}, {Scalar::one(d.field)});
}

LinRep LinRep::letter(const Domain& d, Letter i) {
  Domain dd = d.covering(i);
  std::vector<Matrix> mu(i + 1, zero_matrix(d.field, 2));
  mu[i].at(0, 1) = Scalar::one(d.field);
  return LinRep(dd, {Scalar::one(d.field), Scalar::zero(d.field)}, std::move(mu),
                {Scalar::zero(d.field), Scalar::one(d.field)});
}

LinRep LinRep::from_poly(const FreeElem& p) {
  const Domain& d = p.domain();
  const Field& f = d.field;
  if (p.is_zero()) return LinRep(d);
  // Prefix-tree automaton: one state per prefix of a support word.
  std::map<Word, std::size_t> state;
  state.emplace(Word(), 0);
  for (const auto& [w, c] : p.terms())
    for (std::size_t k = 1; k <= w.size(); ++k) state.try_emplace(w.take(k), state.size());
  const std::size_t n = state.size();
  std::size_t letters = d.letters;
  for (const auto& [w, c] : p.terms())
    if (!w.empty()) letters = std::max<std::size_t>(letters, w.max_letter() + 1);
  std::vector<Matrix> mu(letters, zero_matrix(f, n));
  Vector lambda(n, Scalar::zero(f)), gamma(n, Scalar::zero(f));
  lambda[0] = Scalar::one(f);
  for (const auto& [w, s] : state) {
    if (!w.empty()) mu[w.back()].at(state.at(w.drop_back()), s) = Scalar::one(f);
    gamma[s] = p.coefficient(w);
  }
  return LinRep(d, std::move(lambda), std::move(mu), std::move(gamma)).reduced();
}

LinRep LinRep::sum(const Domain& d, const std::vector<LinRep>& xs) {
  if (xs.empty()) return LinRep(d);
  // One block-diagonal representation, reduced once.
  Domain dom = d;
  std::size_t n = 0;
  for (const auto& x : xs) {
    dom = Domain::join(dom, x.dom_);
    n += x.dim();
  }
  const Field& f = dom.field;
  std::size_t letters = 0;
  for (const auto& x : xs) letters = std::max(letters, x.mu_.size());
  std::vector<Matrix> mu(letters, zero_matrix(f, n));
  Vector lambda, gamma;
  std::size_t off = 0;
  for (const auto& x : xs) {
    lambda.insert(lambda.end(), x.lambda_.begin(), x.lambda_.end());
    gamma.insert(gamma.end(), x.gamma_.begin(), x.gamma_.end());
    for (std::size_t l = 0; l < x.mu_.size(); ++l) mu[l].set_block(off, off, x.mu_[l]);
    off += x.dim();
  }
  return LinRep(dom, std::move(lambda), std::move(mu), std::move(gamma)).reduced();
}

Matrix LinRep::mu(Letter i) const {
  if (i < mu_.size()) return mu_[i];
  return zero_matrix(dom_.field, dim());
}

Scalar LinRep::coefficient(const Word& w) const {
  if (dim() == 0) return Scalar::zero(dom_.field);
  Vector v = lambda_;
  for (Letter l : w) {
    if (l >= mu_.size()) return Scalar::zero(dom_.field);
    v = v * mu_[l];
    if (pinf::is_zero(v)) return Scalar::zero(dom_.field);
  }
  return dot(v, gamma_);
}

LinRep LinRep::operator+(const LinRep& o) const { return sum(Domain::join(dom_, o.dom_), {*this, o}); }

LinRep LinRep::operator-(const LinRep& o) const { return *this + (-o); }

LinRep LinRep::operator-() const { return scaled(-Scalar::one(dom_.field)); }

LinRep LinRep::scaled(const Scalar& c) const {
  if (c.is_zero() || dim() == 0) return LinRep(dom_);
  LinRep r = *this;
  for (auto& x : r.lambda_) x *= c;
  return r;
}

LinRep LinRep::operator*(const LinRep& o) const {
  Domain dom = Domain::join(dom_, o.dom_);
  if (dim() == 0 || o.dim() == 0) return LinRep(dom);
  const Field& f = dom.field;
  const std::size_t da = dim(), db = o.dim(), n = da + db;
  const std::size_t letters = std::max(mu_.size(), o.mu_.size());
  const Scalar a0 = constant_term();
  Matrix gl = Matrix::column(gamma_, f) * Matrix::row(o.lambda_, f);  // da x db
  std::vector<Matrix> mu(letters, zero_matrix(f, n));
  for (std::size_t l = 0; l < letters; ++l) {
    if (l < mu_.size()) {
      mu[l].set_block(0, 0, mu_[l]);
      mu[l].set_block(0, da, mu_[l] * gl);
    }
    if (l < o.mu_.size()) mu[l].set_block(da, da, o.mu_[l]);
  }
  Vector lambda = lambda_;
  for (const auto& x : o.lambda_) lambda.push_back(a0 * x);
  Vector gamma(da, Scalar::zero(f));
  gamma.insert(gamma.end(), o.gamma_.begin(), o.gamma_.end());
  return LinRep(dom, std::move(lambda), std::move(mu), std::move(gamma)).reduced();
}

bool LinRep::is_zero() const {
  const std::size_t D = dim();
  if (D == 0) return true;
  RowSpan span(dom_.field, D);
  std::deque<Vector> queue;
  auto visit = [&](Vector v) {
    if (!dot(v, gamma_).is_zero()) return false;
    if (span.insert(v)) queue.push_back(std::move(v));
    return true;
  };
  if (!visit(lambda_)) return false;
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : mu_)
      if (!visit(v * t)) return false;
  }
  return true;
}

Scalar LinRep::constant_term() const {
  if (dim() == 0) return Scalar::zero(dom_.field);
  return dot(lambda_, gamma_);
}

RepData LinRep::data() const {
  RepData r;
  r.init = Matrix::row(lambda_, dom_.field);
  r.trans = mu_;
  r.fin = Matrix::column(gamma_, dom_.field);
  return r;
}

LinRep LinRep::from_data(const Domain& d, const RepData& r) {
  if (r.init.rows() != 1 || r.fin.cols() != 1) throw Mismatch("scalar representation expected");
  if (r.dim() == 0) return LinRep(d);
  return LinRep(d, r.init.row_vector(0), r.trans, r.fin.column_vector(0));
}

LinRep LinRep::reduced() const {
  if (dim() == 0) return *this;
  LinRep r = from_data(dom_, minimize(data()));
  // Drop trailing letters whose matrices vanish.
  while (!r.mu_.empty() && r.mu_.back().is_zero()) r.mu_.pop_back();
  return r;
}

LinRep LinRep::transduce(Letter i, bool reduce) const {
  if (i >= dom_.letters && !dom_.dynamic)
    throw InputError("letter index " + std::to_string(i) + " outside alphabet");
  if (i >= mu_.size() || dim() == 0) return LinRep(dom_);
  LinRep r(dom_, lambda_, mu_, mu_[i] * gamma_);
  return reduce ? r.reduced() : r;
}

LinRep LinRep::star() const {
  if (!constant_term().is_zero()) throw MathError("star needs a series with zero constant term");
  const Field& f = dom_.field;
  const std::size_t d = dim();
  std::vector<Matrix> mu;
  for (const auto& m : mu_) {
    // mu'(x) = (I + gamma lambda) mu(x), padded by a silent extra state.
    Vector lm = lambda_ * m;
    Matrix big(f, d + 1, d + 1);
    big.set_block(0, 0, m);
    for (std::size_t a = 0; a < d; ++a) {
      if (gamma_[a].is_zero()) continue;
      for (std::size_t b = 0; b < d; ++b)
        if (!lm[b].is_zero()) big.at(a, b) += gamma_[a] * lm[b];
    }
    mu.push_back(std::move(big));
  }
  Vector lambda = lambda_, gamma = gamma_;
  lambda.push_back(Scalar::one(f));
  gamma.push_back(Scalar::one(f));
  return LinRep(dom_, std::move(lambda), std::move(mu), std::move(gamma)).reduced();
}

LinRep LinRep::inverse() const {
  Scalar c = constant_term();
  if (c.is_zero()) throw NotInvertible("series with zero constant term is not invertible");
  Scalar ci = c.inverse();
  LinRep t = one(dom_) - scaled(ci);
  return t.star().scaled(ci);
}

std::optional<std::size_t> LinRep::order() const {
  const std::size_t D = dim();
  if (D == 0) return std::nullopt;
  // Level spaces V_L = span{lambda mu(w) : |w| = L}. Once the cumulative
  // span stops growing every later level is inside it, so a nonzero series
  // has order below 2 * dim.
  std::vector<Vector> level{lambda_};
  for (std::size_t L = 0; L < 2 * D; ++L) {
    for (const auto& v : level)
      if (!dot(v, gamma_).is_zero()) return L;
    RowSpan next(dom_.field, D);
    std::vector<Vector> nl;
    for (const auto& v : level)
      for (const auto& t : mu_) {
        Vector u = v * t;
        if (next.insert(u)) nl.push_back(std::move(u));
      }
    if (nl.empty()) return std::nullopt;
    level = std::move(nl);
  }
  return std::nullopt;
}

Word LinRep::min_monomial() const {
  auto ord = order();
  if (!ord) throw MathError("zero series has no monomials");
  const std::size_t L = *ord, D = dim();
  // Column spaces W_k = span{mu(u) gamma : |u| = k}.
  std::vector<std::vector<Vector>> cols{{gamma_}};
  for (std::size_t k = 1; k <= L; ++k) {
    RowSpan span(dom_.field, D);
    std::vector<Vector> next;
    for (const auto& c : cols.back())
      for (const auto& t : mu_) {
        Vector u = t * c;
        if (span.insert(u)) next.push_back(std::move(u));
      }
    cols.push_back(std::move(next));
  }
  auto hits = [](const Vector& v, const std::vector<Vector>& space) {
    for (const auto& c : space)
      if (!dot(v, c).is_zero()) return true;
    return false;
  };
  std::vector<Letter> word;
  Vector v = lambda_;
  for (std::size_t pos = 0; pos < L; ++pos) {
    const auto& space = cols[L - pos - 1];
    bool found = false;
    for (Letter a = 0; a < mu_.size(); ++a) {
      Vector u = v * mu_[a];
      if (hits(u, space)) {
        word.push_back(a);
        v = std::move(u);
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: monomial search lost its way");
  }
  return Word(std::move(word));
}

LinRep LinRep::widened(const Domain& d) const {
  LinRep r = *this;
  r.dom_ = Domain::join(dom_, d);
  return r;
}

FreeElem LinRep::truncation(std::size_t length) const {
  FreeElem p(dom_);
  if (dim() == 0 || length == 0) return p;
  std::function<void(std::vector<Letter>&, const Vector&)> walk = [&](std::vector<Letter>& w,
                                                                      const Vector& v) {
    Scalar c = dot(v, gamma_);
    if (!c.is_zero()) p.add_term(Word(w), c);
    if (w.size() + 1 >= length) return;
    for (Letter a = 0; a < mu_.size(); ++a) {
      Vector u = v * mu_[a];
      if (pinf::is_zero(u)) continue;
      w.push_back(a);
      walk(w, u);
      w.pop_back();
    }
  };
  std::vector<Letter> w;
  walk(w, lambda_);
  return p;
}

std::optional<FreeElem> LinRep::as_polynomial() const {
  LinRep r = reduced();
  const std::size_t D = r.dim();
  if (D == 0) return FreeElem(dom_);
  std::vector<Vector> level{r.lambda_};
  for (std::size_t L = 0; L <= D; ++L) {
    RowSpan next(dom_.field, D);
    std::vector<Vector> nl;
    for (const auto& v : level)
      for (const auto& t : r.mu_) {
        Vector u = v * t;
        if (next.insert(u)) nl.push_back(std::move(u));
      }
    if (nl.empty()) return r.truncation(L + 1);
    level = std::move(nl);
  }
  return std::nullopt;
}

std::string LinRep::to_string() const {
  if (auto p = as_polynomial()) return p->to_string();
  FreeElem head = truncation(4);
  std::string s = head.is_zero() ? "0" : head.to_string();
  return s + " + O(4) [rational series of dimension " + std::to_string(reduced().dim()) + "]";
}

// ---------------------------------------------------------------- matrices

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw Mismatch("series matrix size mismatch");
  const Domain& d = a[0][0].domain();
  SeriesMatrix r(a.size(), std::vector<LinRep>(b[0].size(), LinRep(d)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      std::vector<LinRep> terms;
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[i][k].dim() == 0 || b[k][j].dim() == 0) continue;
        terms.push_back(a[i][k] * b[k][j]);
      }
      r[i][j] = LinRep::sum(d, terms);
    }
  return r;
}

bool is_identity(const SeriesMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const LinRep& e = m[i][j];
      LinRep target = i == j ? LinRep::one(e.domain()) : LinRep::zero(e.domain());
      if (!(e == target)) return false;
    }
  return true;
}

SeriesMatrix invert_matrix_series(const SeriesMatrix& m) {
  const std::size_t r = m.size();
  if (r == 0) return {};
  for (const auto& row : m)
    if (row.size() != r) throw Mismatch("square series matrix expected");
  Domain dom = m[0][0].domain();
  for (const auto& row : m)
    for (const auto& e : row) dom = Domain::join(dom, e.domain());
  const Field& f = dom.field;

  Matrix c(f, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c.at(i, j) = m[i][j].constant_term();
  Matrix cinv;
  try {
    cinv = c.inverse();
  } catch (const NotInvertible&) {
    throw NotInvertible("matrix of constant terms is singular");
  }

  // Block representation of M: entry (i, j) occupies its own state block.
  std::size_t D = 0, letters = 0;
  for (const auto& row : m)
    for (const auto& e : row) {
      D += e.dim();
      letters = std::max(letters, e.mus().size());
    }
  Matrix lam(f, r, D + r), gam(f, D + r, r);
  std::vector<Matrix> mu(letters, Matrix(f, D + r, D + r));
  std::size_t off = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const LinRep& e = m[i][j];
      for (std::size_t a = 0; a < e.dim(); ++a) {
        lam.at(i, off + a) = e.lambda()[a];
        gam.at(off + a, j) = e.gamma()[a];
      }
      for (std::size_t l = 0; l < e.mus().size(); ++l) mu[l].set_block(off, off, e.mus()[l]);
      off += e.dim();
    }
  // P = 1 - C^-1 M has zero constant term: init [-C^-1 Lambda | I], fin [Gamma; I].
  Matrix scaled_lam = (cinv * lam).scaled(-Scalar::one(f));
  for (std::size_t i = 0; i < r; ++i) {
    scaled_lam.at(i, D + i) = Scalar::one(f);
    gam.at(D + i, i) = Scalar::one(f);
  }
  RepData p = minimize(RepData{scaled_lam, mu, gam});

  // P* = I + P^+, with P^+ given by mu'(x) = (I + Gamma Lambda) mu(x).
  const std::size_t d = p.dim();
  Matrix gl = p.fin * p.init;
  RepData s;
  s.init = Matrix(f, r, d + r);
  s.init.set_block(0, 0, p.init);
  s.init.set_block(0, d, Matrix::identity(f, r));
  s.fin = Matrix(f, d + r, r);
  s.fin.set_block(0, 0, p.fin);
  s.fin.set_block(d, 0, Matrix::identity(f, r));
  for (const auto& t : p.trans) {
    Matrix big(f, d + r, d + r);
    big.set_block(0, 0, t + gl * t);
    s.trans.push_back(std::move(big));
  }
  // M^-1 = P* C^-1.
  s.fin = s.fin * cinv;
  s = minimize(s);

  SeriesMatrix out(r, std::vector<LinRep>(r, LinRep(dom)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (s.dim() == 0) continue;
      LinRep e(dom, s.init.row_vector(i), s.trans, s.fin.column_vector(j));
      out[i][j] = e.reduced();
    }
  return out;
}

}  // namespace pinf
