#include "pinf/random.hpp"

namespace pinf {

Scalar Random::scalar(const Field& f, bool nonzero) {
  for (;;) {
    Scalar s;
    switch (f.kind()) {
      case FieldKind::Rational:
        s = Scalar::from_rational(f, mpq_class(integer(-3, 3), integer(1, 3)));
        break;
      case FieldKind::Prime:
        s = Scalar::from_int(f, integer(0, static_cast<long>(f.modulus()) - 1));
        break;
      case FieldKind::RationalFunction: {
        Scalar t = Scalar::indeterminate(f, 1);
        auto lift = [&](long v) { return Scalar::from_int(f, v); };
        Scalar num = lift(integer(-2, 2)) + (coin(0.4) ? lift(integer(-1, 1)) * t : lift(0));
        Scalar den = lift(1) + (coin(0.15) ? lift(integer(-1, 1)) * t : lift(0));
        s = den.is_zero() ? num : num / den;
        break;
      }
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

Word Random::word(std::size_t letters, std::size_t max_len, std::size_t min_len) {
  std::size_t len = static_cast<std::size_t>(integer(static_cast<long>(min_len), static_cast<long>(max_len)));
  std::vector<Letter> w(len);
  for (auto& l : w) l = static_cast<Letter>(index(letters));
  return Word(w);
}

FreeElem Random::polynomial(const Domain& d, std::size_t max_terms, std::size_t max_len, bool zero_constant) {
  FreeElem p = FreeElem::zero(d);
  std::size_t terms = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k) {
    Word w = word(d.letters, max_len, zero_constant ? 1 : 0);
    p.add_term(w, scalar(d.field, true));
  }
  return p;
}

LinRep Random::series(const Domain& d, std::size_t max_dim, double density) {
  std::size_t dim = static_cast<std::size_t>(integer(1, static_cast<long>(max_dim)));
  auto entry = [&]() { return coin(density) ? scalar(d.field) : Scalar::zero(d.field); };
  Vector lambda(dim), gamma(dim);
  for (auto& v : lambda) v = entry();
  for (auto& v : gamma) v = entry();
  std::vector<Matrix> mu;
  for (std::size_t l = 0; l < d.letters; ++l) {
    Matrix m(d.field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = entry();
    mu.push_back(m);
  }
  return LinRep(d, lambda, mu, gamma).reduced();
}

LinRep Random::nonzero_series(const Domain& d, std::size_t max_dim, double density) {
  for (;;) {
    LinRep r = series(d, max_dim, density);
    if (!r.is_zero()) return r;
  }
}

SkewElem<LinRep> Random::skew(const Domain& d, std::size_t max_terms, std::size_t max_y_degree, std::size_t max_dim) {
  using S = SkewElem<LinRep>;
  S s = S::zero(d);
  std::size_t terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k)
    s = s + S::term(word(d.letters, max_y_degree), nonzero_series(d, max_dim));
  return s;
}

UElem Random::uelem(const Field& f, std::size_t n, std::size_t max_terms, std::size_t max_degree, bool dynamic) {
  UElem a(f, n, dynamic);
  std::size_t terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k) {
    std::size_t total = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    std::size_t ylen = static_cast<std::size_t>(integer(0, static_cast<long>(total)));
    auto shift = [](Word w) {
      std::vector<Letter> v(w.begin(), w.end());
      for (auto& l : v) ++l;
      return Word(v);
    };
    Word y = shift(word(n, ylen, ylen));
    Word x = shift(word(n, total - ylen, total - ylen));
    a.add_term(Monoword{y, x}, scalar(f, true));
  }
  return a;
}

// ---------------------------------------------------------------- SeriesTree

std::shared_ptr<SeriesTree> SeriesTree::random(Random& r, const Domain& d, int depth) {
  auto node = std::make_shared<SeriesTree>();
  if (depth <= 1 || r.coin(0.25)) {
    if (r.coin(0.6)) {
      node->kind = Kind::Letter;
      node->letter = static_cast<Letter>(r.index(d.letters));
    } else {
      node->kind = Kind::Scalar;
      node->value = r.scalar(d.field, true);
    }
    return node;
  }
  switch (r.integer(0, 5)) {
    case 0:
    case 1:
      node->kind = Kind::Add;
      break;
    case 2:
    case 3:
      node->kind = Kind::Mul;
      break;
    case 4:
      node->kind = Kind::Invert;
      break;
    default:
      node->kind = Kind::Transduce;
      node->letter = static_cast<Letter>(r.index(d.letters));
      break;
  }
  std::size_t arity = node->kind == Kind::Add || node->kind == Kind::Mul ? 2 : 1;
  for (std::size_t k = 0; k < arity; ++k) node->kids.push_back(random(r, d, depth - 1));
  return node;
}

namespace {

template <class R>
R invert_shifted(const R& a, const Domain& d) {
  if (a.constant_term().is_zero()) return (R::one(d) + a).inverse();
  return a.inverse();
}

}  // namespace

LinRep SeriesTree::exact(const Domain& d) const {
  switch (kind) {
    case Kind::Letter:
      return LinRep::letter(d, letter);
    case Kind::Scalar:
      return LinRep::constant(d, value);
    case Kind::Add:
      return kids[0]->exact(d) + kids[1]->exact(d);
    case Kind::Mul:
      return kids[0]->exact(d) * kids[1]->exact(d);
    case Kind::Invert:
      return invert_shifted(kids[0]->exact(d), d);
    case Kind::Transduce:
      return kids[0]->exact(d).transduce(letter);
  }
  throw Error("unreachable");
}

TruncSeries SeriesTree::truncated(const Domain& d, int precision) const {
  Domain dp = d;
  dp.precision = precision;
  switch (kind) {
    case Kind::Letter:
      return TruncSeries::letter(dp, letter);
    case Kind::Scalar:
      return TruncSeries::constant(dp, value);
    case Kind::Add:
      return kids[0]->truncated(d, precision) + kids[1]->truncated(d, precision);
    case Kind::Mul:
      return kids[0]->truncated(d, precision) * kids[1]->truncated(d, precision);
    case Kind::Invert: {
      TruncSeries a = kids[0]->truncated(d, precision);
      if (a.constant_term().is_zero()) return (TruncSeries::one(dp) + a).inverse();
      return a.inverse();
    }
    case Kind::Transduce:
      return kids[0]->truncated(d, precision + 1).transduce(letter);
  }
  throw Error("unreachable");
}

std::string SeriesTree::to_string() const {
  switch (kind) {
    case Kind::Letter:
      return "x" + std::to_string(letter);
    case Kind::Scalar:
      return "(" + value.to_string() + ")";
    case Kind::Add:
      return "(" + kids[0]->to_string() + " + " + kids[1]->to_string() + ")";
    case Kind::Mul:
      return kids[0]->to_string() + "*" + kids[1]->to_string();
    case Kind::Invert:
      return "inv(" + kids[0]->to_string() + ")";
    case Kind::Transduce:
      return "d" + std::to_string(letter) + "(" + kids[0]->to_string() + ")";
  }
  return "?";
}

}  // namespace pinf
