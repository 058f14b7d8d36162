#include "pinf/expr.hpp"

#include <cctype>
#include <limits>

namespace pinf {

namespace {

using Kind = Expr::Kind;

int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

Expr node(Kind k, std::size_t column, std::vector<Expr> kids = {}) {
  Expr e;
  e.kind = k;
  e.column = column;
  e.kids = std::move(kids);
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {
    std::size_t col = 1;
    for (unsigned char c : s_) {
      cols_.push_back(col);
      if ((c & 0xC0) != 0x80) ++col;
    }
    // Continuation bytes share the column of their lead byte.
    for (std::size_t i = 0; i < s_.size(); ++i)
      if ((static_cast<unsigned char>(s_[i]) & 0xC0) == 0x80 && i > 0) cols_[i] = cols_[i - 1];
    end_col_ = s_.empty() ? 1 : col;
  }

  Expr parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + current_char() + "'");
    return e;
  }

 private:
  std::size_t column() const { return pos_ < s_.size() ? cols_[pos_] : end_col_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, column()); }

  std::string current_char() const {
    std::size_t n = 1;
    while (pos_ + n < s_.size() && (static_cast<unsigned char>(s_[pos_ + n]) & 0xC0) == 0x80) ++n;
    return s_.substr(pos_, n);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const char* tok) {
    skip();
    std::string t(tok);
    if (s_.compare(pos_, t.size(), t) == 0) {
      pos_ += t.size();
      return true;
    }
    return false;
  }

  // U+2212 MINUS SIGN and U+00B7 MIDDLE DOT are accepted as - and *.
  bool minus() { return accept("-") || accept("\xE2\x88\x92"); }
  bool times() { return accept("*") || accept("\xC2\xB7"); }

  Expr sum() {
    Expr e = term();
    for (;;) {
      skip();
      std::size_t c = column();
      if (accept("+"))
        e = node(Kind::Add, c, {std::move(e), term()});
      else if (minus())
        e = node(Kind::Sub, c, {std::move(e), term()});
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      skip();
      std::size_t c = column();
      if (times())
        e = node(Kind::Mul, c, {std::move(e), unary()});
      else if (accept("/"))
        e = node(Kind::Div, c, {std::move(e), unary()});
      else
        return e;
    }
  }

  Expr unary() {
    skip();
    std::size_t c = column();
    if (minus()) return node(Kind::Neg, c, {unary()});
    if (accept("+")) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    std::size_t c = column();
    if (!accept("^")) return base;
    bool paren = accept("(");
    bool negative = minus();
    skip();
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    mpz_class k = digits();
    if (paren && !accept(")")) fail("expected ')'");
    if (k > 1000000) throw ParseError("exponent too large", c);
    Expr e = node(Kind::Pow, c, {std::move(base)});
    e.exponent = negative ? -k.get_si() : k.get_si();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') fail("chained powers need parentheses");
    return e;
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Expr atom() {
    skip();
    std::size_t c = column();
    if (pos_ == s_.size()) fail("expected a term");
    unsigned char ch = static_cast<unsigned char>(s_[pos_]);
    if (accept("(")) {
      Expr e = sum();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (std::isdigit(ch)) {
      Expr e = node(Kind::Number, c);
      e.number = digits();
      return e;
    }
    if (std::isalpha(ch)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      bool underscore = pos_ < s_.size() && s_[pos_] == '_';
      if (underscore) ++pos_;
      bool has_index = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
      mpz_class idx = has_index ? digits() : mpz_class(0);
      if (underscore && !has_index) fail("expected an index after '_'");
      if (has_index && idx > std::numeric_limits<std::uint32_t>::max() / 2)
        throw ParseError("bad index for " + name, c);
      Expr e;
      if (name == "x" || name == "y") {
        if (!has_index) throw ParseError("letter " + name + " needs an index", c);
        e = node(name == "x" ? Kind::X : Kind::Y, c);
      } else if (name == "t") {
        if (has_index && idx == 0) throw ParseError("indeterminates are numbered from t1", c);
        e = node(Kind::Param, c);
        if (!has_index) idx = 1;
      } else if (name == "e" && !has_index) {
        return node(Kind::Idempotent, c);
      } else {
        throw ParseError("unknown letter '" + s_.substr(start, pos_ - start) + "'", c);
      }
      e.index = static_cast<std::uint32_t>(idx.get_ui());
      return e;
    }
    fail("unexpected '" + current_char() + "'");
  }

  const std::string& s_;
  std::vector<std::size_t> cols_;
  std::size_t end_col_ = 1;
  std::size_t pos_ = 0;
};

std::string print(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case Kind::Number:
      s = e.number.get_str();
      break;
    case Kind::Param:
      s = "t" + std::to_string(e.index);
      break;
    case Kind::X:
      s = "x" + std::to_string(e.index);
      break;
    case Kind::Y:
      s = "y" + std::to_string(e.index);
      break;
    case Kind::Idempotent:
      s = "e";
      break;
    case Kind::Add:
    case Kind::Sub:
      s = print(e.kids[0], 1) + (e.kind == Kind::Add ? " + " : " - ") + print(e.kids[1], 2);
      break;
    case Kind::Mul:
    case Kind::Div:
      s = print(e.kids[0], 2) + (e.kind == Kind::Mul ? "*" : "/") + print(e.kids[1], 3);
      break;
    case Kind::Neg:
      s = "-" + print(e.kids[0], 3);
      break;
    case Kind::Pow:
      s = print(e.kids[0], 5) + "^" + std::to_string(e.exponent);
      break;
  }
  return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind || kids.size() != o.kids.size()) return false;
  switch (kind) {
    case Kind::Number:
      if (number != o.number) return false;
      break;
    case Kind::Param:
    case Kind::X:
    case Kind::Y:
      if (index != o.index) return false;
      break;
    case Kind::Pow:
      if (exponent != o.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (!(kids[i] == o.kids[i])) return false;
  return true;
}

std::string Expr::to_string() const { return print(*this, 0); }

bool Expr::has_letters() const {
  if (kind == Kind::X || kind == Kind::Y || kind == Kind::Idempotent) return true;
  for (const auto& k : kids)
    if (k.has_letters()) return true;
  return false;
}

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::optional<Scalar> scalar_value(const Expr& e, const Field& f) {
  if (e.has_letters()) return std::nullopt;
  auto v = [&](const Expr& k) { return *scalar_value(k, f); };
  switch (e.kind) {
    case Kind::Number:
      return Scalar::from_rational(f, mpq_class(e.number));
    case Kind::Param:
      return Scalar::indeterminate(f, static_cast<int>(e.index));
    case Kind::Add:
      return v(e.kids[0]) + v(e.kids[1]);
    case Kind::Sub:
      return v(e.kids[0]) - v(e.kids[1]);
    case Kind::Mul:
      return v(e.kids[0]) * v(e.kids[1]);
    case Kind::Div:
      return v(e.kids[0]) / v(e.kids[1]);
    case Kind::Neg:
      return -v(e.kids[0]);
    case Kind::Pow: {
      Scalar b = v(e.kids[0]);
      long k = e.exponent;
      if (k < 0) {
        b = b.inverse();
        k = -k;
      }
      Scalar r = Scalar::one(f);
      while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
      }
      return r;
    }
    default:
      break;
  }
  return std::nullopt;
}

Scalar parse_scalar(const std::string& text, const Field& f) {
  Expr e = parse_expr(text);
  if (e.has_letters()) throw InputError("expected a scalar, got '" + text + "'");
  return *scalar_value(e, f);
}

namespace detail {
void reject(const Expr& e, const std::string& what) {
  throw InputError(what + " (column " + std::to_string(e.column) + ")");
}
}  // namespace detail

FreeElem eval_polynomial(const Expr& e, const Domain& d) {
  Interpretation<FreeElem> in;
  in.field = d.field;
  in.constant = [&](const Scalar& c) { return FreeElem::constant(d, c); };
  in.x = [&](std::uint32_t i) { return FreeElem::letter(d.covering(i), i); };
  in.inverse = [](const FreeElem& a) { return a.inverse(); };
  return evaluate(e, in);
}

LinRep eval_series(const Expr& e, const Domain& d) {
  Interpretation<LinRep> in;
  in.field = d.field;
  in.constant = [&](const Scalar& c) { return LinRep::constant(d, c); };
  in.x = [&](std::uint32_t i) { return LinRep::letter(d.covering(i), i); };
  in.inverse = [](const LinRep& a) { return a.inverse(); };
  return evaluate(e, in);
}

TruncSeries eval_truncated(const Expr& e, const Domain& d) {
  Interpretation<TruncSeries> in;
  in.field = d.field;
  in.constant = [&](const Scalar& c) { return TruncSeries::constant(d, c); };
  in.x = [&](std::uint32_t i) { return TruncSeries::letter(d.covering(i), i); };
  in.inverse = [](const TruncSeries& a) { return a.inverse(); };
  return evaluate(e, in);
}

namespace {

template <CoefficientRing R>
SkewElem<R> eval_skew_in(const Expr& e, const Domain& d) {
  using S = SkewElem<R>;
  Interpretation<S> in;
  in.field = d.field;
  in.constant = [&](const Scalar& c) { return S::scalar(d, c); };
  in.x = [&](std::uint32_t i) { return S::x(d.covering(i), i); };
  in.y = [&](std::uint32_t i) { return S::y(d.covering(i), i); };
  in.idempotent = [&]() { return S::idempotent(d); };
  in.inverse = [](const S& a) {
    if (a.y_degree().value_or(0) > 0)
      throw NotInvertible("only elements without Y letters can be inverted: " + a.to_string());
    if (a.is_zero()) throw NotInvertible("zero is not invertible");
    return S::coeff(a.coefficient(Word()).inverse());
  };
  return evaluate(e, in);
}

}  // namespace

SkewElem<LinRep> eval_skew(const Expr& e, const Domain& d) { return eval_skew_in<LinRep>(e, d); }

SkewElem<TruncSeries> eval_skew_truncated(const Expr& e, const Domain& d) {
  return eval_skew_in<TruncSeries>(e, d);
}

UElem eval_leavitt(const Expr& e, const Field& f, std::size_t n, bool dynamic) {
  Interpretation<UElem> in;
  in.field = f;
  in.constant = [&](const Scalar& c) { return UElem::scalar(f, n, c, dynamic); };
  in.x = [&](std::uint32_t i) { return UElem::x(f, n, i, dynamic); };
  in.y = [&](std::uint32_t i) { return UElem::y(f, n, i, dynamic); };
  in.idempotent = [&]() {
    if (dynamic) throw InputError("e is only defined for a fixed n");
    return UElem::idempotent(f, n);
  };
  in.inverse = [&](const UElem& a) {
    if (a.is_zero()) throw NotInvertible("zero is not invertible");
    if (a.support_size() != 1 || a.degree() != 0)
      throw NotInvertible("only nonzero scalars are inverted in U: " + a.to_string());
    return UElem::scalar(f, n, a.terms().begin()->second.inverse(), dynamic);
  };
  return evaluate(e, in);
}

}  // namespace pinf
