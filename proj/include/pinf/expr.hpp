#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pinf/core/domain.hpp"
#include "pinf/core/error.hpp"
#include "pinf/freealg.hpp"
#include "pinf/leavitt.hpp"
#include "pinf/ratseries.hpp"
#include "pinf/skewring.hpp"
#include "pinf/truncseries.hpp"

namespace pinf {

/// Abstract syntax of the text input language: integers, letters x<i>, y<i>,
/// indeterminates t<k> (plain t is t1), the idempotent e, + - * /, integer
/// powers (^-1 inverts) and parentheses. Columns are 1-based code points.
struct Expr {
  enum class Kind { Number, Param, X, Y, Idempotent, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Number;
  mpz_class number;
  std::uint32_t index = 0;
  long exponent = 0;
  std::vector<Expr> kids;
  std::size_t column = 1;

  /// Structural equality; columns are ignored.
  bool operator==(const Expr& o) const;

  /// Prints with the fewest parentheses that parse back to the same tree.
  std::string to_string() const;
  bool has_letters() const;
};

Expr parse_expr(const std::string& text);

/// Value of a letter-free expression in f. Throws DivisionByZero.
std::optional<Scalar> scalar_value(const Expr& e, const Field& f);
Scalar parse_scalar(const std::string& text, const Field& f);

/// Interpretation of the leaves in some algebra V. Missing callbacks reject
/// the corresponding syntax.
template <class V>
struct Interpretation {
  Field field;
  std::function<V(const Scalar&)> constant;
  std::function<V(std::uint32_t)> x;
  std::function<V(std::uint32_t)> y;
  std::function<V()> idempotent;
  std::function<V(const V&)> inverse;
};

namespace detail {
[[noreturn]] void reject(const Expr& e, const std::string& what);
}

template <class V, class F>
V evaluate_letter(const Expr& e, const F& make) {
  try {
    return make(e.index);
  } catch (const InputError& ex) {
    detail::reject(e, ex.what());
  }
}

template <class V>
V evaluate(const Expr& e, const Interpretation<V>& in) {
  if (!e.has_letters()) return in.constant(*scalar_value(e, in.field));
  auto rec = [&](const Expr& k) { return evaluate(k, in); };
  switch (e.kind) {
    case Expr::Kind::X:
      if (!in.x) detail::reject(e, "x letters are not allowed here");
      return evaluate_letter<V>(e, in.x);
    case Expr::Kind::Y:
      if (!in.y) detail::reject(e, "y letters are not allowed here");
      return evaluate_letter<V>(e, in.y);
    case Expr::Kind::Idempotent:
      if (!in.idempotent) detail::reject(e, "the idempotent e is not allowed here");
      return in.idempotent();
    case Expr::Kind::Add:
      return rec(e.kids[0]) + rec(e.kids[1]);
    case Expr::Kind::Sub:
      return rec(e.kids[0]) - rec(e.kids[1]);
    case Expr::Kind::Mul:
      return rec(e.kids[0]) * rec(e.kids[1]);
    case Expr::Kind::Neg:
      return -rec(e.kids[0]);
    case Expr::Kind::Div: {
      V a = rec(e.kids[0]);
      if (auto c = scalar_value(e.kids[1], in.field)) {
        if (c->is_zero()) throw DivisionByZero();
        return a * in.constant(c->inverse());
      }
      if (!in.inverse) detail::reject(e, "division by a non-scalar is not allowed here");
      return a * in.inverse(rec(e.kids[1]));
    }
    case Expr::Kind::Pow: {
      V base = rec(e.kids[0]);
      long k = e.exponent;
      if (k < 0) {
        if (!in.inverse) detail::reject(e, "inversion is not allowed here");
        base = in.inverse(base);
        k = -k;
      }
      V result = in.constant(Scalar::one(in.field));
      while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
      }
      return result;
    }
    default:
      break;
  }
  throw Error("unreachable");
}

FreeElem eval_polynomial(const Expr& e, const Domain& d);
LinRep eval_series(const Expr& e, const Domain& d);
TruncSeries eval_truncated(const Expr& e, const Domain& d);
/// Elements of S over rational series; only Y-degree 0 elements invert.
SkewElem<LinRep> eval_skew(const Expr& e, const Domain& d);
SkewElem<TruncSeries> eval_skew_truncated(const Expr& e, const Domain& d);
/// Elements of U_{1,n}, letters from 1; e is e_n. Only scalars invert.
UElem eval_leavitt(const Expr& e, const Field& f, std::size_t n, bool dynamic = false);

}  // namespace pinf
