#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pinf/core/domain.hpp"
#include "pinf/core/word.hpp"
#include "pinf/freealg.hpp"
#include "pinf/linalg.hpp"

namespace pinf {

/// Matrix-valued weighted automaton: word w maps to init * trans(w) * fin.
/// `trans` may be shorter than the alphabet; missing letters act as zero.
struct RepData {
  Matrix init;                 // k x D
  std::vector<Matrix> trans;   // D x D each
  Matrix fin;                  // D x k'

  std::size_t dim() const { return init.cols(); }
};

/// Restricts to the reachable subspace and then to the observable one. The
/// result has the smallest possible state dimension.
RepData minimize(const RepData& r);
/// Evaluates init * trans(w) * fin.
Matrix evaluate(const RepData& r, const Word& w);

/// Rational series over X given by a linear representation (lambda, mu,
/// gamma): the coefficient of w is lambda * mu(w) * gamma. Every operation
/// returns a minimal representation.
class LinRep {
 public:
  static constexpr bool exact = true;

  LinRep() = default;
  explicit LinRep(Domain d);
  /// Takes ownership of raw data without reducing it.
  LinRep(Domain d, Vector lambda, std::vector<Matrix> mu, Vector gamma);

  static LinRep zero(const Domain& d) { return LinRep(d); }
  static LinRep constant(const Domain& d, const Scalar& c);
  static LinRep one(const Domain& d) { return constant(d, Scalar::one(d.field)); }
  static LinRep letter(const Domain& d, Letter i);
  static LinRep from_poly(const FreeElem& p);
  static LinRep sum(const Domain& d, const std::vector<LinRep>& xs);

  const Domain& domain() const { return dom_; }
  const Field& field() const { return dom_.field; }
  std::size_t dim() const { return lambda_.size(); }
  const Vector& lambda() const { return lambda_; }
  const Vector& gamma() const { return gamma_; }
  /// Transition matrix of letter i (zero matrix past the stored letters).
  Matrix mu(Letter i) const;
  const std::vector<Matrix>& mus() const { return mu_; }

  Scalar coefficient(const Word& w) const;

  LinRep operator+(const LinRep& o) const;
  LinRep operator-(const LinRep& o) const;
  LinRep operator*(const LinRep& o) const;
  LinRep operator-() const;
  LinRep scaled(const Scalar& c) const;

  /// Exact series equality (decided on the difference).
  bool operator==(const LinRep& o) const { return (*this - o).is_zero(); }
  bool is_zero() const;
  Scalar constant_term() const;

  /// Minimal representation of the same series.
  LinRep reduced() const;
  /// delta_i: coefficient of w is a(w x_i). Reduced unless `reduce` is false,
  /// in which case the dimension is unchanged.
  LinRep transduce(Letter i, bool reduce = true) const;
  /// sum_k s^k for a series with zero constant term.
  LinRep star() const;
  /// Two-sided inverse; throws NotInvertible for zero constant term.
  LinRep inverse() const;

  std::optional<std::size_t> order() const;
  /// Length-lex smallest word of minimal length with nonzero coefficient.
  Word min_monomial() const;

  LinRep widened(const Domain& d) const;

  /// Polynomial with the coefficients of all words shorter than `length`.
  FreeElem truncation(std::size_t length) const;
  /// Expands as a polynomial if the series has finite support; nullopt otherwise.
  std::optional<FreeElem> as_polynomial() const;

  std::string to_string() const;

  RepData data() const;
  static LinRep from_data(const Domain& d, const RepData& r);

 private:
  Domain dom_;
  Vector lambda_;
  std::vector<Matrix> mu_;
  Vector gamma_;
};

using SeriesMatrix = std::vector<std::vector<LinRep>>;

/// Exact inverse of a square matrix of rational series whose matrix of
/// constant terms is invertible. Throws NotInvertible otherwise.
SeriesMatrix invert_matrix_series(const SeriesMatrix& m);
SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b);
bool is_identity(const SeriesMatrix& m);

}  // namespace pinf
