#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinf/core/domain.hpp"
#include "pinf/core/word.hpp"

namespace pinf {

/// Noncommutative polynomial: finitely supported map from X-words to
/// nonzero scalars.
class FreeElem {
 public:
  static constexpr bool exact = true;

  FreeElem() = default;
  explicit FreeElem(Domain d) : dom_(std::move(d)) {}

  static FreeElem zero(const Domain& d) { return FreeElem(d); }
  static FreeElem constant(const Domain& d, const Scalar& c);
  static FreeElem one(const Domain& d) { return constant(d, Scalar::one(d.field)); }
  static FreeElem letter(const Domain& d, Letter i);
  static FreeElem monomial(const Domain& d, const Word& w, const Scalar& c);
  static FreeElem sum(const Domain& d, const std::vector<FreeElem>& xs);

  const Domain& domain() const { return dom_; }
  const Field& field() const { return dom_.field; }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  Scalar coefficient(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  FreeElem operator+(const FreeElem& o) const;
  FreeElem operator-(const FreeElem& o) const;
  FreeElem operator*(const FreeElem& o) const;
  FreeElem operator-() const;
  FreeElem scaled(const Scalar& c) const;
  bool operator==(const FreeElem& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar constant_term() const;
  /// Minimum word length in the support; nullopt for zero.
  std::optional<std::size_t> order() const;
  /// Maximum word length in the support; nullopt for zero.
  std::optional<std::size_t> degree() const;
  std::size_t support_size() const { return terms_.size(); }
  /// Length-lex smallest word of minimal length in the support.
  Word min_monomial() const;

  /// Right transduction: coefficient of w in the result is a(w x_i).
  FreeElem transduce(Letter i) const;
  /// Only nonzero constants are units.
  FreeElem inverse() const;
  FreeElem widened(const Domain& d) const;

  std::string to_string() const;

 private:
  Domain dom_;
  std::map<Word, Scalar> terms_;
};

}  // namespace pinf
