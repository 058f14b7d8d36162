#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pinf/core/domain.hpp"
#include "pinf/core/word.hpp"
#include "pinf/freealg.hpp"

namespace pinf {

/// Power series known exactly on all words shorter than the precision N.
/// Words of length >= N are unknown, so zero tests are only "zero up to N".
class TruncSeries {
 public:
  static constexpr bool exact = false;

  TruncSeries() = default;
  TruncSeries(Domain d, int precision);
  explicit TruncSeries(Domain d) : TruncSeries(d, d.precision) {}

  static TruncSeries zero(const Domain& d) { return TruncSeries(d); }
  static TruncSeries constant(const Domain& d, const Scalar& c);
  static TruncSeries one(const Domain& d) { return constant(d, Scalar::one(d.field)); }
  static TruncSeries letter(const Domain& d, Letter i);
  static TruncSeries from_poly(const FreeElem& p, int precision);
  static TruncSeries sum(const Domain& d, const std::vector<TruncSeries>& xs);

  const Domain& domain() const { return dom_; }
  const Field& field() const { return dom_.field; }
  int precision() const { return precision_; }
  const std::unordered_map<Word, Scalar, WordHash>& terms() const { return terms_; }

  Scalar coefficient(const Word& w) const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries scaled(const Scalar& c) const;

  /// Zero on every known coefficient.
  bool is_zero() const { return terms_.empty(); }
  Scalar constant_term() const;
  /// Lowers the precision by one.
  TruncSeries transduce(Letter i) const;
  /// Keeps the precision; throws NotInvertible for zero constant term.
  TruncSeries inverse() const;
  /// Minimal length among known nonzero coefficients.
  std::optional<std::size_t> order() const;
  Word min_monomial() const;
  TruncSeries widened(const Domain& d) const;
  TruncSeries with_precision(int n) const;

  FreeElem to_poly() const;
  std::string to_string() const;

 private:
  void add_term(const Word& w, const Scalar& c);

  Domain dom_;
  int precision_ = 16;
  std::unordered_map<Word, Scalar, WordHash> terms_;
};

}  // namespace pinf
