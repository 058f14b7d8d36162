#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pinf/core/error.hpp"

namespace pinf {

enum class FieldKind { Rational, Prime, RationalFunction };

/// Descriptor of a coefficient field: Q, F_p, or k(t_1,...,t_r) with k = Q
/// (modulus 0) or k = F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  static Field rational_functions(int indeterminates, std::uint64_t base_modulus = 0);

  /// Accepts "q", "fp:<p>", "qt:<r>" and "fpt:<p>:<r>".
  static Field parse(const std::string& spec);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  int indeterminates() const { return indeterminates_; }
  /// Prime field characteristic of the base (0 for Q-based fields).
  std::uint64_t characteristic() const { return modulus_; }

  /// The field of constants: Q or F_p.
  Field base() const;

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t modulus_ = 0;
  int indeterminates_ = 0;
};

class RationalFunction;

/// Exact element of a Field. Values are immutable; rational functions are
/// shared and always stored in canonical (reduced, monic denominator) form,
/// so equality is structural.
class Scalar {
 public:
  /// Zero of Q.
  Scalar();

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  /// The indeterminate t_k (1-based) of a rational-function field.
  static Scalar indeterminate(const Field& f, int k);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;

  /// Total order used only for deterministic tie-breaking and sorting.
  std::strong_ordering compare(const Scalar& o) const;

  std::string to_string() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const RationalFunction& rational_function() const;

  /// Rational number embedded in a constant scalar of Q or k(t).
  bool is_rational_constant() const;

 private:
  using Value = std::variant<mpq_class, std::uint64_t, std::shared_ptr<const RationalFunction>>;
  Scalar(Field f, Value v) : field_(f), value_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  Field field_;
  Value value_;

  friend class RationalFunction;
};

using Exponent = std::vector<std::uint32_t>;

/// Graded-lexicographic comparison of exponent vectors.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial in t_1..t_r over Q or F_p.
class Poly {
 public:
  Poly(Field base, int nvars) : base_(base), nvars_(nvars) {}

  static Poly constant(Field base, int nvars, const Scalar& c);
  static Poly variable(Field base, int nvars, int index);  // 0-based

  const Field& base() const { return base_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;
  const std::map<Exponent, Scalar, GrlexLess>& terms() const { return terms_; }

  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& o) const;

  /// Degree in variable v, -1 for the zero polynomial.
  int degree_in(int v) const;
  /// Coefficient of v^k, a polynomial free of v.
  Poly coefficient_in(int v, int k) const;
  /// Multiply by v^k.
  Poly shifted(int v, int k) const;

  /// Exact quotient; throws if o does not divide *this.
  Poly divide_exact(const Poly& o) const;
  Poly monic() const;

  std::string to_string(bool parenthesize_sums = false) const;

  void add_term(const Exponent& e, const Scalar& c);

 private:
  Field base_;
  int nvars_;
  std::map<Exponent, Scalar, GrlexLess> terms_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// num/den in lowest terms with monic denominator.
class RationalFunction {
 public:
  RationalFunction(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pinf
