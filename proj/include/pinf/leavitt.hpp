#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinf/core/scalar.hpp"
#include "pinf/core/word.hpp"
#include "pinf/freealg.hpp"
#include "pinf/skewring.hpp"

namespace pinf {

/// Element of U_{1,n} = k<x_1..x_n, y_1..y_n | x_i y_j = delta_ij> written in
/// the monoword basis y_I x_J. Letters are numbered from 1. A dynamic
/// element lives in the union U_inf and may use any index.
class UElem {
 public:
  UElem() = default;
  UElem(Field f, std::size_t n, bool dynamic = false) : field_(f), n_(n), dynamic_(dynamic) {}

  static UElem scalar(const Field& f, std::size_t n, const Scalar& c, bool dynamic = false);
  static UElem one(const Field& f, std::size_t n, bool dynamic = false) {
    return scalar(f, n, Scalar::one(f), dynamic);
  }
  static UElem monoword(const Field& f, std::size_t n, const Monoword& m, const Scalar& c,
                        bool dynamic = false);
  static UElem x(const Field& f, std::size_t n, Letter i, bool dynamic = false);
  static UElem y(const Field& f, std::size_t n, Letter i, bool dynamic = false);
  static UElem x_word(const Field& f, std::size_t n, const Word& w, bool dynamic = false);
  static UElem y_word(const Field& f, std::size_t n, const Word& w, bool dynamic = false);
  /// e_n = 1 - sum_{i=1}^n y_i x_i.
  static UElem idempotent(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  bool dynamic() const { return dynamic_; }
  const std::map<Monoword, Scalar>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest letter index occurring (0 for scalars).
  Letter max_index() const;
  std::size_t x_degree() const;
  std::size_t degree() const;

  void add_term(const Monoword& m, const Scalar& c);
  Scalar coefficient(const Monoword& m) const;

  UElem operator+(const UElem& o) const;
  UElem operator-(const UElem& o) const;
  UElem operator*(const UElem& o) const;
  UElem operator-() const;
  UElem scaled(const Scalar& c) const;
  bool operator==(const UElem& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  UElem joined(const UElem& o) const;

  Field field_;
  std::size_t n_ = 1;
  bool dynamic_ = false;
  std::map<Monoword, Scalar> terms_;
};

/// (y_I x_J)(y_K x_L): x_J y_K cancels pairwise from the inside; a mismatch
/// gives zero.
std::optional<Monoword> u_mul(const Monoword& a, const Monoword& b);

/// A letter of the word x_i or y_i.
struct Token {
  LetterKind kind;
  Letter index;
  bool operator==(const Token&) const = default;
  bool operator<(const Token& o) const {
    return kind != o.kind ? kind < o.kind : index < o.index;
  }
};
using LetterWord = std::vector<Token>;

enum class SiteOrder { Leftmost, Rightmost };

/// Rewrites a linear combination of arbitrary letter words to its normal
/// form in V_{1,n} using x_i y_j -> delta_ij and y_n x_n -> 1 - sum_{i<n} y_i x_i,
/// always firing the leftmost (or rightmost) available site.
UElem reduce_letter_words(const Field& f, std::size_t n,
                          const std::vector<std::pair<LetterWord, Scalar>>& terms, SiteOrder order);
LetterWord to_letter_word(const Monoword& m);

/// Normal form in V_{1,n} = U_{1,n} / (e_n): no monoword has both I ending
/// and J starting with n. Zero iff the input lies in the ideal.
UElem v_normal_form(const UElem& a, SiteOrder order = SiteOrder::Leftmost);

struct UWitness {
  UElem beta;
  UElem gamma;
};

/// beta, gamma with beta * a * gamma = 1 in V_{1,n}; throws MathError when a
/// lies in the ideal generated by e_n.
UWitness v_witness(const UElem& a);

/// beta, gamma with beta * a * gamma = 1 in U_inf, using one fresh letter
/// beyond every index in use (and beyond n).
UWitness uinf_witness(const UElem& a);

/// The same element in k<X><Y; tau, delta> with letters shifted to start at 0.
SkewElem<FreeElem> to_skew(const UElem& a);
UElem from_skew(const SkewElem<FreeElem>& s, std::size_t n);

}  // namespace pinf
