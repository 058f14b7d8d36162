#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pinf {

using Letter = std::uint32_t;

enum class LetterKind { X, Y };

/// An alphabet x_o..x_{o+size-1} (or y_...). Dynamic alphabets hand out
/// fresh indices on demand and never reuse one.
class Alphabet {
 public:
  Alphabet(LetterKind kind, std::size_t size, Letter origin = 0, bool dynamic = false)
      : kind_(kind), size_(size), origin_(origin), dynamic_(dynamic) {}

  LetterKind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  Letter origin() const { return origin_; }
  bool dynamic() const { return dynamic_; }

  bool contains(Letter l) const { return l >= origin_ && (dynamic_ || l < origin_ + size_); }
  /// Next unused index; only for dynamic alphabets.
  Letter allocate();

  std::string letter_name(Letter l) const;

 private:
  LetterKind kind_;
  std::size_t size_;
  Letter origin_;
  bool dynamic_;
};

/// Element of a free monoid: a finite sequence of letter indices. Words are
/// ordered length-first, then lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> l) : letters_(l) {}
  explicit Word(std::vector<Letter> l) : letters_(std::move(l)) {}

  static Word letter(Letter l) { return Word{l}; }
  static Word power(Letter l, std::size_t k) { return Word(std::vector<Letter>(k, l)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word operator+(const Word& o) const;
  Word reversed() const;
  /// w with *this + w == v, if *this is a prefix of v.
  std::optional<Word> left_quotient(const Word& v) const;
  Word drop_front(std::size_t k = 1) const;
  Word drop_back(std::size_t k = 1) const;
  Word take(std::size_t k) const;
  Letter max_letter() const;

  std::strong_ordering operator<=>(const Word& o) const;
  bool operator==(const Word& o) const = default;

  /// "x0*x1*x1" style; empty word renders as "1".
  std::string to_string(char prefix, bool powers = true) const;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Basis element y_I x_J of the Leavitt algebra U_{1,n}.
struct Monoword {
  Word y;
  Word x;

  std::strong_ordering operator<=>(const Monoword& o) const {
    if (auto c = y <=> o.y; c != 0) return c;
    return x <=> o.x;
  }
  bool operator==(const Monoword& o) const = default;

  std::string to_string() const;
};

}  // namespace pinf
