#include "pinf/core/word.hpp"

#include <algorithm>

#include "pinf/core/error.hpp"

namespace pinf {

Letter Alphabet::allocate() {
  if (!dynamic_) throw InputError("cannot allocate letters in a fixed alphabet");
  return origin_ + static_cast<Letter>(size_++);
}

std::string Alphabet::letter_name(Letter l) const {
  return std::string(1, kind_ == LetterKind::X ? 'x' : 'y') + std::to_string(l);
}

Word Word::operator+(const Word& o) const {
  std::vector<Letter> v;
  v.reserve(letters_.size() + o.letters_.size());
  v.insert(v.end(), letters_.begin(), letters_.end());
  v.insert(v.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(v));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

std::optional<Word> Word::left_quotient(const Word& v) const {
  if (size() > v.size() || !std::equal(letters_.begin(), letters_.end(), v.letters_.begin()))
    return std::nullopt;
  return v.drop_front(size());
}

Word Word::drop_front(std::size_t k) const {
  k = std::min(k, size());
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end()));
}

Word Word::drop_back(std::size_t k) const {
  k = std::min(k, size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.end() - static_cast<std::ptrdiff_t>(k)));
}

Word Word::take(std::size_t k) const {
  k = std::min(k, size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return letters_ <=> o.letters_;
}

std::string Word::to_string(char prefix, bool powers) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (powers && j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!powers) j = i + 1;
    if (!s.empty()) s += "*";
    s += prefix + std::to_string(letters_[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ w.size();
  for (Letter l : w) {
    h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monoword::to_string() const {
  if (y.empty() && x.empty()) return "1";
  if (y.empty()) return x.to_string('x');
  if (x.empty()) return y.to_string('y');
  return y.to_string('y') + "*" + x.to_string('x');
}

}  // namespace pinf
