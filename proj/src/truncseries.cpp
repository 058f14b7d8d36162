#include "pinf/truncseries.hpp"

#include <algorithm>
#include <map>

namespace pinf {

TruncSeries::TruncSeries(Domain d, int precision) : dom_(std::move(d)), precision_(precision) {
  if (precision_ < 1) throw InputError("precision must be at least 1");
}

TruncSeries TruncSeries::constant(const Domain& d, const Scalar& c) {
  TruncSeries r(d);
  r.add_term(Word(), c);
  return r;
}

TruncSeries TruncSeries::letter(const Domain& d, Letter i) {
  TruncSeries r(d.covering(i), d.precision);
  r.add_term(Word{i}, Scalar::one(d.field));
  return r;
}

TruncSeries TruncSeries::from_poly(const FreeElem& p, int precision) {
  TruncSeries r(p.domain(), precision);
  for (const auto& [w, c] : p.terms()) r.add_term(w, c);
  return r;
}

TruncSeries TruncSeries::sum(const Domain& d, const std::vector<TruncSeries>& xs) {
  TruncSeries r(d);
  for (const auto& x : xs) r = r + x;
  return r;
}

void TruncSeries::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero() || static_cast<int>(w.size()) >= precision_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar TruncSeries::coefficient(const Word& w) const {
  if (static_cast<int>(w.size()) >= precision_)
    throw MathError("coefficient of " + w.to_string('x') + " is beyond precision " +
                    std::to_string(precision_));
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(dom_.field) : it->second;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(Domain::join(dom_, o.dom_), std::min(precision_, o.precision_));
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r(Domain::join(dom_, o.dom_), std::min(precision_, o.precision_));
  for (const auto& [u, a] : terms_) {
    if (static_cast<int>(u.size()) >= r.precision_) continue;
    for (const auto& [v, b] : o.terms_)
      if (static_cast<int>(u.size() + v.size()) < r.precision_) r.add_term(u + v, a * b);
  }
  return r;
}

TruncSeries TruncSeries::operator-() const { return scaled(-Scalar::one(dom_.field)); }

TruncSeries TruncSeries::scaled(const Scalar& c) const {
  TruncSeries r(dom_, precision_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [w, x] : r.terms_) x *= c;
  return r;
}

Scalar TruncSeries::constant_term() const { return coefficient(Word()); }

TruncSeries TruncSeries::transduce(Letter i) const {
  if (precision_ <= 1) throw MathError("transduction needs precision at least 2");
  TruncSeries r(dom_, precision_ - 1);
  for (const auto& [w, c] : terms_)
    if (!w.empty() && w.back() == i) r.add_term(w.drop_back(), c);
  return r;
}

TruncSeries TruncSeries::inverse() const {
  Scalar c = constant_term();
  if (c.is_zero()) throw NotInvertible("series with zero constant term is not invertible");
  const Scalar ci = c.inverse();
  // b(w) = c^-1 ([w = 1] - sum_{u v = w, u != 1} a(u) b(v)), by increasing |w|.
  std::vector<std::vector<std::pair<Word, Scalar>>> by_len(static_cast<std::size_t>(precision_));
  by_len[0].emplace_back(Word(), ci);
  std::vector<std::pair<Word, Scalar>> proper;
  for (const auto& [w, x] : terms_)
    if (!w.empty()) proper.emplace_back(w, x);
  TruncSeries r(dom_, precision_);
  r.add_term(Word(), ci);
  for (int len = 1; len < precision_ && !proper.empty(); ++len) {
    std::map<Word, Scalar> acc;
    for (const auto& [u, a] : proper) {
      if (static_cast<int>(u.size()) > len) continue;
      for (const auto& [v, bv] : by_len[static_cast<std::size_t>(len) - u.size()]) {
        auto [it, ins] = acc.try_emplace(u + v, a * bv);
        if (!ins) it->second += a * bv;
      }
    }
    for (auto& [w, s] : acc) {
      if (s.is_zero()) continue;
      Scalar val = -(s * ci);
      r.add_term(w, val);
      by_len[static_cast<std::size_t>(len)].emplace_back(w, std::move(val));
    }
  }
  return r;
}

std::optional<std::size_t> TruncSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t best = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) best = std::min(best, w.size());
  return best;
}

Word TruncSeries::min_monomial() const {
  if (terms_.empty()) throw MathError("series is zero up to precision " + std::to_string(precision_));
  const Word* best = nullptr;
  for (const auto& [w, c] : terms_)
    if (!best || w < *best) best = &w;
  return *best;
}

TruncSeries TruncSeries::widened(const Domain& d) const {
  TruncSeries r = *this;
  r.dom_ = Domain::join(dom_, d);
  return r;
}

TruncSeries TruncSeries::with_precision(int n) const {
  TruncSeries r(dom_, n);
  if (n > precision_) throw MathError("cannot raise the precision of a truncated series");
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  return r;
}

FreeElem TruncSeries::to_poly() const {
  FreeElem p(dom_);
  for (const auto& [w, c] : terms_) p.add_term(w, c);
  return p;
}

std::string TruncSeries::to_string() const {
  std::string s = terms_.empty() ? "0" : to_poly().to_string();
  return s + " + O(" + std::to_string(precision_) + ")";
}

}  // namespace pinf
