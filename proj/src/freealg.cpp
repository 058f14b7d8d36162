#include "pinf/freealg.hpp"

namespace pinf {

FreeElem FreeElem::constant(const Domain& d, const Scalar& c) {
  FreeElem r(d);
  r.add_term(Word(), c);
  return r;
}

FreeElem FreeElem::letter(const Domain& d, Letter i) {
  Domain dd = d.covering(i);
  return monomial(dd, Word{i}, Scalar::one(d.field));
}

FreeElem FreeElem::monomial(const Domain& d, const Word& w, const Scalar& c) {
  FreeElem r(d.covering(w.empty() ? 0 : w.max_letter()));
  r.add_term(w, c);
  return r;
}

FreeElem FreeElem::sum(const Domain& d, const std::vector<FreeElem>& xs) {
  FreeElem r(d);
  for (const auto& x : xs) r = r + x;
  return r;
}

Scalar FreeElem::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(dom_.field) : it->second;
}

void FreeElem::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElem FreeElem::operator+(const FreeElem& o) const {
  FreeElem r(Domain::join(dom_, o.dom_));
  r.terms_ = terms_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

FreeElem FreeElem::operator-(const FreeElem& o) const { return *this + (-o); }

FreeElem FreeElem::operator*(const FreeElem& o) const {
  FreeElem r(Domain::join(dom_, o.dom_));
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) r.add_term(u + v, a * b);
  return r;
}

FreeElem FreeElem::operator-() const {
  FreeElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreeElem FreeElem::scaled(const Scalar& c) const {
  if (c.is_zero()) return FreeElem(dom_);
  FreeElem r = *this;
  for (auto& [w, x] : r.terms_) x *= c;
  return r;
}

Scalar FreeElem::constant_term() const { return coefficient(Word()); }

std::optional<std::size_t> FreeElem::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size();
}

std::optional<std::size_t> FreeElem::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.size();
}

Word FreeElem::min_monomial() const {
  if (terms_.empty()) throw MathError("zero element has no monomials");
  return terms_.begin()->first;
}

FreeElem FreeElem::transduce(Letter i) const {
  FreeElem r(dom_);
  for (const auto& [w, c] : terms_)
    if (!w.empty() && w.back() == i) r.terms_.emplace(w.drop_back(), c);
  return r;
}

FreeElem FreeElem::inverse() const {
  if (terms_.size() == 1 && terms_.begin()->first.empty())
    return constant(dom_, terms_.begin()->second.inverse());
  throw NotInvertible("polynomial " + to_string() + " is not a unit of the free algebra");
}

FreeElem FreeElem::widened(const Domain& d) const {
  FreeElem r = *this;
  r.dom_ = Domain::join(dom_, d);
  return r;
}

std::string FreeElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += format_term(c, w.to_string('x'), first);
    first = false;
  }
  return s;
}

}  // namespace pinf
