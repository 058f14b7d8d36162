#include "pinf/leavitt.hpp"

#include <algorithm>
#include <deque>

namespace pinf {

namespace {

constexpr std::size_t kDegreeCap = 12;

void check_index(Letter i, std::size_t n, bool dynamic) {
  if (i == 0) throw InputError("letters of U are numbered from 1");
  if (!dynamic && i > n)
    throw InputError("letter index " + std::to_string(i) + " exceeds n = " + std::to_string(n));
}

std::size_t grow(std::size_t n, bool dynamic, const Word& w) {
  for (Letter l : w) check_index(l, n, dynamic);
  return dynamic ? std::max<std::size_t>(n, w.max_letter()) : n;
}

}  // namespace

// ---------------------------------------------------------------- UElem

UElem UElem::scalar(const Field& f, std::size_t n, const Scalar& c, bool dynamic) {
  UElem u(f, n, dynamic);
  u.add_term(Monoword{}, c);
  return u;
}

UElem UElem::monoword(const Field& f, std::size_t n, const Monoword& m, const Scalar& c, bool dynamic) {
  n = grow(grow(n, dynamic, m.y), dynamic, m.x);
  UElem u(f, n, dynamic);
  u.add_term(m, c);
  return u;
}

UElem UElem::x(const Field& f, std::size_t n, Letter i, bool dynamic) {
  return monoword(f, n, Monoword{Word(), Word{i}}, Scalar::one(f), dynamic);
}

UElem UElem::y(const Field& f, std::size_t n, Letter i, bool dynamic) {
  return monoword(f, n, Monoword{Word{i}, Word()}, Scalar::one(f), dynamic);
}

UElem UElem::x_word(const Field& f, std::size_t n, const Word& w, bool dynamic) {
  return monoword(f, n, Monoword{Word(), w}, Scalar::one(f), dynamic);
}

UElem UElem::y_word(const Field& f, std::size_t n, const Word& w, bool dynamic) {
  return monoword(f, n, Monoword{w, Word()}, Scalar::one(f), dynamic);
}

UElem UElem::idempotent(const Field& f, std::size_t n) {
  UElem e = one(f, n);
  for (Letter i = 1; i <= n; ++i) e.add_term(Monoword{Word{i}, Word{i}}, -Scalar::one(f));
  return e;
}

Letter UElem::max_index() const {
  Letter m = 0;
  for (const auto& [w, c] : terms_) m = std::max({m, w.y.max_letter(), w.x.max_letter()});
  return m;
}

std::size_t UElem::x_degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.x.size());
  return d;
}

std::size_t UElem::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.x.size() + w.y.size());
  return d;
}

void UElem::add_term(const Monoword& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar UElem::coefficient(const Monoword& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

UElem UElem::joined(const UElem& o) const {
  if (!(field_ == o.field_)) throw Mismatch("field mismatch: " + field_.name() + " vs " + o.field_.name());
  if (n_ != o.n_ && !dynamic_ && !o.dynamic_)
    throw Mismatch("U_{1," + std::to_string(n_) + "} vs U_{1," + std::to_string(o.n_) + "}");
  return UElem(field_, std::max(n_, o.n_), dynamic_ || o.dynamic_);
}

UElem UElem::operator+(const UElem& o) const {
  UElem r = joined(o);
  r.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

UElem UElem::operator-(const UElem& o) const { return *this + (-o); }

UElem UElem::operator*(const UElem& o) const {
  UElem r = joined(o);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : o.terms_)
      if (auto m = u_mul(a, b)) r.add_term(*m, c * d);
  return r;
}

UElem UElem::operator-() const { return scaled(-Scalar::one(field_)); }

UElem UElem::scaled(const Scalar& c) const {
  UElem r(field_, n_, dynamic_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

std::string UElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    s += format_term(c, m.to_string(), first);
    first = false;
  }
  return s;
}

std::optional<Monoword> u_mul(const Monoword& a, const Monoword& b) {
  const Word& j = a.x;
  const Word& k = b.y;
  const std::size_t c = std::min(j.size(), k.size());
  for (std::size_t p = 0; p < c; ++p)
    if (j[j.size() - 1 - p] != k[p]) return std::nullopt;
  if (j.size() >= k.size()) return Monoword{a.y, j.drop_back(c) + b.x};
  return Monoword{a.y + k.drop_front(c), b.x};
}

// ---------------------------------------------------------------- rewriting

LetterWord to_letter_word(const Monoword& m) {
  LetterWord w;
  for (Letter l : m.y) w.push_back({LetterKind::Y, l});
  for (Letter l : m.x) w.push_back({LetterKind::X, l});
  return w;
}

UElem reduce_letter_words(const Field& f, std::size_t n,
                          const std::vector<std::pair<LetterWord, Scalar>>& input, SiteOrder order) {
  std::map<LetterWord, Scalar> work;
  auto push = [&](LetterWord w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = work.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  };
  for (const auto& [w, c] : input) {
    for (const auto& t : w) check_index(t.index, n, false);
    push(w, c);
  }
  const Letter top = static_cast<Letter>(n);
  auto is_site = [&](const LetterWord& w, std::size_t p) {
    const Token& a = w[p];
    const Token& b = w[p + 1];
    if (a.kind == LetterKind::X && b.kind == LetterKind::Y) return true;
    return a.kind == LetterKind::Y && b.kind == LetterKind::X && a.index == top && b.index == top;
  };
  UElem result(f, n);
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const LetterWord w = std::move(node.key());
    const Scalar c = node.mapped();
    std::optional<std::size_t> site;
    if (w.size() >= 2) {
      if (order == SiteOrder::Leftmost) {
        for (std::size_t p = 0; p + 1 < w.size() && !site; ++p)
          if (is_site(w, p)) site = p;
      } else {
        for (std::size_t p = w.size() - 1; p-- > 0 && !site;)
          if (is_site(w, p)) site = p;
      }
    }
    if (!site) {
      std::vector<Letter> ys, xs;
      for (const auto& t : w) (t.kind == LetterKind::Y ? ys : xs).push_back(t.index);
      result.add_term(Monoword{Word(ys), Word(xs)}, c);
      continue;
    }
    const std::size_t p = *site;
    LetterWord head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    LetterWord tail(w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
    if (w[p].kind == LetterKind::X) {
      if (w[p].index == w[p + 1].index) {
        LetterWord r = head;
        r.insert(r.end(), tail.begin(), tail.end());
        push(std::move(r), c);
      }
      continue;
    }
    // y_n x_n -> 1 - sum_{i<n} y_i x_i
    LetterWord r = head;
    r.insert(r.end(), tail.begin(), tail.end());
    push(std::move(r), c);
    for (Letter i = 1; i < top; ++i) {
      LetterWord s = head;
      s.push_back({LetterKind::Y, i});
      s.push_back({LetterKind::X, i});
      s.insert(s.end(), tail.begin(), tail.end());
      push(std::move(s), -c);
    }
  }
  return result;
}

UElem v_normal_form(const UElem& a, SiteOrder order) {
  if (a.dynamic()) throw InputError("normal forms are defined for a fixed n");
  std::vector<std::pair<LetterWord, Scalar>> terms;
  for (const auto& [m, c] : a.terms()) terms.emplace_back(to_letter_word(m), c);
  return reduce_letter_words(a.field(), a.n(), terms, order);
}

// ---------------------------------------------------------------- witnesses

namespace {

// Base case: a single monoword lambda y_I x_J.
UWitness single_term(const UElem& a) {
  const auto& [m, c] = *a.terms().begin();
  const Field& f = a.field();
  return {UElem::x_word(f, a.n(), m.y.reversed()).scaled(c.inverse()), UElem::y_word(f, a.n(), m.x.reversed())};
}

// All Y-words of length <= max_len in length-lex order.
std::vector<Word> y_words(std::size_t n, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (Letter l = 1; l <= n; ++l) out.push_back(out[k] + Word{l});
    begin = end;
  }
  return out;
}

UWitness v_witness_rec(const UElem& alpha, std::size_t depth) {
  if (depth > kDegreeCap || alpha.degree() > kDegreeCap)
    throw MathError("witness search exceeded the degree cap of " + std::to_string(kDegreeCap));
  if (alpha.support_size() == 1) return single_term(alpha);
  const Field& f = alpha.field();
  const std::size_t n = alpha.n();
  const std::size_t d = alpha.support_size();

  // Right-multiply by words until only Y-letters remain.
  UElem cur = alpha;
  std::vector<Letter> k;
  while (cur.x_degree() > 0) {
    bool moved = false;
    for (Letter i = 1; i <= n; ++i) {
      UElem next = v_normal_form(cur * UElem::y(f, n, i));
      if (!next.is_zero()) {
        cur = std::move(next);
        k.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("internal: element annihilated by every y_i");
  }
  // Left-multiply by x_{L*} for the longest Y-word L: lands in k<X> with a
  // nonzero constant term.
  Word longest;
  bool have = false;
  for (const auto& [m, c] : cur.terms())
    if (!have || m.y.size() > longest.size()) {
      longest = m.y;
      have = true;
    }
  Word i_word = longest.reversed();
  UElem alpha1 = v_normal_form(UElem::x_word(f, n, i_word) * cur);

  for (const Word& j : y_words(n, alpha1.x_degree() + 2)) {
    UElem a2 = v_normal_form(alpha1 * UElem::y_word(f, n, j));
    if (a2.is_zero() || a2.support_size() >= d) continue;
    UWitness inner = v_witness_rec(a2, depth + 1);
    return {inner.beta * UElem::x_word(f, n, i_word),
            UElem::y_word(f, n, Word(k)) * UElem::y_word(f, n, j) * inner.gamma};
  }
  throw Error("internal: no word shrinks the support");
}

}  // namespace

UWitness v_witness(const UElem& a) {
  if (a.dynamic()) throw InputError("use the U_inf witness for dynamic elements");
  if (a.n() < 2) throw InputError("V_{1,n} witnesses need n >= 2");
  UElem nf = v_normal_form(a);
  if (nf.is_zero()) throw MathError("element lies in the ideal generated by e_n");
  UWitness w = v_witness_rec(nf, 0);
  if (!(v_normal_form(w.beta * a * w.gamma) == UElem::one(a.field(), a.n())))
    throw Error("internal: witness failed verification");
  return w;
}

UWitness uinf_witness(const UElem& a) {
  if (a.is_zero()) throw MathError("zero has no witness");
  const Field& f = a.field();
  const Letter fresh = static_cast<Letter>(std::max<std::size_t>(a.n(), a.max_index()) + 1);
  const Monoword* pick = nullptr;
  for (const auto& [m, c] : a.terms()) {
    if (!pick || m.y < pick->y) {
      pick = &m;
    } else if (m.y == pick->y && (m.x.size() > pick->x.size() ||
                                  (m.x.size() == pick->x.size() && m.x < pick->x))) {
      pick = &m;
    }
  }
  const Scalar lambda = a.coefficient(*pick);
  const std::size_t n = fresh;
  UWitness w{UElem::x(f, n, fresh, true) * UElem::x_word(f, n, pick->y.reversed(), true).scaled(lambda.inverse()),
             UElem::y_word(f, n, pick->x.reversed(), true) * UElem::y(f, n, fresh, true)};
  UElem widened = a + UElem(f, n, true);
  if (!(w.beta * widened * w.gamma == UElem::one(f, n, true)))
    throw Error("internal: witness failed verification");
  return w;
}

// ---------------------------------------------------------------- translation

namespace {

Word shift(const Word& w, int by) {
  std::vector<Letter> v;
  for (Letter l : w) v.push_back(static_cast<Letter>(static_cast<int>(l) + by));
  return Word(std::move(v));
}

}  // namespace

SkewElem<FreeElem> to_skew(const UElem& a) {
  Domain d{a.field(), std::max<std::size_t>(a.n(), a.max_index()), a.dynamic()};
  SkewElem<FreeElem> s = SkewElem<FreeElem>::zero(d);
  for (const auto& [m, c] : a.terms())
    s = s + SkewElem<FreeElem>::term(shift(m.y, -1), FreeElem::monomial(d, shift(m.x, -1), c));
  return s;
}

UElem from_skew(const SkewElem<FreeElem>& s, std::size_t n) {
  UElem u(s.domain().field, n, s.domain().dynamic);
  for (const auto& [y, p] : s.terms())
    for (const auto& [x, c] : p.terms()) u = u + UElem::monoword(s.domain().field, n, Monoword{shift(y, 1), shift(x, 1)}, c, s.domain().dynamic);
  return u;
}

}  // namespace pinf
