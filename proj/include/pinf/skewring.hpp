#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinf/core/domain.hpp"
#include "pinf/core/word.hpp"

namespace pinf {

/// Coefficient algebra R inside k<<X>>: closed under the augmentation tau
/// (constant term) and the transductions delta_i.
template <class R>
concept CoefficientRing = requires(const R a, const R b, const Domain d, const Scalar c, Letter i,
                                   const std::vector<R> xs) {
  { R::exact } -> std::convertible_to<bool>;
  { R::zero(d) } -> std::same_as<R>;
  { R::constant(d, c) } -> std::same_as<R>;
  { R::letter(d, i) } -> std::same_as<R>;
  { R::sum(d, xs) } -> std::same_as<R>;
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a.scaled(c) } -> std::same_as<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.constant_term() } -> std::same_as<Scalar>;
  { a.transduce(i) } -> std::same_as<R>;
  { a.inverse() } -> std::same_as<R>;
  { a.order() } -> std::same_as<std::optional<std::size_t>>;
  { a.min_monomial() } -> std::same_as<Word>;
  { a.domain() } -> std::convertible_to<const Domain&>;
  { a.widened(d) } -> std::same_as<R>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// Boolean answer. Approximate backends record the truncation precision at
/// which it was decided; exact backends leave it empty.
struct Decision {
  bool value = false;
  std::optional<int> precision;

  explicit operator bool() const { return value; }
  std::string to_string() const {
    std::string s = value ? "true" : "false";
    if (precision) s += " (up to precision " + std::to_string(*precision) + ")";
    return s;
  }
};

/// The monomial x_w as a coefficient.
template <CoefficientRing R>
R word_coefficient(const Domain& d, const Word& w) {
  R r = R::constant(d, Scalar::one(d.field));
  for (Letter l : w) r = r * R::letter(d, l);
  return r;
}

/// Element sum_I y_I r_I of the skew extension S = R<Y; tau, delta>, stored as
/// the map I -> r_I with nonzero coefficients only. The relations are
/// r y_i = y_i tau(r) + delta_i(r); in particular x_i y_j = [i = j].
template <CoefficientRing R>
class SkewElem {
 public:
  using Coeff = R;

  SkewElem() = default;
  explicit SkewElem(Domain d) : dom_(std::move(d)) {}

  static SkewElem zero(const Domain& d) { return SkewElem(d); }
  static SkewElem coeff(const R& r) { return term(Word(), r); }
  static SkewElem scalar(const Domain& d, const Scalar& c) { return coeff(R::constant(d, c)); }
  static SkewElem one(const Domain& d) { return scalar(d, Scalar::one(d.field)); }
  static SkewElem x(const Domain& d, Letter i) { return coeff(R::letter(d, i)); }
  static SkewElem x_word(const Domain& d, const Word& w) { return coeff(word_coefficient<R>(d, w)); }
  static SkewElem y(const Domain& d, Letter i) { return y_word(d, Word{i}); }
  static SkewElem y_word(const Domain& d, const Word& w) {
    Domain dd = w.empty() ? d : d.covering(w.max_letter());
    return term(w, R::constant(dd, Scalar::one(d.field)));
  }
  static SkewElem term(const Word& y, const R& r) {
    Domain d = r.domain();
    if (!y.empty()) d = d.covering(y.max_letter());
    SkewElem s(d);
    if (!r.is_zero()) s.terms_.emplace(y, r.widened(d));
    return s;
  }
  /// e = 1 - sum_i y_i x_i over all letters of the domain.
  static SkewElem idempotent(const Domain& d) {
    SkewElem s = one(d);
    for (Letter i = 0; i < d.letters; ++i) s = s - y(d, i) * x(d, i);
    return s;
  }

  const Domain& domain() const { return dom_; }
  const std::map<Word, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal length of a Y-word in the support; nullopt for zero.
  std::optional<std::size_t> y_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.size();
  }
  R coefficient(const Word& y) const {
    auto it = terms_.find(y);
    return it == terms_.end() ? R::zero(dom_) : it->second;
  }

  SkewElem operator+(const SkewElem& o) const {
    Accumulator acc(Domain::join(dom_, o.dom_));
    for (const auto& [w, r] : terms_) acc.add(w, r);
    for (const auto& [w, r] : o.terms_) acc.add(w, r);
    return acc.finish();
  }
  SkewElem operator-(const SkewElem& o) const { return *this + (-o); }
  SkewElem operator-() const {
    SkewElem s = *this;
    for (auto& [w, r] : s.terms_) r = -r;
    return s;
  }
  SkewElem scaled(const Scalar& c) const {
    SkewElem s(dom_);
    if (c.is_zero()) return s;
    for (const auto& [w, r] : terms_) s.terms_.emplace(w, r.scaled(c));
    return s;
  }

  SkewElem operator*(const SkewElem& o) const {
    Accumulator acc(Domain::join(dom_, o.dom_));
    for (const auto& [I, r] : terms_) {
      for (const auto& [J, s] : o.terms_) {
        // r y_J = sum_{p < |J|} tau(r_p) y_{J[p:]} + r_{|J|}, r_{p+1} = delta_{J[p]}(r_p).
        R cur = r;
        bool alive = true;
        for (std::size_t p = 0; p < J.size(); ++p) {
          Scalar c = cur.constant_term();
          if (!c.is_zero()) acc.add(I + J.drop_front(p), s.scaled(c));
          cur = cur.transduce(J[p]);
          if (cur.is_zero()) {
            alive = false;
            break;
          }
        }
        if (alive) acc.add(I, cur * s);
      }
    }
    return acc.finish();
  }

  /// x_i * this, using x_i y_j = [i = j] on the leading Y-letter.
  SkewElem left_mul_x(Letter i) const {
    Accumulator acc(dom_.covering(i));
    for (const auto& [I, r] : terms_) {
      if (I.empty())
        acc.add(I, R::letter(dom_, i) * r);
      else if (I.front() == i)
        acc.add(I.drop_front(), r);
    }
    return acc.finish();
  }

  /// Structural equality in S (exact for exact backends).
  bool equals(const SkewElem& o) const { return (*this - o).is_zero(); }

  SkewElem widened(const Domain& d) const {
    SkewElem s(Domain::join(dom_, d));
    for (const auto& [w, r] : terms_) s.terms_.emplace(w, r.widened(s.dom_));
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, r] : terms_) {
      std::string c = r.to_string();
      bool compound = c.find(' ') != std::string::npos;
      std::string t;
      if (w.empty()) {
        t = c;
      } else if (c == "1") {
        t = w.to_string('y');
      } else if (c == "-1") {
        t = "-" + w.to_string('y');
      } else {
        t = w.to_string('y') + "*" + (compound || c[0] == '-' ? "(" + c + ")" : c);
      }
      if (!first) {
        if (t[0] == '-' && !compound)
          out += " - " + t.substr(1);
        else
          out += " + " + t;
      } else {
        out += t;
      }
      first = false;
    }
    return out;
  }

 private:
  // Gathers coefficients per Y-word and sums each bucket once.
  class Accumulator {
   public:
    explicit Accumulator(Domain d) : dom_(std::move(d)) {}
    void add(const Word& w, const R& r) {
      if (!r.is_zero()) buckets_[w].push_back(r);
    }
    SkewElem finish() {
      SkewElem s(dom_);
      for (auto& [w, rs] : buckets_) {
        R v = rs.size() == 1 ? rs.front().widened(dom_) : R::sum(dom_, rs);
        if (!v.is_zero()) s.terms_.emplace(w, std::move(v));
      }
      return s;
    }

   private:
    Domain dom_;
    std::map<Word, std::vector<R>> buckets_;
  };

  Domain dom_;
  std::map<Word, R> terms_;
};

/// Applies f to every coefficient (backend change or widening).
template <CoefficientRing R, CoefficientRing Q, class F>
SkewElem<Q> map_coefficients(const SkewElem<R>& a, const Domain& target, F f) {
  SkewElem<Q> out = SkewElem<Q>::zero(target);
  for (const auto& [w, r] : a.terms()) out = out + SkewElem<Q>::term(w, f(r));
  return out;
}

/// Membership in the ideal I generated by e. An element of Y-degree 0 lies
/// in I iff it is zero; otherwise a lies in I iff every x_i a does, and the
/// Y-degree drops at each step.
template <CoefficientRing R>
Decision ideal_member(const SkewElem<R>& a) {
  Decision d{true, std::nullopt};
  std::function<bool(const SkewElem<R>&)> rec = [&](const SkewElem<R>& b) -> bool {
    if (b.is_zero()) return true;
    if (*b.y_degree() == 0) {
      const R& r = b.terms().begin()->second;
      if constexpr (!R::exact) {
        int p = r.precision();
        d.precision = d.precision ? std::min(*d.precision, p) : p;
      }
      return r.is_zero();
    }
    for (Letter i = 0; i < b.domain().letters; ++i)
      if (!rec(b.left_mul_x(i))) return false;
    return true;
  };
  d.value = rec(a);
  if constexpr (!R::exact) {
    if (!d.precision) d.precision = a.domain().precision;
  }
  return d;
}

/// Equality in T = S/I.
template <CoefficientRing R>
Decision t_equal(const SkewElem<R>& a, const SkewElem<R>& b) {
  return ideal_member(a - b);
}

struct InvertingWord {
  Word w;              // Y-word
  std::size_t index;   // input whose product with w has nonzero constant term
};

/// For nonzero r_1..r_s finds a Y-word w with every r_j w in R and some r_i w
/// invertible: w = y_{I*} for the length-lex smallest minimal-length monomial
/// x_I among the inputs of least order.
template <CoefficientRing R>
InvertingWord inverting_y_word(const std::vector<R>& rs) {
  if (rs.empty()) throw InputError("at least one series is required");
  std::optional<std::size_t> best_order;
  std::vector<std::optional<std::size_t>> orders;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    auto o = rs[j].order();
    if (!o) throw MathError("input " + std::to_string(j + 1) + " is zero");
    orders.push_back(o);
    if (!best_order || *o < *best_order) best_order = o;
  }
  std::optional<Word> best;
  std::size_t index = 0;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    if (orders[j] != best_order) continue;
    Word m = rs[j].min_monomial();
    if (!best || m < *best) {
      best = m;
      index = j;
    }
  }
  return {best->reversed(), index};
}

template <CoefficientRing R>
struct TWitness {
  Word m;          // X-word
  SkewElem<R> g;   // m * a * g = 1 in T
};

/// Left and right multipliers showing that a nonzero element of T generates
/// the unit ideal. Throws MathError for elements of I.
template <CoefficientRing R>
TWitness<R> t_witness(const SkewElem<R>& a) {
  const Domain& dom = a.domain();
  if (ideal_member(a).value) throw MathError("element lies in the ideal generated by e");
  SkewElem<R> cur = a;
  std::vector<Letter> path;
  while (cur.y_degree().value_or(0) > 0) {
    bool moved = false;
    for (Letter i = 0; i < dom.letters; ++i) {
      SkewElem<R> next = cur.left_mul_x(i);
      if (!ideal_member(next).value) {
        cur = std::move(next);
        path.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("internal: membership recursion found no surviving branch");
  }
  Word m = Word(path).reversed();
  R r = cur.coefficient(Word());
  InvertingWord l = inverting_y_word<R>({r});
  SkewElem<R> p = SkewElem<R>::coeff(r) * SkewElem<R>::y_word(dom, l.w);
  if (p.y_degree().value_or(0) != 0) throw Error("internal: product left the coefficient ring");
  R pinv = p.coefficient(Word()).inverse();
  TWitness<R> out{m, SkewElem<R>::y_word(dom, l.w) * SkewElem<R>::coeff(pinv)};
  SkewElem<R> check = SkewElem<R>::x_word(dom, m) * a * out.g;
  if (!t_equal(check, SkewElem<R>::one(dom)).value) throw Error("internal: witness failed verification");
  return out;
}

struct WordSystemReport {
  bool valid = true;
  std::size_t s = 0;
  std::size_t residue = 0;  // s mod n
  std::vector<std::string> violations;
  std::vector<std::string> trace;
};

/// Checks sum w_i q_i = 1, q_i w_j = 0 (i != j) and q_i w_i != 0 in T, then
/// splits the system by the first letter of each w_i and recurses, which
/// forces s = 1 (mod n). Hypotheses are re-checked on every sub-system.
template <CoefficientRing R>
WordSystemReport verify_word_system(const std::vector<Word>& ws, const std::vector<SkewElem<R>>& qs,
                                    std::size_t n) {
  WordSystemReport rep;
  if (ws.empty() || ws.size() != qs.size()) {
    rep.valid = false;
    rep.violations.push_back("word and coefficient lists must be nonempty and of equal length");
    return rep;
  }
  if (n == 0) throw InputError("n must be positive");
  const Domain dom = qs.front().domain();
  rep.s = ws.size();
  rep.residue = ws.size() % n;

  std::function<bool(const std::vector<Word>&, const std::vector<SkewElem<R>>&, const std::string&)> rec =
      [&](const std::vector<Word>& w, const std::vector<SkewElem<R>>& q, const std::string& where) {
        const std::size_t s = w.size();
        const std::string tag = where.empty() ? "" : "[" + where + "] ";
        bool ok = true;
        SkewElem<R> total = SkewElem<R>::zero(dom);
        for (std::size_t i = 0; i < s; ++i) total = total + SkewElem<R>::y_word(dom, w[i]) * q[i];
        if (!t_equal(total, SkewElem<R>::one(dom)).value) {
          rep.violations.push_back(tag + "sum w_i q_i != 1");
          ok = false;
        }
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) {
            SkewElem<R> prod = q[i] * SkewElem<R>::y_word(dom, w[j]);
            bool zero = ideal_member(prod).value;
            if (i != j && !zero) {
              rep.violations.push_back(tag + "q_" + std::to_string(i + 1) + " w_" + std::to_string(j + 1) +
                                       " != 0");
              ok = false;
            } else if (i == j && zero) {
              rep.violations.push_back(tag + "q_" + std::to_string(i + 1) + " w_" + std::to_string(i + 1) +
                                       " == 0");
              ok = false;
            }
          }
        if (!ok) return false;
        if (s == 1) {
          rep.trace.push_back(tag + "s = 1");
          return true;
        }
        for (std::size_t i = 0; i < s; ++i)
          if (w[i].empty()) {
            rep.violations.push_back(tag + "w_" + std::to_string(i + 1) + " is empty although s > 1");
            return false;
          }
        std::string parts;
        std::size_t total_size = 0;
        for (Letter l = 0; l < dom.letters; ++l) {
          std::vector<Word> sw;
          std::vector<SkewElem<R>> sq;
          for (std::size_t i = 0; i < s; ++i)
            if (w[i].front() == l) {
              sw.push_back(w[i].drop_front());
              sq.push_back(q[i] * SkewElem<R>::y(dom, l));
            }
          std::string sub = (where.empty() ? "" : where + "/") + "A_" + std::to_string(l);
          if (sw.empty()) {
            rep.violations.push_back("[" + sub + "] empty part: x_" + std::to_string(l) +
                                     " annihilates every w_i");
            return false;
          }
          if (!rec(sw, sq, sub)) return false;
          parts += (parts.empty() ? "" : " + ") + std::to_string(sw.size());
          total_size += sw.size();
        }
        rep.trace.push_back(tag + "s = " + std::to_string(s) + " = " + parts + " = " +
                            std::to_string(s % n) + " (mod " + std::to_string(n) + ")");
        return total_size == s;
      };
  rep.valid = rec(ws, qs, "");
  if (rep.valid && rep.residue != 1 % n) {
    rep.valid = false;
    rep.violations.push_back("s = " + std::to_string(rep.s) + " is not 1 mod " + std::to_string(n));
  }
  return rep;
}

}  // namespace pinf
