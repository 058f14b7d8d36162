#include "pinf/core/scalar.hpp"

#include <gmp.h>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pinf {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero();
  __int128 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class m(std::to_string(p));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return std::stoull(r.get_str());
}

std::string variable_name(int nvars, int index) {
  if (nvars == 1) return "t";
  return "t" + std::to_string(index + 1);
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p))
    throw InputError("field modulus " + std::to_string(p) + " is not a supported prime");
  Field f;
  f.kind_ = FieldKind::Prime;
  f.modulus_ = p;
  return f;
}

Field Field::rational_functions(int indeterminates, std::uint64_t base_modulus) {
  if (indeterminates < 1) throw InputError("rational function field needs at least one indeterminate");
  if (base_modulus != 0) (void)prime(base_modulus);
  Field f;
  f.kind_ = FieldKind::RationalFunction;
  f.modulus_ = base_modulus;
  f.indeterminates_ = indeterminates;
  return f;
}

Field Field::parse(const std::string& spec) {
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw InputError("bad field specification '" + spec + "'");
    return std::stoull(s);
  };
  if (spec == "q") return rationals();
  if (spec.rfind("fp:", 0) == 0) return prime(number(spec.substr(3)));
  if (spec.rfind("qt:", 0) == 0) return rational_functions(static_cast<int>(number(spec.substr(3))));
  if (spec.rfind("fpt:", 0) == 0) {
    auto rest = spec.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("bad field specification '" + spec + "'");
    return rational_functions(static_cast<int>(number(rest.substr(colon + 1))),
                              number(rest.substr(0, colon)));
  }
  throw InputError("bad field specification '" + spec + "'");
}

Field Field::base() const {
  if (kind_ != FieldKind::RationalFunction) return *this;
  return modulus_ == 0 ? rationals() : prime(modulus_);
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rational:
      return "q";
    case FieldKind::Prime:
      return "fp:" + std::to_string(modulus_);
    case FieldKind::RationalFunction:
      if (modulus_ == 0) return "qt:" + std::to_string(indeterminates_);
      return "fpt:" + std::to_string(modulus_) + ":" + std::to_string(indeterminates_);
  }
  return "?";
}

// ---------------------------------------------------------------- Scalar

namespace {

std::shared_ptr<const RationalFunction> make_rf(Poly num, Poly den) {
  return std::make_shared<const RationalFunction>(std::move(num), std::move(den));
}

Poly one_poly(const Field& f) {
  return Poly::constant(f.base(), f.indeterminates(), Scalar::one(f.base()));
}

}  // namespace

Scalar::Scalar() : field_(), value_(mpq_class(0)) {}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) { return from_rational(f, mpq_class(v)); }

Scalar Scalar::from_rational(const Field& f, const mpq_class& value) {
  if (value.get_den() == 0) throw DivisionByZero();
  mpq_class q = value;
  q.canonicalize();
  switch (f.kind()) {
    case FieldKind::Rational:
      return Scalar(f, q);
    case FieldKind::Prime: {
      std::uint64_t den = reduce_mod(q.get_den(), f.modulus());
      if (den == 0) throw DivisionByZero();
      std::uint64_t num = reduce_mod(q.get_num(), f.modulus());
      return Scalar(f, mod_mul(num, mod_inv(den, f.modulus()), f.modulus()));
    }
    case FieldKind::RationalFunction: {
      Scalar c = from_rational(f.base(), q);
      return Scalar(f, make_rf(Poly::constant(f.base(), f.indeterminates(), c), one_poly(f)));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::indeterminate(const Field& f, int k) {
  if (f.kind() != FieldKind::RationalFunction || k < 1 || k > f.indeterminates())
    throw InputError("indeterminate t" + std::to_string(k) + " is not in field " + f.name());
  return Scalar(f, make_rf(Poly::variable(f.base(), f.indeterminates(), k - 1), one_poly(f)));
}

const RationalFunction& Scalar::rational_function() const {
  return *std::get<std::shared_ptr<const RationalFunction>>(value_);
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rational:
      return sgn(rational()) == 0;
    case FieldKind::Prime:
      return residue() == 0;
    case FieldKind::RationalFunction:
      return rational_function().numerator().is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_.kind()) {
    case FieldKind::Rational:
      return rational() == 1;
    case FieldKind::Prime:
      return residue() == 1;
    case FieldKind::RationalFunction: {
      const auto& rf = rational_function();
      return rf.denominator().is_constant() && rf.numerator().is_constant() &&
             rf.numerator().constant_value().is_one();
    }
  }
  return false;
}

bool Scalar::is_rational_constant() const {
  if (field_.kind() == FieldKind::Rational) return true;
  if (field_.kind() == FieldKind::RationalFunction && field_.modulus() == 0) {
    const auto& rf = rational_function();
    return rf.numerator().is_constant() && rf.denominator().is_constant();
  }
  return false;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Mismatch("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

namespace {

// Both operands constant rational functions: returns the constant values.
bool both_constant(const RationalFunction& a, const RationalFunction& b) {
  return a.denominator().is_constant() && b.denominator().is_constant() &&
         a.numerator().is_constant() && b.numerator().is_constant();
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  switch (field_.kind()) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(rational() + o.rational()));
    case FieldKind::Prime:
      return Scalar(field_, mod_add(residue(), o.residue(), field_.modulus()));
    case FieldKind::RationalFunction: {
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      if (a.numerator().is_zero()) return o;
      if (b.numerator().is_zero()) return *this;
      if (both_constant(a, b)) {
        Scalar s = a.numerator().constant_value() + b.numerator().constant_value();
        return Scalar(field_, make_rf(Poly::constant(field_.base(), field_.indeterminates(), s),
                                      one_poly(field_)));
      }
      if (a.denominator() == b.denominator())
        return Scalar(field_, make_rf(a.numerator() + b.numerator(), a.denominator()));
      return Scalar(field_, make_rf(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                                    a.denominator() * b.denominator()));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::operator-() const {
  switch (field_.kind()) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(-rational()));
    case FieldKind::Prime:
      return Scalar(field_, residue() == 0 ? 0 : field_.modulus() - residue());
    case FieldKind::RationalFunction: {
      const auto& a = rational_function();
      return Scalar(field_, make_rf(-a.numerator(), a.denominator()));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (field_.kind() == FieldKind::Rational) return Scalar(field_, mpq_class(rational() - o.rational()));
  if (field_.kind() == FieldKind::Prime)
    return Scalar(field_, mod_sub(residue(), o.residue(), field_.modulus()));
  return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (field_.kind()) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(rational() * o.rational()));
    case FieldKind::Prime:
      return Scalar(field_, mod_mul(residue(), o.residue(), field_.modulus()));
    case FieldKind::RationalFunction: {
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      if (a.numerator().is_zero()) return *this;
      if (b.numerator().is_zero()) return o;
      if (is_one()) return o;
      if (o.is_one()) return *this;
      if (both_constant(a, b)) {
        Scalar s = a.numerator().constant_value() * b.numerator().constant_value();
        return Scalar(field_, make_rf(Poly::constant(field_.base(), field_.indeterminates(), s),
                                      one_poly(field_)));
      }
      if (a.denominator().is_constant() && b.denominator().is_constant())
        return Scalar(field_, make_rf(a.numerator() * b.numerator(), one_poly(field_)));
      return Scalar(field_, make_rf(a.numerator() * b.numerator(), a.denominator() * b.denominator()));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (field_.kind()) {
    case FieldKind::Rational:
      return Scalar(field_, mpq_class(1 / rational()));
    case FieldKind::Prime:
      return Scalar(field_, mod_inv(residue(), field_.modulus()));
    case FieldKind::RationalFunction: {
      const auto& a = rational_function();
      return Scalar(field_, make_rf(a.denominator(), a.numerator()));
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  switch (field_.kind()) {
    case FieldKind::Rational:
      return rational() == o.rational();
    case FieldKind::Prime:
      return residue() == o.residue();
    case FieldKind::RationalFunction: {
      const auto& a = rational_function();
      const auto& b = o.rational_function();
      return a.numerator() == b.numerator() && a.denominator() == b.denominator();
    }
  }
  return false;
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
  check_same(o);
  switch (field_.kind()) {
    case FieldKind::Rational: {
      int c = cmp(rational(), o.rational());
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case FieldKind::Prime:
      return residue() <=> o.residue();
    case FieldKind::RationalFunction:
      return to_string() <=> o.to_string();
  }
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rational:
      return rational().get_str();
    case FieldKind::Prime:
      return std::to_string(residue());
    case FieldKind::RationalFunction:
      return rational_function().to_string();
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- Poly

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(Field base, int nvars, const Scalar& c) {
  Poly p(base, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(Field base, int nvars, int index) {
  Poly p(base, nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Scalar::one(base));
  return p;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Scalar Poly::constant_value() const {
  if (terms_.empty()) return Scalar::zero(base_);
  return terms_.begin()->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(base_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(base_, nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(base_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

int Poly::degree_in(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
  return d;
}

Poly Poly::coefficient_in(int v, int k) const {
  Poly r(base_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e[v]) != k) continue;
    Exponent f = e;
    f[v] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

Poly Poly::shifted(int v, int k) const {
  Poly r(base_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[v] += k;
    r.terms_.emplace(f, c);
  }
  return r;
}

Poly Poly::divide_exact(const Poly& o) const {
  if (o.is_zero()) throw DivisionByZero();
  Poly q(base_, nvars_);
  Poly r = *this;
  const auto& le = o.leading_exponent();
  Scalar lc_inv = o.leading_coefficient().inverse();
  while (!r.is_zero()) {
    Exponent m = r.leading_exponent();
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] < le[i]) throw Error("inexact polynomial division");
      m[i] -= le[i];
    }
    Scalar c = r.leading_coefficient() * lc_inv;
    Poly t(base_, nvars_);
    t.add_term(m, c);
    q.add_term(m, c);
    r = r - t * o;
  }
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

std::string Poly::to_string(bool parenthesize_sums) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(nvars_, i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = c.field().kind() == FieldKind::Rational && sgn(c.rational()) < 0;
    Scalar mag = negative ? -c : c;
    std::string body;
    if (mono.empty())
      body = mag.to_string();
    else if (mag.is_one())
      body = mono;
    else
      body = mag.to_string() + "*" + mono;
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  if (parenthesize_sums && terms_.size() > 1) return "(" + os.str() + ")";
  return os.str();
}

namespace {

int main_variable(const Poly& a, const Poly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

Poly content_in(const Poly& p, int v) {
  Poly c(p.base(), p.nvars());
  for (int k = 0; k <= p.degree_in(v); ++k) {
    Poly ck = p.coefficient_in(v, k);
    if (ck.is_zero()) continue;
    c = gcd(c, ck);
    if (c.is_constant()) break;
  }
  return c;
}

Poly primitive_part(const Poly& p, int v) {
  if (p.is_zero()) return p;
  return p.divide_exact(content_in(p, v)).monic();
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  int db = b.degree_in(v);
  Poly lcb = b.coefficient_in(v, db);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    Poly lcr = r.coefficient_in(v, dr);
    r = r * lcb - (b * lcr).shifted(v, dr - db);
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int v = main_variable(a, b);
  Poly one = Poly::constant(a.base(), a.nvars(), Scalar::one(a.base()));
  if (v < 0) return one;
  const Poly* pa = &a;
  const Poly* pb = &b;
  if (pa->degree_in(v) < pb->degree_in(v)) std::swap(pa, pb);
  if (pb->degree_in(v) <= 0) return gcd(content_in(*pa, v), *pb);
  Poly ca = content_in(*pa, v);
  Poly cb = content_in(*pb, v);
  Poly c = gcd(ca, cb);
  Poly f = pa->divide_exact(ca);
  Poly g = pb->divide_exact(cb);
  while (true) {
    Poly r = pseudo_remainder(f, g, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      g = one;
      break;
    }
    f = std::move(g);
    g = primitive_part(r, v);
  }
  return (c * g).monic();
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.base(), den_.nvars(), Scalar::one(den_.base()));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  Scalar lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string d = den_.to_string();
  bool bare = d.find_first_of("* ") == std::string::npos;
  return num_.to_string(true) + "/" + (bare ? d : "(" + d + ")");
}

}  // namespace pinf
