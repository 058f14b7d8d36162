#include "pinf/kzero.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "pinf/core/error.hpp"

namespace pinf {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

IntVector parse_side(const std::string& side, const std::vector<std::string>& gens) {
  static const std::regex term(R"(^(\d+)?\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)$)");
  IntVector v(gens.size(), 0);
  for (const auto& raw : split(side, "+")) {
    std::string t = trim(raw);
    if (t.empty()) throw InputError("empty term in relation side '" + trim(side) + "'");
    if (t == "0") continue;
    std::smatch m;
    if (!std::regex_match(t, m, term)) throw InputError("cannot read term '" + t + "'");
    auto it = std::find(gens.begin(), gens.end(), m[2].str());
    if (it == gens.end()) throw InputError("unknown generator '" + m[2].str() + "'");
    long k = m[1].matched ? std::stol(m[1].str()) : 1;
    v[static_cast<std::size_t>(it - gens.begin())] += k;
  }
  return v;
}

std::string side_to_string(const IntVector& v, const std::vector<std::string>& gens) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[j] != 1) s += std::to_string(v[j]);
    s += gens[j];
  }
  return s.empty() ? "0" : s;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- presentations

MonoidPresentation MonoidPresentation::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw InputError("presentation needs the form 'generators | relations'");
  MonoidPresentation p;
  static const std::regex ident(R"(^[A-Za-z_][A-Za-z0-9_]*$)");
  for (const auto& g : split(text.substr(0, bar), ",")) {
    std::string name = trim(g);
    if (!std::regex_match(name, ident)) throw InputError("invalid generator name '" + name + "'");
    if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
      throw InputError("duplicate generator '" + name + "'");
    p.generators.push_back(name);
  }
  std::string rels = trim(text.substr(bar + 1));
  if (!rels.empty()) {
    for (const auto& r : split(rels, ",;")) {
      std::string rel = trim(r);
      if (rel.empty()) continue;
      auto eq = rel.find('=');
      if (eq == std::string::npos || rel.find('=', eq + 1) != std::string::npos)
        throw InputError("relation '" + rel + "' needs exactly one '='");
      p.relations.emplace_back(parse_side(rel.substr(0, eq), p.generators),
                               parse_side(rel.substr(eq + 1), p.generators));
    }
  }
  p.canonicalize();
  return p;
}

void MonoidPresentation::canonicalize() {
  for (auto& [a, b] : relations)
    if (b > a) std::swap(a, b);
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
}

std::string MonoidPresentation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < generators.size(); ++j) s += (j ? ", " : "") + generators[j];
  s += " |";
  for (std::size_t r = 0; r < relations.size(); ++r)
    s += (r ? ", " : " ") + side_to_string(relations[r].first, generators) + " = " +
         side_to_string(relations[r].second, generators);
  return s;
}

// ---------------------------------------------------------------- groups

bool AbGroup::is_finite() const {
  return std::none_of(invariant_factors.begin(), invariant_factors.end(), [](const mpz_class& d) { return d == 0; });
}

mpz_class AbGroup::order() const {
  mpz_class o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::vector<mpz_class> AbGroup::reduce(std::vector<mpz_class> v) const {
  for (std::size_t i = 0; i < v.size() && i < invariant_factors.size(); ++i)
    if (invariant_factors[i] != 0) v[i] = mod_floor(v[i], invariant_factors[i]);
  return v;
}

std::string AbGroup::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += " x ";
    s += invariant_factors[i] == 0 ? "Z" : "Z/" + invariant_factors[i].get_str();
  }
  return s;
}

AbGroup abelian_quotient(const std::vector<IntVector>& relations, std::size_t cols) {
  const std::size_t rows = relations.size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (relations[i].size() != cols) throw InputError("relation vector has wrong length");
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = relations[i][j];
  }
  // V tracks column operations: the new coordinates of x in Z^cols are x V.
  std::vector<std::vector<mpz_class>> v(cols, std::vector<mpz_class>(cols));
  for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1;

  auto col_addmul = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
  };
  auto row_addmul = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] -= q * a[src][j];
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) goto done;
      std::swap(a[t], a[pi]);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_addmul(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_addmul(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_addmul(t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:
  const std::size_t rank = t;
  AbGroup g;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < cols; ++i) {
    mpz_class d = i < rank ? mpz_class(abs(a[i][i])) : mpz_class(0);
    if (d == 1) continue;
    kept.push_back(i);
    g.invariant_factors.push_back(d);
  }
  g.images.assign(cols, {});
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t c : kept) g.images[j].push_back(v[j][c]);
  for (auto& img : g.images) img = g.reduce(img);
  // Deterministic coordinates: free columns get a positive first nonzero
  // image; cyclic columns are rescaled so the first unit image becomes 1.
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const mpz_class& d = g.invariant_factors[c];
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class x = g.images[j][c];
      if (x == 0) continue;
      if (d == 0) {
        if (x < 0)
          for (auto& img : g.images) img[c] = -img[c];
        break;
      }
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
      if (gg != 1) continue;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
      for (auto& img : g.images) img[c] = mod_floor(img[c] * inv, d);
      break;
    }
  }
  return g;
}

AbGroup grothendieck_group(const MonoidPresentation& p) {
  std::vector<IntVector> rel;
  for (const auto& [a, b] : p.relations) {
    IntVector d(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
    rel.push_back(std::move(d));
  }
  return abelian_quotient(rel, p.generators.size());
}

// ---------------------------------------------------------------- monoids

namespace {

bool degree_lex_greater(const IntVector& a, const IntVector& b) {
  long da = 0, db = 0;
  for (long x : a) da += x;
  for (long x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

struct Rule {
  IntVector lhs, rhs;
};

std::vector<Rule> orient(const MonoidPresentation& p) {
  std::vector<Rule> rules;
  for (const auto& [a, b] : p.relations) {
    if (a == b) continue;
    if (degree_lex_greater(a, b))
      rules.push_back({a, b});
    else
      rules.push_back({b, a});
  }
  return rules;
}

IntVector normal_form(IntVector v, const std::vector<Rule>& rules) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      bool fits = true;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] < r.lhs[j]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += r.rhs[j] - r.lhs[j];
      changed = true;
    }
  }
  return v;
}

}  // namespace

MonoidTable monoid_enumerate(const MonoidPresentation& p, std::size_t bound, bool assert_confluent) {
  const auto rules = orient(p);
  if (rules.size() > 1 && !assert_confluent)
    throw InputError("presentations with several relations need an asserted confluent orientation");
  const std::size_t k = p.generators.size();
  MonoidTable t;
  std::map<IntVector, std::size_t> index;
  std::deque<std::size_t> queue;
  auto visit = [&](const IntVector& v) -> std::optional<std::size_t> {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (t.elements.size() >= bound) {
      t.overflow = true;
      return std::nullopt;
    }
    index.emplace(v, t.elements.size());
    t.elements.push_back(v);
    queue.push_back(t.elements.size() - 1);
    return t.elements.size() - 1;
  };
  visit(IntVector(k, 0));
  while (!queue.empty() && !t.overflow) {
    std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < k && !t.overflow; ++g) {
      IntVector v = t.elements[e];
      v[g] += 1;
      visit(normal_form(v, rules));
    }
  }
  if (t.overflow) return t;
  const std::size_t n = t.elements.size();
  t.add.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      IntVector v = t.elements[a];
      for (std::size_t j = 0; j < k; ++j) v[j] += t.elements[b][j];
      t.add[a][b] = index.at(normal_form(v, rules));
    }
  return t;
}

std::string MonoidShapeReport::shape() const {
  if (overflow) return "undetermined (enumeration overflow)";
  if (conical.value_or(false) && simple.value_or(false) && nonzero_group.value_or(false) &&
      matches_k0.value_or(false))
    return "{0} disjoint union K0";
  if (nonzero_group.value_or(false)) return "{0} disjoint union a group";
  return "not of the form {0} disjoint union a group";
}

MonoidShapeReport analyze_pisr_shape(const MonoidPresentation& p, std::size_t bound, bool assert_confluent) {
  MonoidShapeReport r;
  r.k0 = grothendieck_group(p);
  const std::size_t k = p.generators.size();
  if (p.relations.empty()) {
    // Free commutative monoid N^k: conical, never a group off zero.
    r.overflow = true;
    r.conical = true;
    r.simple = k == 1;
    r.nonzero_group = false;
    r.matches_k0 = false;
    r.notes.push_back("free presentation: N^" + std::to_string(k) + " is infinite");
    return r;
  }
  MonoidTable t = monoid_enumerate(p, bound, assert_confluent);
  if (t.overflow) {
    r.overflow = true;
    bool no_zero_side = true;
    for (const auto& [a, b] : p.relations)
      for (const auto* side : {&a, &b})
        if (std::all_of(side->begin(), side->end(), [](long x) { return x == 0; })) no_zero_side = false;
    if (no_zero_side) {
      r.conical = true;
      r.notes.push_back("conical: no relation has a zero side");
    }
    r.notes.push_back("more than " + std::to_string(bound) + " elements; report is partial");
    return r;
  }
  const std::size_t n = t.elements.size();
  r.elements = n;

  bool conical = true;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      if (t.add[a][b] == 0) conical = false;
  r.conical = conical;

  // y <= m x for some m >= 1, for all nonzero x, y.
  bool simple = true;
  for (std::size_t x = 1; x < n && simple; ++x) {
    std::set<std::size_t> multiples;
    for (std::size_t m = x; multiples.insert(m).second;) m = t.add[m][x];
    for (std::size_t y = 1; y < n && simple; ++y) {
      bool below = false;
      for (std::size_t m : multiples) {
        for (std::size_t z = 0; z < n; ++z)
          if (t.add[y][z] == m) {
            below = true;
            break;
          }
        if (below) break;
      }
      if (!below) simple = false;
    }
  }
  r.simple = simple;

  bool group = n > 1;
  std::optional<std::size_t> unit;
  for (std::size_t a = 1; a < n && group; ++a)
    for (std::size_t b = 1; b < n; ++b)
      if (t.add[a][b] == 0) group = false;
  if (group) {
    for (std::size_t u = 1; u < n && !unit; ++u) {
      bool ok = true;
      for (std::size_t a = 1; a < n && ok; ++a) ok = t.add[u][a] == a;
      if (ok) unit = u;
    }
    if (!unit) group = false;
  }
  if (group) {
    for (std::size_t a = 1; a < n && group; ++a) {
      bool inv = false;
      for (std::size_t b = 1; b < n && !inv; ++b) inv = t.add[a][b] == *unit;
      if (!inv) group = false;
    }
  }
  r.nonzero_group = group;
  if (!group) {
    r.matches_k0 = false;
    return r;
  }
  // Compare with K_0: sending an element to the sum of its generator images
  // is a homomorphism; the nonzero part matches K_0 when it is bijective.
  bool match = r.k0.is_finite() && r.k0.order() == mpz_class(static_cast<unsigned long>(n - 1));
  std::set<std::vector<mpz_class>> seen;
  for (std::size_t a = 1; a < n && match; ++a) {
    std::vector<mpz_class> c(r.k0.invariant_factors.size());
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += t.elements[a][j] * r.k0.images[j][i];
    if (!seen.insert(r.k0.reduce(c)).second) match = false;
  }
  r.matches_k0 = match;
  if (match) r.notes.push_back("nonzero part is isomorphic to K0 via the generator images");
  return r;
}

}  // namespace pinf
