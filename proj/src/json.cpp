#include "pinf/json.hpp"

#include "pinf/expr.hpp"

namespace pinf {

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

Vector vector_from_json(const Json& j, const Field& f) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

Domain domain_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  Domain d;
  d.field = Field::parse(j.value("field", std::string("q")));
  d.letters = j.value("letters", std::size_t{1});
  d.dynamic = j.value("dynamic", false);
  return d;
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const Field& f) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>(), f);
  throw InputError("expected a scalar (string or integer), got " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row_vector(i)));
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f) {
  if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector r = vector_from_json(j[i], f);
    if (r.size() != cols) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = r[c];
  }
  return m;
}

Json to_json(const FreeElem& p) {
  Json terms = Json::object();
  for (const auto& [w, c] : p.terms()) terms[w.to_string('x')] = to_json(c);
  return Json{{"field", p.field().name()}, {"letters", p.domain().letters}, {"text", p.to_string()},
              {"terms", terms}};
}

Json to_json(const TruncSeries& s) {
  FreeElem p = s.to_poly();
  Json terms = Json::object();
  for (const auto& [w, c] : p.terms()) terms[w.to_string('x')] = to_json(c);
  return Json{{"field", s.field().name()},
              {"letters", s.domain().letters},
              {"precision", s.precision()},
              {"text", s.to_string()},
              {"terms", terms}};
}

Json to_json(const LinRep& r) {
  Json mu = Json::array();
  for (Letter i = 0; i < r.domain().letters; ++i) mu.push_back(to_json(r.mu(i)));
  return Json{{"field", r.field().name()},
              {"letters", r.domain().letters},
              {"dimension", r.dim()},
              {"lambda", vector_json(r.lambda())},
              {"mu", mu},
              {"gamma", vector_json(r.gamma())},
              {"text", r.to_string()}};
}

LinRep linrep_from_json(const Json& j) {
  Domain d = domain_from_json(j);
  Vector lambda = vector_from_json(j.at("lambda"), d.field);
  Vector gamma = vector_from_json(j.at("gamma"), d.field);
  if (lambda.size() != gamma.size()) throw InputError("lambda and gamma differ in length");
  std::vector<Matrix> mu;
  for (const auto& m : j.at("mu")) {
    Matrix x = matrix_from_json(m, d.field);
    if (x.rows() != lambda.size() || x.cols() != lambda.size())
      throw InputError("transition matrices must be " + std::to_string(lambda.size()) + " x " +
                       std::to_string(lambda.size()));
    mu.push_back(x);
  }
  if (mu.size() > d.letters) throw InputError("more transition matrices than letters");
  return LinRep(d, lambda, mu, gamma).reduced();
}

Json to_json(const SkewElem<LinRep>& s) {
  Json terms = Json::object();
  for (const auto& [w, r] : s.terms()) terms[w.to_string('y')] = to_json(r);
  return Json{{"field", s.domain().field.name()},
              {"letters", s.domain().letters},
              {"dynamic", s.domain().dynamic},
              {"text", s.to_string()},
              {"terms", terms}};
}

SkewElem<LinRep> skew_from_json(const Json& j) {
  using S = SkewElem<LinRep>;
  Domain d = domain_from_json(j);
  if (j.contains("terms")) {
    S s = S::zero(d);
    for (const auto& [key, value] : j.at("terms").items()) {
      Expr w = parse_expr(key);
      S y = eval_skew(w, d);
      if (y.terms().size() != 1 || !(y.terms().begin()->second == LinRep::one(d)))
        throw InputError("'" + key + "' is not a Y-word");
      LinRep r = value.is_string() ? eval_series(parse_expr(value.get<std::string>()), d) : linrep_from_json(value);
      s = s + S::term(y.terms().begin()->first, r);
    }
    return s;
  }
  if (j.contains("text")) return eval_skew(parse_expr(j.at("text").get<std::string>()), d);
  throw InputError("skew element needs 'terms' or 'text'");
}

Json to_json(const UElem& u) {
  Json terms = Json::object();
  for (const auto& [m, c] : u.terms()) terms[m.to_string()] = to_json(c);
  return Json{{"field", u.field().name()},
              {"n", u.n()},
              {"dynamic", u.dynamic()},
              {"text", u.to_string()},
              {"terms", terms}};
}

Json compact_json(const SkewElem<LinRep>& s) {
  for (const auto& [w, r] : s.terms())
    if (!r.as_polynomial()) return to_json(s);
  return s.to_string();
}

Json to_json(const SkewMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(compact_json(x));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const HomSpec& h) {
  Json j{{"from", h.n}, {"to", h.m}, {"mult", h.mult}, {"text", h.to_string()}};
  return j;
}

Json to_json(const GeneratorMatrices& g) {
  Json a = Json::object(), b = Json::object();
  for (std::size_t k = 0; k < g.labels.size(); ++k) {
    a[std::to_string(g.labels[k])] = to_json(g.a[k]);
    b[std::to_string(g.labels[k])] = to_json(g.b[k]);
  }
  Json spec = to_json(g.spec);
  if (g.construction == 1) spec["h"] = g.spec.h();
  return Json{{"spec", spec},
              {"construction", g.construction},
              {"field", g.domain.field.name()},
              {"letters", g.domain.letters},
              {"dynamic", g.domain.dynamic},
              {"quotient", g.quotient},
              {"size", g.size},
              {"labels", g.labels},
              {"A", a},
              {"B", b},
              {"E", to_json(g.e)}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        Json{{"identity", c.name}, {"pass", c.pass}, {"applicable", c.applicable}, {"detail", c.detail}});
  return Json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

Json to_json(const ChainPlan& p) {
  Json groups = Json::array();
  for (const auto& g : p.groups) groups.push_back(Json{{"cyclic", g.cyclic}, {"u", g.u}});
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json specs = Json::array();
    for (const auto& row : s.specs) {
      Json r = Json::array();
      for (const auto& h : row) r.push_back(to_json(h));
      specs.push_back(r);
    }
    steps.push_back(Json{{"step", s.step},
                         {"field", s.field},
                         {"specs", specs},
                         {"rebuilt", s.rebuilt},
                         {"matches_transition", s.matches_transition},
                         {"u_compatible", s.u_compatible}});
  }
  return Json{{"groups", groups}, {"steps", steps}, {"notes", p.notes}};
}

Json to_json(const AbGroup& g) {
  Json f = Json::array();
  for (const auto& d : g.invariant_factors) f.push_back(integer(d));
  return Json{{"invariant_factors", f}, {"order", g.is_finite() ? integer(g.order()) : Json("infinite")},
              {"text", g.to_string()}};
}

Json to_json(const MonoidShapeReport& r) {
  return Json{{"shape", r.shape()},
              {"elements", r.overflow ? Json(nullptr) : Json(r.elements)},
              {"overflow", r.overflow},
              {"conical", optional_bool(r.conical)},
              {"simple", optional_bool(r.simple)},
              {"nonzero_part_is_group", optional_bool(r.nonzero_group)},
              {"matches_k0", optional_bool(r.matches_k0)},
              {"notes", r.notes}};
}

}  // namespace pinf
