#include "pinf/certificate.hpp"

#include "pinf/expr.hpp"

namespace pinf {

namespace {

using S = SkewElem<LinRep>;

// gamma = y_w * c^-1 for a T witness; written with ^-1 when c is a polynomial.
Json gamma_json(const S& g) {
  if (auto c = compact_json(g); c.is_string()) return c;
  if (g.terms().size() == 1) {
    const auto& [w, r] = *g.terms().begin();
    LinRep c = r.inverse();
    if (auto p = c.as_polynomial()) {
      std::string y = w.empty() ? "" : w.to_string('y') + "*";
      return y + "(" + p->to_string() + ")^-1";
    }
  }
  return to_json(g);
}

S skew_term(const Json& j, const Domain& d) {
  if (j.is_string()) return eval_skew(parse_expr(j.get<std::string>()), d);
  Json k = j;
  k["field"] = d.field.name();
  if (!k.contains("letters")) k["letters"] = d.letters;
  return skew_from_json(k);
}

std::string text_of(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

Json header(const char* kind, const Field& f, std::size_t n, const std::string& alpha) {
  return Json{{"kind", kind}, {"field", f.name()}, {"n", n}, {"alpha", alpha}};
}

}  // namespace

Json t_certificate(const std::string& alpha, const Domain& d) {
  S a = eval_skew(parse_expr(alpha), d);
  TWitness<LinRep> w = t_witness(a);
  Json c = header("T", d.field, d.letters, alpha);
  c["beta"] = w.m.to_string('x');
  c["gamma"] = gamma_json(w.g);
  c["product"] = "1";
  c["check"] = "1";
  return c;
}

Json v_certificate(const std::string& alpha, const Field& f, std::size_t n) {
  UElem a = eval_leavitt(parse_expr(alpha), f, n);
  UWitness w = v_witness(a);
  Json c = header("V", f, n, alpha);
  c["beta"] = w.beta.to_string();
  c["gamma"] = w.gamma.to_string();
  c["product"] = v_normal_form(w.beta * a * w.gamma).to_string();
  c["check"] = "1";
  return c;
}

Json uinf_certificate(const std::string& alpha, const Field& f, std::size_t n) {
  UElem a = eval_leavitt(parse_expr(alpha), f, n, true);
  UWitness w = uinf_witness(a);
  Json c = header("U_inf", f, n, alpha);
  c["beta"] = w.beta.to_string();
  c["gamma"] = w.gamma.to_string();
  c["product"] = (w.beta * a * w.gamma).to_string();
  c["check"] = "1";
  return c;
}

CertificateCheck verify_certificate(const Json& cert) {
  CertificateCheck r;
  try {
    if (!cert.is_object()) throw InputError("a certificate is a JSON object");
    for (const char* key : {"kind", "field", "n", "alpha", "beta", "gamma", "check"})
      if (!cert.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    r.kind = cert.at("kind").get<std::string>();
    Field f = Field::parse(cert.at("field").get<std::string>());
    std::size_t n = cert.at("n").get<std::size_t>();
    if (n == 0) throw InputError("n must be positive");

    if (r.kind == "T") {
      Domain d{f, n, false};
      S a = skew_term(cert.at("alpha"), d), b = skew_term(cert.at("beta"), d), g = skew_term(cert.at("gamma"), d);
      S p = b * a * g;
      if (!t_equal(p, skew_term(cert.at("check"), d)).value) {
        r.detail = "beta*alpha*gamma differs from check modulo the ideal generated by e";
        return r;
      }
      if (cert.contains("product") && !t_equal(p, skew_term(cert.at("product"), d)).value) {
        r.detail = "beta*alpha*gamma differs from the recorded product";
        return r;
      }
    } else if (r.kind == "V" || r.kind == "U_inf") {
      bool dynamic = r.kind == "U_inf";
      auto u = [&](const char* key) {
        return eval_leavitt(parse_expr(text_of(cert.at(key))), f, n, dynamic);
      };
      auto normal = [&](const UElem& x) { return dynamic ? x : v_normal_form(x); };
      UElem p = normal(u("beta") * u("alpha") * u("gamma"));
      if (!(p - normal(u("check"))).is_zero()) {
        r.detail = "beta*alpha*gamma = " + p.to_string() + ", expected " + text_of(cert.at("check"));
        return r;
      }
      if (cert.contains("product") && !(p - normal(u("product"))).is_zero()) {
        r.detail = "beta*alpha*gamma = " + p.to_string() + " differs from the recorded product";
        return r;
      }
    } else {
      throw InputError("unknown certificate kind '" + r.kind + "'");
    }
    r.valid = true;
    r.detail = "beta*alpha*gamma = " + text_of(cert.at("check")) + " in " + r.kind;
  } catch (const std::exception& e) {
    r.valid = false;
    r.detail = std::string("malformed certificate: ") + e.what();
  }
  return r;
}

}  // namespace pinf
