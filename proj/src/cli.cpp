#include "pinf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "pinf/acceptance.hpp"
#include "pinf/certificate.hpp"
#include "pinf/expr.hpp"
#include "pinf/json.hpp"
#include "pinf/random.hpp"

namespace pinf {

namespace {

struct Output {
  Json json;
  std::string text;
  int code = 0;
};

struct Settings {
  std::string field = "q";
  std::size_t n = 2;
  int precision = 16;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string verify_cert;

  // Per-command options.
  std::vector<std::string> exprs;
  std::string backend = "exact";
  std::size_t length = 4;
  Letter letter = 0;
  std::string order = "leftmost";
  bool infinite = false;
  std::size_t bound = 64;
  bool assume_confluent = false;
  long from = 0, to = 0, mult = 0;
  int t_index = 1;
  bool tamper = false;
  std::size_t samples = 0;
  std::string file;
  std::vector<int> criteria;
  bool timings = false;
};

class Context {
 public:
  explicit Context(Settings& s) : s_(s) {}

  Field field() const { return Field::parse(s_.field); }
  Domain domain() const {
    Domain d{field(), s_.n, false};
    d.precision = s_.precision;
    return d;
  }
  Expr parse(const std::string& text) {
    current_ = text;
    Expr e = parse_expr(text);
    current_.clear();
    return e;
  }
  const std::string& current() const { return current_; }
  bool truncated() const {
    if (s_.backend != "exact" && s_.backend != "truncated")
      throw InputError("--backend must be 'exact' or 'truncated'");
    return s_.backend == "truncated";
  }

 private:
  Settings& s_;
  std::string current_;
};

Json decision_json(const Decision& d) { return d.precision ? Json(*d.precision) : Json(nullptr); }

std::string render_matrix(const SkewMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "    [";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].to_string();
    s += "]\n";
  }
  return s;
}

std::string render_report(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    s += std::string("  ") + (!c.applicable ? "n/a " : c.pass ? "ok  " : "FAIL") + "  " + c.name;
    if (!c.detail.empty()) s += "  (" + c.detail + ")";
    s += "\n";
  }
  return s;
}

// ------------------------------------------------------------------ series

Output series_result(const LinRep& r, const std::string& input, std::size_t length) {
  Output o;
  auto poly = r.as_polynomial();
  FreeElem head = r.truncation(length);
  o.json = Json{{"input", input},
                {"series", to_json(r)},
                {"polynomial", poly.has_value()},
                {"expansion", Json{{"length", length}, {"terms", to_json(head)["terms"]}}}};
  if (poly) {
    o.text = poly->to_string() + "\n";
  } else {
    o.text = (head.is_zero() ? "0" : head.to_string()) + " + O(" + std::to_string(length) + ")\n" +
             "rational series of dimension " + std::to_string(r.dim()) + "\n";
  }
  return o;
}

Output truncated_result(const TruncSeries& t, const std::string& input) {
  Output o;
  o.json = Json{{"input", input}, {"backend", "truncated"}, {"series", to_json(t)}};
  FreeElem p = t.to_poly();
  o.text = (p.is_zero() ? "0" : p.to_string()) + " + O(" + std::to_string(t.precision()) + ")\n";
  return o;
}

Output series_eval(Context& c, Settings& s, int mode) {
  const std::string& text = s.exprs.at(0);
  Expr e = c.parse(text);
  Domain d = c.domain();
  if (c.truncated()) {
    TruncSeries t = eval_truncated(e, d);
    if (mode == 1) t = t.inverse();
    if (mode == 2) t = t.transduce(s.letter);
    return truncated_result(t, text);
  }
  LinRep r = eval_series(e, d);
  if (mode == 1) r = r.inverse();
  if (mode == 2) {
    if (s.letter >= d.letters) throw InputError("--letter must be below --n");
    r = r.transduce(s.letter);
  }
  return series_result(r, text, s.length);
}

Output series_equal(Context& c, Settings& s) {
  if (s.exprs.size() != 2) throw InputError("series equal takes two expressions");
  Expr a = c.parse(s.exprs[0]), b = c.parse(s.exprs[1]);
  Domain d = c.domain();
  Decision dec;
  if (c.truncated()) {
    TruncSeries diff = eval_truncated(a, d) - eval_truncated(b, d);
    dec = Decision{diff.is_zero(), diff.precision()};
  } else {
    dec = Decision{eval_series(a, d) == eval_series(b, d), std::nullopt};
  }
  Output o;
  o.json = Json{{"left", s.exprs[0]}, {"right", s.exprs[1]}, {"equal", dec.value}, {"precision", decision_json(dec)}};
  o.text = dec.to_string() + "\n";
  return o;
}

// ------------------------------------------------------------------ skew

Output skew_mul(Context& c, Settings& s) {
  Domain d = c.domain();
  SkewElem<LinRep> p = SkewElem<LinRep>::one(d);
  for (const auto& t : s.exprs) p = p * eval_skew(c.parse(t), d);
  Output o;
  o.json = Json{{"factors", s.exprs}, {"product", to_json(p)}};
  o.text = p.to_string() + "\n";
  return o;
}

Decision skew_decide(Context& c, const Expr& a, const Expr& b, bool equality) {
  Domain d = c.domain();
  if (c.truncated()) {
    auto x = eval_skew_truncated(a, d);
    return equality ? t_equal(x, eval_skew_truncated(b, d)) : ideal_member(x);
  }
  auto x = eval_skew(a, d);
  return equality ? t_equal(x, eval_skew(b, d)) : ideal_member(x);
}

Output skew_member(Context& c, Settings& s) {
  if (s.exprs.size() != 1) throw InputError("skew member takes one expression");
  Expr a = c.parse(s.exprs[0]);
  Decision dec = skew_decide(c, a, a, false);
  Output o;
  o.json = Json{{"input", s.exprs[0]}, {"member", dec.value}, {"precision", decision_json(dec)}};
  o.text = dec.to_string() + "\n";
  return o;
}

Output skew_equal(Context& c, Settings& s) {
  if (s.exprs.size() != 2) throw InputError("skew equal takes two expressions");
  Decision dec = skew_decide(c, c.parse(s.exprs[0]), c.parse(s.exprs[1]), true);
  Output o;
  o.json = Json{{"left", s.exprs[0]}, {"right", s.exprs[1]}, {"equal", dec.value}, {"precision", decision_json(dec)}};
  o.text = dec.to_string() + "\n";
  return o;
}

std::string json_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

Output certificate_output(const Json& cert) {
  CertificateCheck chk = verify_certificate(cert);
  if (!chk.valid) throw Error("issued certificate failed verification: " + chk.detail);
  Output o;
  o.json = cert;
  o.text = "beta  = " + json_text(cert["beta"]) + "\ngamma = " + json_text(cert["gamma"]) +
           "\ncheck: beta*alpha*gamma = " + json_text(cert["check"]) + " in " + chk.kind + "\n";
  return o;
}

Output skew_witness(Context& c, Settings& s) {
  if (s.exprs.size() != 1) throw InputError("skew witness takes one expression");
  c.parse(s.exprs[0]);
  return certificate_output(t_certificate(s.exprs[0], c.domain()));
}

// ------------------------------------------------------------------ leavitt

Output leavitt_nf(Context& c, Settings& s) {
  if (s.exprs.size() != 1) throw InputError("leavitt nf takes one expression");
  if (s.order != "leftmost" && s.order != "rightmost") throw InputError("--order must be leftmost or rightmost");
  UElem a = eval_leavitt(c.parse(s.exprs[0]), c.field(), s.n);
  UElem nf = v_normal_form(a, s.order == "leftmost" ? SiteOrder::Leftmost : SiteOrder::Rightmost);
  Output o;
  o.json = Json{{"input", s.exprs[0]}, {"n", s.n}, {"normal_form", to_json(nf)}, {"in_ideal", nf.is_zero()}};
  o.text = nf.to_string() + "\n";
  return o;
}

Output leavitt_witness(Context& c, Settings& s) {
  if (s.exprs.size() != 1) throw InputError("leavitt witness takes one expression");
  c.parse(s.exprs[0]);
  Json cert = s.infinite ? uinf_certificate(s.exprs[0], c.field(), s.n) : v_certificate(s.exprs[0], c.field(), s.n);
  return certificate_output(cert);
}

// ------------------------------------------------------------------ k0

Json images_json(const MonoidPresentation& p, const AbGroup& g) {
  Json m = Json::object();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Json v = Json::array();
    for (const auto& z : g.images[i]) v.push_back(z.fits_slong_p() ? Json(z.get_si()) : Json(z.get_str()));
    m[p.generators[i]] = v;
  }
  return m;
}

Output k0_command(Context&, Settings& s, bool monoid) {
  if (s.exprs.size() != 1) throw InputError("expected one presentation such as \"I | 3I = I\"");
  MonoidPresentation p = MonoidPresentation::parse(s.exprs[0]);
  AbGroup g = grothendieck_group(p);
  Json gj = to_json(g);
  Output o;
  o.json = Json{{"presentation", p.to_string()},
                {"invariant_factors", gj["invariant_factors"]},
                {"generators", images_json(p, g)},
                {"generator_images", images_json(p, g)},
                {"group", g.to_string()},
                {"order", gj["order"]}};
  std::ostringstream t;
  t << "K0 = " << g.to_string() << "\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    t << "[" << p.generators[i] << "] -> (";
    for (std::size_t k = 0; k < g.images[i].size(); ++k) t << (k ? ", " : "") << g.images[i][k].get_str();
    t << ")\n";
  }
  if (monoid) {
    MonoidShapeReport r = analyze_pisr_shape(p, s.bound, s.assume_confluent);
    o.json["shape_report"] = to_json(r);
    t << "shape: " << r.shape();
    if (!r.overflow) t << " (" << r.elements << " elements)";
    t << "\n";
    for (const auto& n : r.notes) t << "note: " << n << "\n";
  }
  o.text = t.str();
  return o;
}

// ------------------------------------------------------------------ realize

// Polynomial in the generator variables Z_i (stored with letter i).
std::string z_text(const FreeElem& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    s += format_term(c, w.to_string('Z'), first);
    first = false;
  }
  return s;
}

std::optional<Field> explicit_field(const CLI::App& app, const Context& c) {
  if (app.get_option("--field")->count() == 0) return std::nullopt;
  return c.field();
}

Output realize_build(const CLI::App& app, Context& c, Settings& s, bool verify_only) {
  HomSpec spec{s.from, s.to, s.mult};
  spec.validate();
  GeneratorMatrices g = build_generators(spec, explicit_field(app, c), s.t_index);
  if (s.tamper) g = tampered(g);
  VerificationReport rep = verify_generators(g);
  Output o;
  std::ostringstream t;
  t << spec.to_string() << ": construction " << g.construction << ", " << g.size << " x " << g.size
    << " matrices over " << g.domain.field.name() << (g.quotient ? ", modulo the ideal generated by e" : "")
    << "\n";
  if (!verify_only) {
    o.json["generators"] = to_json(g);
    for (std::size_t k = 0; k < g.labels.size(); ++k) {
      t << "  A" << g.labels[k] << " =\n" << render_matrix(g.a[k]);
      t << "  B" << g.labels[k] << " =\n" << render_matrix(g.b[k]);
    }
    t << "  E =\n" << render_matrix(g.e);
  } else {
    o.json["spec"] = to_json(spec);
    o.json["construction"] = g.construction;
    o.json["tampered"] = s.tamper;
  }
  o.json["report"] = to_json(rep);
  t << render_report(rep);
  bool ok = rep.all_pass();

  if (verify_only && s.samples > 0) {
    if (g.construction != 1 && g.construction != 2)
      throw InputError("--samples applies to the first two constructions only");
    Random r(s.seed);
    Domain zd{Field::rationals(), g.a.size(), false};
    Json samples = Json::array();
    for (std::size_t k = 0; k < s.samples; ++k) {
      std::size_t rr = static_cast<std::size_t>(r.integer(1, 2));
      std::vector<std::vector<FreeElem>> p(rr, std::vector<FreeElem>(rr, FreeElem::zero(zd)));
      Json pj = Json::array();
      for (auto& row : p) {
        Json rj = Json::array();
        for (auto& v : row) {
          v = r.polynomial(zd, 2, 2, true);
          rj.push_back(z_text(v));
        }
        pj.push_back(rj);
      }
      SigmaCertificate cert = spot_check_sigma_prime(g, p);
      ok = ok && cert.ok();
      samples.push_back(Json{{"p", pj},
                             {"rows", cert.rows},
                             {"right_identity", cert.right_identity},
                             {"left_identity", cert.left_identity}});
      t << "  " << (cert.ok() ? "ok  " : "FAIL") << "  I + p(A) invertible for p = " << pj.dump() << "\n";
    }
    o.json["seed"] = s.seed;
    o.json["sigma_samples"] = samples;
  }
  o.json["all_pass"] = ok;
  t << (ok ? "all identities hold\n" : "verification FAILED\n");
  o.text = t.str();
  o.code = ok ? 0 : 1;
  return o;
}

Json read_json_file(const std::string& path, std::istream* in) {
  std::string content;
  if (path == "-") {
    std::istream& is = in ? *in : std::cin;
    content.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    content.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

Output realize_chain(Settings& s, std::istream* in) {
  Json j = read_json_file(s.file, in);
  std::vector<CyclicGroup> groups;
  std::vector<std::vector<std::vector<long>>> maps;
  try {
    for (const auto& g : j.at("groups"))
      groups.push_back(CyclicGroup{g.at("cyclic").get<std::vector<long>>(), g.at("u").get<std::vector<long>>()});
    for (const auto& m : j.at("maps")) maps.push_back(m.get<std::vector<std::vector<long>>>());
  } catch (const Json::exception& e) {
    throw InputError(s.file + ": expected {\"groups\": [{\"cyclic\": [...], \"u\": [...]}, ...], \"maps\": [...]}: " +
                     e.what());
  }
  ChainPlan plan = plan_chain(groups, maps);
  Output o;
  o.json["plan"] = to_json(plan);
  std::ostringstream t;
  bool ok = true;
  Json reports = Json::array();
  for (const ChainStep& st : plan.steps) {
    Field f = Field::rational_functions(static_cast<int>(st.step) + 1);
    t << "step " << st.step << " over " << st.field << (st.matches_transition ? "" : " (transition mismatch)")
      << "\n";
    ok = ok && st.matches_transition && st.u_compatible;
    Json step = Json::array();
    for (std::size_t jj = 0; jj < st.specs.size(); ++jj)
      for (std::size_t i = 0; i < st.specs[jj].size(); ++i) {
        const HomSpec& spec = st.specs[jj][i];
        int k = spec.construction();
        auto g = build_generators(spec, k == 1 || k == 4 ? std::optional<Field>(f) : std::nullopt,
                                  static_cast<int>(st.step) + 1);
        VerificationReport rep = verify_generators(g);
        ok = ok && rep.all_pass();
        step.push_back(Json{{"source", i},
                            {"target", jj},
                            {"spec", to_json(spec)},
                            {"construction", k},
                            {"field", g.domain.field.name()},
                            {"report", to_json(rep)}});
        t << "  " << (rep.all_pass() ? "ok  " : "FAIL") << "  component " << i << " -> " << jj << ": "
          << spec.to_string() << " (construction " << k << ")";
        if (auto f1 = rep.first_failure()) t << ": " << *f1;
        t << "\n";
      }
    reports.push_back(step);
  }
  for (const auto& n : plan.notes) t << "note: " << n << "\n";
  o.json["reports"] = reports;
  o.json["all_pass"] = ok;
  t << (ok ? "chain verified\n" : "chain verification FAILED\n");
  o.text = t.str();
  o.code = ok ? 0 : 1;
  return o;
}

// ------------------------------------------------------------------ selftest

Output selftest(Settings& s) {
  auto results = run_acceptance(s.seed, s.criteria);
  Output o;
  Json list = Json::array();
  std::ostringstream t;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    Json x{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    if (s.timings) {
      x["seconds"] = r.seconds;
      x["limit_seconds"] = r.limit_seconds;
      t << format_result(r) << "\n";
    } else {
      t << (r.pass ? "PASS" : "FAIL") << "  criterion " << (r.id < 10 ? " " : "") << r.id << "  " << r.name
        << "  " << r.detail << "\n";
    }
    list.push_back(x);
  }
  t << passed << "/" << results.size() << " criteria passed\n";
  o.json = Json{{"seed", s.seed}, {"criteria", list}, {"passed", passed}, {"total", results.size()}};
  o.text = t.str();
  o.code = passed == results.size() ? 0 : 1;
  return o;
}

Output verify_cert(Settings& s, std::istream* in) {
  Json j = read_json_file(s.verify_cert, in);
  std::vector<Json> certs;
  if (j.is_array())
    certs.assign(j.begin(), j.end());
  else if (j.is_object() && j.contains("certificate"))
    certs.push_back(j["certificate"]);
  else
    certs.push_back(j);
  Output o;
  Json results = Json::array();
  bool ok = !certs.empty();
  for (const auto& cert : certs) {
    CertificateCheck chk = verify_certificate(cert);
    ok = ok && chk.valid;
    results.push_back(Json{{"valid", chk.valid}, {"kind", chk.kind}, {"detail", chk.detail}});
    o.text += std::string(chk.valid ? "certificate verified: " : "certificate rejected: ") + chk.detail + "\n";
  }
  o.json = certs.size() == 1 && !j.is_array() ? results[0] : Json{{"valid", ok}, {"certificates", results}};
  o.code = ok ? 0 : 1;
  return o;
}

void caret(std::ostream& err, const std::string& text, std::size_t column) {
  err << "  " << text << "\n  " << std::string(column > 0 ? column - 1 : 0, ' ') << "^\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream* in) {
  Settings s;
  Context ctx(s);
  std::function<Output()> action;

  CLI::App app{"Exact computation with rational series, skew extensions, Leavitt algebras and their K0.", "pinf"};
  app.require_subcommand(0, 1);
  app.add_option("--field", s.field, "coefficient field: q, fp:<p>, qt:<r> or fpt:<p>:<r>");
  app.add_option("--n", s.n, "number of letters")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  app.add_option("--precision", s.precision, "truncation precision")->check(CLI::Range(1, 64));
  app.add_option("--seed", s.seed, "seed for randomized checks");
  app.add_flag("--json", s.json, "print JSON");
  app.add_option("--verify-cert", s.verify_cert, "re-check a certificate file ('-' for standard input)");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Output()> f) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->fallthrough();
    g->require_subcommand(1);
    return g;
  };
  auto exprs = [&](CLI::App* sub, const std::string& help) { sub->add_option("expr", s.exprs, help)->required(); };
  auto backend = [&](CLI::App* sub) {
    sub->add_option("--backend", s.backend, "exact (rational series) or truncated");
  };

  CLI::App* series = group("series", "rational series in x0..x{n-1}");
  CLI::App* x = leaf(series, "eval", "evaluate an expression", [&] { return series_eval(ctx, s, 0); });
  exprs(x, "expression");
  backend(x);
  x->add_option("--length", s.length, "show coefficients of words shorter than this");
  x = leaf(series, "invert", "invert a series with nonzero constant term", [&] { return series_eval(ctx, s, 1); });
  exprs(x, "expression");
  backend(x);
  x->add_option("--length", s.length, "show coefficients of words shorter than this");
  x = leaf(series, "transduce", "right transduction: coefficient of w becomes that of w x_i",
           [&] { return series_eval(ctx, s, 2); });
  exprs(x, "expression");
  backend(x);
  x->add_option("--letter", s.letter, "index i of x_i")->required();
  x->add_option("--length", s.length, "show coefficients of words shorter than this");
  x = leaf(series, "equal", "decide equality of two series", [&] { return series_equal(ctx, s); });
  exprs(x, "two expressions");
  backend(x);

  CLI::App* skew = group("skew", "the skew extension S over rational series and its quotient T = S/(e)");
  x = leaf(skew, "mul", "multiply in S", [&] { return skew_mul(ctx, s); });
  exprs(x, "factors");
  x = leaf(skew, "member", "decide membership in the ideal generated by e", [&] { return skew_member(ctx, s); });
  exprs(x, "expression");
  backend(x);
  x = leaf(skew, "equal", "decide equality in T", [&] { return skew_equal(ctx, s); });
  exprs(x, "two expressions");
  backend(x);
  x = leaf(skew, "witness", "beta, gamma with beta*a*gamma = 1 in T", [&] { return skew_witness(ctx, s); });
  exprs(x, "expression");

  CLI::App* leavitt = group("leavitt", "the Leavitt algebras U_{1,n} and V_{1,n}, letters from 1");
  x = leaf(leavitt, "nf", "normal form in V_{1,n}", [&] { return leavitt_nf(ctx, s); });
  exprs(x, "expression");
  x->add_option("--order", s.order, "rewrite site order: leftmost or rightmost");
  x = leaf(leavitt, "witness", "beta, gamma with beta*a*gamma = 1", [&] { return leavitt_witness(ctx, s); });
  exprs(x, "expression");
  x->add_flag("--infinite", s.infinite, "work in U_inf (one fresh letter) instead of V_{1,n}");

  CLI::App* k0 = group("k0", "commutative monoid presentations and their Grothendieck groups");
  x = leaf(k0, "monoid", "K0 and the shape of the monoid", [&] { return k0_command(ctx, s, true); });
  exprs(x, "presentation such as \"I | 3I = I\"");
  x->add_option("--bound", s.bound, "enumeration bound");
  x->add_flag("--assume-confluent", s.assume_confluent, "enumerate several relations anyway");
  x = leaf(k0, "group", "Grothendieck group only", [&] { return k0_command(ctx, s, false); });
  exprs(x, "presentation such as \"I | 3I = I\"");

  CLI::App* realize = group("realize", "generator matrices for maps Z_n -> Z_m and chains of them");
  auto hom = [&](CLI::App* sub) {
    sub->add_option("--from", s.from, "source tag n (0 for Z)")->required();
    sub->add_option("--to", s.to, "target tag m (0 for Z)")->required();
    sub->add_option("--mult", s.mult, "multiplier")->required();
    sub->add_option("--t-index", s.t_index, "index k of the indeterminate t_k");
  };
  x = leaf(realize, "build", "build and verify the matrices", [&] { return realize_build(app, ctx, s, false); });
  hom(x);
  x = leaf(realize, "verify", "verify the identities only", [&] { return realize_build(app, ctx, s, true); });
  hom(x);
  x->add_flag("--tamper", s.tamper, "swap B0 and B1 first (negative control)");
  x->add_option("--samples", s.samples, "random invertibility spot checks (uses --seed)");
  x = leaf(realize, "chain", "plan and verify a chain of groups", [&] { return realize_chain(s, in); });
  x->add_option("plan", s.file, "JSON file with groups and maps ('-' for standard input)")->required();

  x = leaf(&app, "selftest", "run the acceptance criteria", [&] { return selftest(s); });
  x->add_option("criteria", s.criteria, "criterion numbers (all by default)");
  x->add_flag("--timings", s.timings, "include run times (output is then not reproducible)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }

  auto fail = [&](int code, const std::string& msg, std::optional<std::size_t> column) {
    err << "error: " << msg << "\n";
    if (column && !ctx.current().empty()) caret(err, ctx.current(), *column);
    if (s.json) {
      Json j{{"error", msg}, {"exit_code", code}};
      if (column) j["column"] = *column;
      out << j.dump(2) << "\n";
    }
    return code;
  };

  try {
    Output o;
    if (!s.verify_cert.empty())
      o = verify_cert(s, in);
    else if (action)
      o = action();
    else {
      out << app.help();
      return 2;
    }
    if (s.json)
      out << o.json.dump(2) << "\n";
    else
      out << o.text;
    return o.code;
  } catch (const ParseError& e) {
    return fail(2, e.what(), e.column());
  } catch (const InputError& e) {
    return fail(2, e.what(), std::nullopt);
  } catch (const Mismatch& e) {
    return fail(2, e.what(), std::nullopt);
  } catch (const MathError& e) {
    return fail(1, e.what(), std::nullopt);
  } catch (const std::exception& e) {
    return fail(1, std::string("internal: ") + e.what(), std::nullopt);
  }
}

}  // namespace pinf
