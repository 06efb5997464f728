// Command-line front end: one subcommand per capability, text or --json reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lsym/cohomology.hpp"
#include "lsym/deformation.hpp"
#include "lsym/document.hpp"

using namespace lsym;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Options {
  std::string file;
  bool json = false;
  bool serial = false;
  std::string module;
  std::size_t n = 0;
  bool by_degree = false;
  std::size_t order = 1;
  std::string lambda = "1";
  std::string params;
  std::string f, g;
};

struct Report {
  int code = kPass;
  ojson json = ojson::object();
  std::ostringstream text;
};

std::string vec_text(const Vec& v, const std::vector<BasisElement>& basis) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[k].str() + ")" + basis[k].name;
  }
  return s.empty() ? "0" : s;
}

std::string record_text(const CochainRecord& r, const GradedAlgebra& a, const std::vector<BasisElement>& values) {
  std::string s = "  ";
  if (r.last) {
    s += "(";
    for (std::size_t x : r.monomial) s += a.name(x) + " ^ ";
    if (!r.monomial.empty()) s.resize(s.size() - 3), s += " | ";
    s += a.name(*r.last) + ") -> ";
  }
  s += vec_text(r.value, values);
  if (r.degree) s += "   [degree " + r.degree->str() + "]";
  return s;
}

void print_cochain(Report& rep, const CochainComplex& c, std::size_t n, const Vec& f) {
  auto recs = cochain_records(c, n, f);
  if (recs.empty()) rep.text << "  0\n";
  for (const auto& r : recs) rep.text << record_text(r, c.algebra(), c.module().basis()) << "\n";
}

/// The module named by --module: a module file for the document's algebra, or a module declared in it.
Bimodule select_module(const Document& doc, const Options& o) {
  if (o.module.empty() || o.module == "regular") return regular_bimodule(doc.algebra);
  if (const Bimodule* m = doc.module(o.module)) return *m;
  std::ifstream in(o.module);
  if (!in) throw DocumentError("", "--module: no module named '" + o.module + "' and no such file");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("", std::string("module file: invalid JSON: ") + e.what());
  }
  return parse_module(j, doc.algebra, doc.field, "");
}

std::vector<Scalar> parse_list(const std::string& s, const char* flag) {
  std::vector<Scalar> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_scalar(item));
    } catch (const std::exception& e) {
      throw DocumentError("", std::string(flag) + ": " + e.what());
    }
  }
  return out;
}

Vec named_cochain(const Document& doc, const CochainComplex& c, const std::string& name, std::size_t arity) {
  const CochainData* d = doc.cochain(name);
  if (d == nullptr) throw DocumentError("/cochains", "unknown cochain '" + name + "'");
  return cochain_coordinates(c, *d, arity);
}

/// F_1 = Σ params_k family_k when --params is given, else the document's series.
DeformationSeries series_of(const Document& doc, const DeformationContext& ctx, const Options& o) {
  DeformationSeries s;
  auto params = parse_list(o.params, "--params");
  if (!params.empty()) {
    if (params.size() != doc.family.size())
      throw DocumentError("/family", "--params has " + std::to_string(params.size()) + " entries, the family has " +
                                         std::to_string(doc.family.size()));
    Vec f1(ctx.complex().dim(2));
    for (std::size_t k = 0; k < params.size(); ++k)
      axpy(f1, params[k], named_cochain(doc, ctx.complex(), doc.family[k], 2));
    s.terms.push_back(std::move(f1));
    return s;
  }
  for (const auto& name : doc.series) s.terms.push_back(named_cochain(doc, ctx.complex(), name, 2));
  return s;
}

ojson series_json(const CochainComplex& c, const DeformationSeries& s) {
  ojson a = ojson::array();
  for (const auto& t : s.terms) a.push_back(cochain_to_json(c, 2, t));
  return a;
}

ojson violations_json(const AxiomReport& r, const std::vector<BasisElement>& a, const std::vector<BasisElement>& third,
                      const std::vector<BasisElement>& values) {
  ojson v = ojson::array();
  for (const auto& t : r.violations)
    v.push_back(ojson{{"identity", t.identity},
                      {"triple", {a[t.i].name, a[t.j].name, third[t.l].name}},
                      {"residual", vector_to_json(t.residual, values)}});
  return v;
}

void cmd_check(const Document& doc, const Options&, Report& rep) {
  const GradedAlgebra& a = doc.algebra;
  AxiomReport r = check_left_symmetric(a);
  Z2Split z = z2_decomposition(a.factor(), a.degrees());
  ojson even = ojson::array(), odd = ojson::array();
  for (auto k : z.even) even.push_back(a.name(k));
  for (auto k : z.odd) odd.push_back(a.name(k));
  rep.json = {{"command", "check"},          {"left_symmetric", r.pass()},
              {"triples_checked", r.checked}, {"nonzero_residuals", r.violations.size()},
              {"violations", violations_json(r, a.basis(), a.basis(), a.basis())},
              {"z2", {{"even", even}, {"odd", odd}}}};
  rep.text << "left-symmetric identity: " << (r.pass() ? "pass" : "FAIL") << " (" << r.checked
           << " basis triples, " << r.violations.size() << " nonzero residuals)\n";
  for (const auto& t : r.violations)
    rep.text << "  (" << a.name(t.i) << ", " << a.name(t.j) << ", " << a.name(t.l)
             << "): residual " << vec_text(t.residual, a.basis()) << "\n";
  rep.text << "even: " << even.dump() << "  odd: " << odd.dump() << "\n";
  rep.code = r.pass() ? kPass : kNegative;
}

void cmd_lie(const Document& doc, const Options&, Report& rep) {
  const GradedAlgebra& a = doc.algebra;
  if (!check_left_symmetric(a).pass()) {
    rep.json = {{"command", "lie"}, {"left_symmetric", false}};
    rep.text << "not left-symmetric; the associated bracket is not guaranteed to be epsilon-Lie\n";
    rep.code = kNegative;
    return;
  }
  EpsilonLieAlgebra g = associated_lie(a);
  AxiomReport skew = check_epsilon_skew(g), jac = check_epsilon_jacobi(g);
  ojson table = ojson::array();
  rep.text << "bracket [x,y] = x·y - eps(a,b) y·x:\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (is_zero(g.bracket(i, j))) continue;
      table.push_back({{"left", a.name(i)}, {"right", a.name(j)}, {"value", vector_to_json(g.bracket(i, j), a.basis())}});
      rep.text << "  [" << a.name(i) << ", " << a.name(j) << "] = " << vec_text(g.bracket(i, j), a.basis()) << "\n";
    }
  rep.json = {{"command", "lie"}, {"brackets", table},
              {"skew_nonzero_residuals", skew.violations.size()}, {"jacobi_nonzero_residuals", jac.violations.size()}};
  rep.text << "epsilon-skew symmetry: " << (skew.pass() ? "pass" : "FAIL") << " (" << skew.violations.size()
           << " nonzero residuals)\n";
  rep.text << "epsilon-Jacobi identity: " << (jac.pass() ? "pass" : "FAIL") << " (" << jac.checked << " triples, "
           << jac.violations.size() << " nonzero residuals)\n";
  rep.code = skew.pass() && jac.pass() ? kPass : kNegative;
}

void cmd_bimodule(const Document& doc, const Options& o, Report& rep) {
  std::vector<std::pair<std::string, Bimodule>> mods;
  if (!o.module.empty())
    mods.emplace_back(o.module, select_module(doc, o));
  else {
    mods.emplace_back("regular", regular_bimodule(doc.algebra));
    for (const auto& m : doc.modules) mods.push_back(m);
  }
  ojson list = ojson::array();
  bool all = true;
  for (const auto& [name, m] : mods) {
    AxiomReport r = check_bimodule(m);
    BimoduleFlags fl = classify(m);
    all = all && r.pass();
    list.push_back({{"module", name},
                    {"bimodule", r.pass()},
                    {"triples_checked", r.checked},
                    {"nonzero_residuals", r.violations.size()},
                    {"antisymmetric", fl.antisymmetric},
                    {"special", fl.special},
                    {"violations", violations_json(r, doc.algebra.basis(), m.basis(), m.basis())}});
    rep.text << name << ": bimodule identities " << (r.pass() ? "pass" : "FAIL") << " (" << r.checked
             << " triples, " << r.violations.size() << " nonzero residuals); antisymmetric = "
             << (fl.antisymmetric ? "yes" : "no") << ", special = " << (fl.special ? "yes" : "no") << "\n";
  }
  rep.json = {{"command", "bimodule-check"}, {"modules", list}};
  rep.code = all ? kPass : kNegative;
}

void cmd_cohomology(const Document& doc, const Options& o, Report& rep) {
  CochainComplex c(select_module(doc, o));
  CohomologyResult h = cohomology_at(c, o.n);
  ojson by = ojson::object();
  for (const auto& [deg, d] : h.by_degree)
    by[deg.str()] = {{"dim_C", d.dim_C}, {"dim_Z", d.dim_Z}, {"dim_B", d.dim_B}, {"dim_H", d.dim_H}};
  ojson reps = ojson::array();
  for (const auto& r : h.representatives) reps.push_back(cochain_to_json(c, o.n, r));
  rep.json = {{"command", "cohomology"}, {"n", h.n}, {"dim_C", h.dim_C}, {"dim_Z", h.dim_Z},
              {"dim_B", h.dim_B}, {"dim_H", h.dim_H}, {"by_degree", by}, {"representatives", reps}};
  rep.text << "H^" << h.n << ": dim C = " << h.dim_C << ", dim Z = " << h.dim_Z << ", dim B = " << h.dim_B
           << ", dim H = " << h.dim_H << "\n";
  if (o.by_degree)
    for (const auto& [deg, d] : h.by_degree)
      rep.text << "  degree " << deg.str() << ": dim C = " << d.dim_C << ", dim Z = " << d.dim_Z
               << ", dim B = " << d.dim_B << ", dim H = " << d.dim_H << "\n";
  for (std::size_t k = 0; k < h.representatives.size(); ++k) {
    rep.text << "representative " << k + 1 << " (degree " << h.representative_degrees[k].str() << "):\n";
    print_cochain(rep, c, o.n, h.representatives[k]);
  }
}

void cmd_theorem41(const Document& doc, const Options& o, Report& rep) {
  if (o.n < 1) throw DocumentError("", "--i must be at least 1");
  CochainComplex c(select_module(doc, o));
  CEComplex ce = ce_complex_of(c.module());
  CurryingReport r = theorem41_check(c, ce, o.n);
  rep.json = {{"command", "theorem41"}, {"i", r.i}, {"dim_H_S", r.dim_H_S}, {"dim_H_CE", r.dim_H_CE},
              {"xi_rho_residual", r.xi_rho_residual}, {"d_residual", r.d_residual}, {"pass", r.pass()}};
  rep.text << "dim H^" << r.i + 1 << "(S,M) = " << r.dim_H_S << ", dim H^" << r.i << "_CE(g_S, C^1(S,M)) = "
           << r.dim_H_CE << "\n"
           << "residual nnz(psi xi(x) - rho(x) psi), summed over x: " << r.xi_rho_residual << "\n"
           << "residual nnz(psi d_CE - d psi): " << r.d_residual << "\n"
           << (r.pass() ? "pass" : "FAIL") << "\n";
  rep.code = r.pass() ? kPass : kNegative;
}

void cmd_remark42(const Document& doc, const Options& o, Report& rep) {
  CochainComplex c(select_module(doc, o));
  CEComplex ce = ce_complex_of(c.module());
  FourTermReport r = remark42_check(c, ce);
  rep.json = {{"command", "remark42"}, {"dim_Z0", r.dim_Z0}, {"dim_C0", r.dim_C0}, {"dim_H0_CE", r.dim_H0_CE},
              {"dim_H1", r.dim_H1}, {"alternating_sum", r.alternating_sum()}, {"pass", r.pass()}};
  rep.text << "dim Z^0 = " << r.dim_Z0 << ", dim C^0 = " << r.dim_C0 << ", dim H^0_CE = " << r.dim_H0_CE
           << ", dim H^1 = " << r.dim_H1 << "\nalternating sum (residual): " << r.alternating_sum() << "\n"
           << (r.pass() ? "pass" : "FAIL") << "\n";
  rep.code = r.pass() ? kPass : kNegative;
}

void cmd_deform(const Document& doc, const Options& o, Report& rep) {
  DeformationContext ctx(doc.algebra);
  DeformationSeries s = series_of(doc, ctx, o);
  ojson steps = ojson::array();
  bool ok = true;
  while (s.order() < o.order) {
    ExtendResult r = extend(ctx, s);
    const std::size_t p = s.order() + 1;
    ojson st = {{"order", p}, {"mu_zero", is_zero(r.mu)}, {"extended", r.extended}};
    rep.text << "order " << p << ": mu_" << p << (is_zero(r.mu) ? " = 0" : " != 0");
    if (!r.extended) {
      st["rank_image"] = r.rank_image;
      st["rank_augmented"] = r.rank_augmented;
      st["mu"] = cochain_to_json(ctx.complex(), 3, r.mu);
      rep.text << "; obstructed: rank(d|C^2_0) = " << r.rank_image << " < rank([d|C^2_0, mu]) = " << r.rank_augmented
               << "\n";
      steps.push_back(st);
      ok = false;
      break;
    }
    rep.text << "; F_" << p << ":\n";
    print_cochain(rep, ctx.complex(), 2, r.next);
    steps.push_back(st);
    s.terms.push_back(std::move(r.next));
  }
  rep.json = {{"command", "deform"}, {"order", s.order()}, {"integrable", ok}, {"steps", steps},
              {"series", series_json(ctx.complex(), s)}};
  rep.code = ok ? kPass : kNegative;
}

void cmd_obstruction(const Document& doc, const Options& o, Report& rep) {
  DeformationContext ctx(doc.algebra);
  DeformationSeries s = series_of(doc, ctx, o);
  ExtendResult r = extend(ctx, s);
  const bool cocycle = is_zero(ctx.complex().coboundary(3, r.mu));
  const std::size_t p = s.order() + 1;
  rep.json = {{"command", "obstruction"}, {"order", p}, {"mu_zero", is_zero(r.mu)}, {"d_mu_zero", cocycle},
              {"class_zero", r.extended}, {"rank_image", r.rank_image}, {"rank_augmented", r.rank_augmented},
              {"mu", cochain_to_json(ctx.complex(), 3, r.mu)}};
  rep.text << "mu_" << p << ":\n";
  print_cochain(rep, ctx.complex(), 3, r.mu);
  rep.text << "d(mu_" << p << ") = 0: " << (cocycle ? "yes" : "NO") << "\n"
           << "[mu_" << p << "] = 0 in H^3 (degree 0): " << (r.extended ? "yes" : "no") << " (rank " << r.rank_image
           << " -> " << r.rank_augmented << ")\n";
  rep.code = r.extended ? kPass : kNegative;
  if (!cocycle) rep.code = kInternalError;
}

void cmd_equivalent(const Document& doc, const Options& o, Report& rep) {
  DeformationContext ctx(doc.algebra);
  if (!o.f.empty() || !o.g.empty()) {
    if (o.f.empty() || o.g.empty()) throw DocumentError("", "--f and --g must be given together");
    Vec f = named_cochain(doc, ctx.complex(), o.f, 2), g = named_cochain(doc, ctx.complex(), o.g, 2);
    FirstOrderResult r = first_order_equivalent(ctx, f, g);
    rep.json = {{"command", "equivalent"}, {"mode", "first-order"}, {"equivalent", r.equivalent},
                {"rank_image", r.rank_image}, {"rank_augmented", r.rank_augmented}};
    if (r.equivalent) rep.json["phi"] = cochain_to_json(ctx.complex(), 1, r.phi);
    rep.text << o.f << " - " << o.g << (r.equivalent ? " = d(phi): equivalent" : " is not a coboundary: inequivalent")
             << " (rank " << r.rank_image << " -> " << r.rank_augmented << ")\n";
    if (r.equivalent) print_cochain(rep, ctx.complex(), 1, r.phi);
    rep.code = r.equivalent ? kPass : kNegative;
    return;
  }
  if (!doc.equivalence) throw DocumentError("/equivalence", "no --f/--g and no equivalence section");
  DeformationSeries f, g;
  EquivalenceSeries phi;
  for (const auto& n : doc.equivalence->f) f.terms.push_back(named_cochain(doc, ctx.complex(), n, 2));
  for (const auto& n : doc.equivalence->g) g.terms.push_back(named_cochain(doc, ctx.complex(), n, 2));
  for (const auto& n : doc.equivalence->phi) phi.maps.push_back(named_cochain(doc, ctx.complex(), n, 1));
  const std::size_t p = std::max({f.order(), g.order(), phi.order()});
  const bool eq = verify_equivalence(ctx, f, g, phi, p);
  rep.json = {{"command", "equivalent"}, {"mode", "series"}, {"order", p}, {"equivalent", eq}};
  rep.text << "f = Phi^-1 g(Phi x, Phi y) mod lambda^" << p + 1 << ": " << (eq ? "true" : "false") << "\n";
  rep.code = eq ? kPass : kNegative;
}

ojson certificate_json(const SimplicityCertificate& c, const GradedAlgebra& a) {
  ojson j = {{"simple", c.simple}, {"reason", c.reason}, {"multiplication_algebra_dim", c.multiplication_algebra_dim}};
  ojson ideal = ojson::array();
  for (const auto& v : c.ideal) ideal.push_back(vector_to_json(v, a.basis()));
  j["ideal"] = ideal;
  if (c.witness) {
    j["witness"] = {{"kernel_vector", vector_to_json(c.witness->kernel_vector, a.basis())},
                    {"transposed_kernel_vector", vector_to_json(c.witness->transposed_kernel_vector, a.basis())}};
  }
  return j;
}

void print_certificate(Report& rep, const SimplicityCertificate& c, const GradedAlgebra& a) {
  rep.text << (c.simple ? "simple" : "not simple") << ": " << c.reason << "\n"
           << "dim M(A) = " << c.multiplication_algebra_dim << " (n^2 = " << a.dim() * a.dim() << ")\n";
  if (!c.ideal.empty()) {
    rep.text << "proper ideal basis:\n";
    for (const auto& v : c.ideal) rep.text << "  " << vec_text(v, a.basis()) << "\n";
  }
}

void cmd_specialize(const Document& doc, const Options& o, Report& rep) {
  DeformationContext ctx(doc.algebra);
  DeformationSeries s = series_of(doc, ctx, o);
  Scalar lambda;
  try {
    lambda = parse_scalar(o.lambda);
  } catch (const std::exception& e) {
    throw DocumentError("", std::string("--lambda: ") + e.what());
  }
  try {
    GradedAlgebra b = specialize(ctx, s, lambda);
    SimplicityCertificate c = is_simple(b);
    rep.json = {{"command", "specialize"}, {"lambda", lambda.str()}, {"left_symmetric", true},
                {"algebra", algebra_to_json(b)}, {"simplicity", certificate_json(c, b)}};
    rep.text << "specialized products (lambda = " << lambda.str() << "):\n";
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        if (!is_zero(b.product(i, j)))
          rep.text << "  " << b.name(i) << "·" << b.name(j) << " = " << vec_text(b.product(i, j), b.basis()) << "\n";
    rep.text << "left-symmetric identity: pass\n";
    print_certificate(rep, c, b);
  } catch (const NotIntegrableError& e) {
    rep.json = {{"command", "specialize"}, {"lambda", lambda.str()}, {"left_symmetric", false},
                {"nonzero_residuals", e.report().violations.size()}};
    rep.text << e.what() << " (" << e.report().violations.size() << " nonzero residuals)\n";
    rep.code = kNegative;
  }
}

void cmd_simple(const Document& doc, const Options&, Report& rep) {
  SimplicityCertificate c = is_simple(doc.algebra);
  rep.json = {{"command", "simple"}};
  ojson cert = certificate_json(c, doc.algebra);
  for (auto& [k, v] : cert.items()) rep.json[k] = v;
  print_certificate(rep, c, doc.algebra);
  rep.code = c.simple ? kPass : kNegative;
}

void cmd_normalize(const Document& doc, const Options& o, Report& rep) {
  DeformationContext ctx(doc.algebra);
  NormalizeResult r = normalize_leading_term(ctx, series_of(doc, ctx, o));
  ojson steps = ojson::array();
  for (const auto& [n, phi] : r.steps) steps.push_back({{"order", n}, {"phi", cochain_to_json(ctx.complex(), 1, phi)}});
  rep.json = {{"command", "normalize"}, {"trivial", r.trivial}, {"leading_order", r.leading_order},
              {"steps", steps}, {"series", series_json(ctx.complex(), r.series)}};
  rep.text << r.steps.size() << " trivialization step(s); "
           << (r.trivial ? std::string("trivial deformation")
                         : "leading term at order " + std::to_string(r.leading_order) + " is not a coboundary")
           << "\n";
}

void cmd_format(const Document& doc, const Options&, Report& rep) {
  rep.json = document_to_json(doc);
  rep.text << print_document(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for generalized left-symmetric algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--serial", o.serial, "Run all kernels on the serial reference path");

  using Handler = void (*)(const Document&, const Options&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> cmds;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("document", o.file, "Algebra document (JSON)")->required();
    cmds.emplace_back(s, h);
    return s;
  };
  sub("check", "Check the left-symmetric identity on all basis triples", cmd_check);
  sub("lie", "Associated epsilon-Lie algebra and its axioms", cmd_lie);
  sub("bimodule-check", "Check bimodule identities; classify antisymmetric/special", cmd_bimodule)
      ->add_option("--module", o.module, "Module name in the document or module file");
  auto* coh = sub("cohomology", "Cohomology H^n(S, M)", cmd_cohomology);
  coh->add_option("--n", o.n, "Cochain degree")->required();
  coh->add_option("--module", o.module, "Module name in the document or module file");
  coh->add_flag("--by-degree", o.by_degree, "Per-degree breakdown");
  auto* t41 = sub("theorem41", "Compare H^{i+1}(S,M) with H^i_CE(g_S, C^1(S,M))", cmd_theorem41);
  t41->add_option("--i", o.n, "Lie cochain degree i >= 1")->required();
  t41->add_option("--module", o.module, "Module name in the document or module file");
  sub("remark42", "Alternating dimension sum of the four-term sequence", cmd_remark42)
      ->add_option("--module", o.module, "Module name in the document or module file");
  auto* def = sub("deform", "Extend a deformation order by order", cmd_deform);
  def->add_option("--order", o.order, "Target order p")->required();
  def->add_option("--params", o.params, "Family coefficients a,b,c,... for F_1");
  sub("obstruction", "Obstruction cocycle for the next order", cmd_obstruction)
      ->add_option("--params", o.params, "Family coefficients a,b,c,... for F_1");
  auto* eqv = sub("equivalent", "First-order equivalence, or series equivalence from the document", cmd_equivalent);
  eqv->add_option("--f", o.f, "Cochain name F");
  eqv->add_option("--g", o.g, "Cochain name G");
  auto* spz = sub("specialize", "Evaluate the series at lambda and certify the result", cmd_specialize);
  spz->add_option("--lambda", o.lambda, "Scalar value of lambda");
  spz->add_option("--params", o.params, "Family coefficients a,b,c,... for F_1");
  sub("simple", "Simplicity with certificate", cmd_simple);
  sub("normalize", "Remove coboundary leading terms by equivalences", cmd_normalize)
      ->add_option("--params", o.params, "Family coefficients a,b,c,... for F_1");
  sub("format", "Print the document in canonical form", cmd_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }
  if (o.serial) set_default_exec(Exec::serial);

  Report rep;
  try {
    Document doc = load_document(o.file);
    for (auto& [s, h] : cmds)
      if (s->parsed()) h(doc, o, rep);
  } catch (const DocumentError& e) {
    if (o.json) {
      ojson diags = ojson::array();
      for (const auto& d : e.diagnostics()) diags.push_back({{"path", d.path}, {"reason", d.reason}});
      std::cout << ojson{{"error", "input"}, {"diagnostics", diags}}.dump(2) << "\n";
    } else {
      for (const auto& d : e.diagnostics()) std::cerr << "error: " << (d.path.empty() ? "/" : d.path) << ": " << d.reason << "\n";
    }
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (o.json) std::cout << ojson{{"error", "precondition"}, {"failing_order", e.order()}, {"reason", e.what()}}.dump(2) << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (o.json)
    std::cout << rep.json.dump(2) << "\n";
  else
    std::cout << rep.text.str();
  return rep.code;
}
