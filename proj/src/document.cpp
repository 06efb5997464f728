#include "lsym/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lsym {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string summarize(const std::vector<Diagnostic>& diags) {
  std::string s;
  for (const auto& d : diags) {
    if (!s.empty()) s += "; ";
    s += (d.path.empty() ? std::string("/") : d.path) + ": " + d.reason;
  }
  return s;
}

std::string escape(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~')
      out += "~0";
    else if (ch == '/')
      out += "~1";
    else
      out += ch;
  }
  return out;
}

std::string at(const std::string& path, const std::string& key) { return path + "/" + escape(key); }
std::string at(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

/// Collects diagnostics; fail() throws once anything was recorded.
struct Checker {
  std::vector<Diagnostic> diags;
  FieldMode field = FieldMode::gaussian;

  void add(std::string path, std::string reason) { diags.push_back({std::move(path), std::move(reason)}); }
  void fail() const {
    if (!diags.empty()) throw DocumentError(diags);
  }

  void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : j.items()) {
      bool known = false;
      for (const char* allowed : keys) known = known || k == allowed;
      if (!known) add(at(path, k), "unknown field '" + k + "'");
    }
  }

  std::optional<Scalar> scalar(const json& j, const std::string& path) {
    std::string text;
    if (j.is_string())
      text = j.get<std::string>();
    else if (j.is_number_integer())
      text = std::to_string(j.get<long long>());
    else {
      add(path, "expected a scalar string");
      return std::nullopt;
    }
    try {
      Scalar s = parse_scalar(text);
      if (field == FieldMode::rational && !s.is_real()) {
        add(path, "imaginary part in a rational document: '" + text + "'");
        return std::nullopt;
      }
      return s;
    } catch (const ParseError& e) {
      add(path, std::string("malformed scalar '") + text + "' at offset " + std::to_string(e.offset()) + ": " + e.what());
    } catch (const DomainError& e) {
      add(path, std::string("invalid scalar '") + text + "': " + e.what());
    }
    return std::nullopt;
  }

  std::optional<Degree> degree(const json& j, const GradingGroup& g, const std::string& path) {
    if (!j.is_array()) {
      add(path, "expected a degree (list of integers)");
      return std::nullopt;
    }
    if (j.size() != g.rank()) {
      add(path, "degree has " + std::to_string(j.size()) + " components, the group has " + std::to_string(g.rank()) +
                    " factors");
      return std::nullopt;
    }
    std::vector<long> comps;
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[k].is_number_integer()) {
        add(at(path, k), "expected an integer");
        return std::nullopt;
      }
      comps.push_back(j[k].get<long>());
    }
    return g.make(comps);
  }

  std::optional<std::size_t> name(const json& j, const std::vector<BasisElement>& basis, const std::string& path,
                                  const char* what) {
    if (!j.is_string()) {
      add(path, std::string("expected a ") + what + " name");
      return std::nullopt;
    }
    const auto s = j.get<std::string>();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].name == s) return k;
    add(path, std::string("unknown ") + what + " '" + s + "'");
    return std::nullopt;
  }

  std::optional<Vec> vector(const json& j, const std::vector<BasisElement>& basis, const std::string& path,
                            const char* what) {
    if (!j.is_object()) {
      add(path, "expected an object mapping names to scalars");
      return std::nullopt;
    }
    Vec v(basis.size());
    bool ok = true;
    for (const auto& [k, val] : j.items()) {
      auto idx = name(json(k), basis, at(path, k), what);
      auto s = scalar(val, at(path, k));
      if (idx && s)
        v[*idx] = *s;
      else
        ok = false;
    }
    if (!ok) return std::nullopt;
    return v;
  }

  std::vector<BasisElement> basis(const json& j, const GradingGroup& g, const std::string& path) {
    std::vector<BasisElement> out;
    if (!j.is_array()) {
      add(path, "expected a list of basis elements");
      return out;
    }
    std::set<std::string> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string p = at(path, k);
      const json& e = j[k];
      if (!e.is_object()) {
        add(p, "expected {name, degree}");
        continue;
      }
      only_keys(e, p, {"name", "degree"});
      if (!e.contains("name") || !e["name"].is_string() || e["name"].get<std::string>().empty()) {
        add(at(p, "name"), "expected a nonempty name");
        continue;
      }
      const auto nm = e["name"].get<std::string>();
      if (!seen.insert(nm).second) add(at(p, "name"), "duplicate basis name '" + nm + "'");
      if (!e.contains("degree")) {
        add(p, "missing degree");
        continue;
      }
      if (auto d = degree(e["degree"], g, at(p, "degree"))) out.push_back({nm, *d});
    }
    return out;
  }
};

void check_graded(Checker& ck, const GradingGroup& g, const Degree& want, const Vec& v,
                  const std::vector<BasisElement>& target, const std::string& path, const std::string& what) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero() && target[k].degree != want)
      ck.add(at(path, target[k].name), "grading violation: " + what + " must lie in degree " + want.str() + ", but '" +
                                           target[k].name + "' has degree " + target[k].degree.str());
  (void)g;
}

Bimodule parse_module_with(Checker& ck, const json& j, const GradedAlgebra& a, const std::string& path) {
  if (!j.is_object()) {
    ck.add(path, "expected a module object");
    ck.fail();
  }
  ck.only_keys(j, path, {"basis", "left", "right"});
  const GradingGroup& g = a.group();
  std::vector<BasisElement> basis = ck.basis(j.value("basis", json::array()), g, at(path, "basis"));
  ck.fail();
  const std::size_t n = a.dim(), d = basis.size();
  std::vector<Vec> left(n * d, Vec(d)), right(d * n, Vec(d));
  for (const char* side : {"left", "right"}) {
    if (!j.contains(side)) continue;
    const std::string sp = at(path, side);
    const json& list = j[side];
    if (!list.is_array()) {
      ck.add(sp, "expected a list of actions");
      continue;
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string p = at(sp, k);
      const json& e = list[k];
      if (!e.is_object()) {
        ck.add(p, "expected {algebra, module, value}");
        continue;
      }
      ck.only_keys(e, p, {"algebra", "module", "value"});
      auto ai = ck.name(e.value("algebra", json()), a.basis(), at(p, "algebra"), "algebra basis element");
      auto mi = ck.name(e.value("module", json()), basis, at(p, "module"), "module basis element");
      auto v = ck.vector(e.value("value", json::object()), basis, at(p, "value"), "module basis element");
      if (!ai || !mi || !v) continue;
      if (!seen.insert({*ai, *mi}).second) ck.add(p, "duplicate action entry");
      const Degree want = g.add(a.degree(*ai), basis[*mi].degree);
      const bool is_left = std::string(side) == "left";
      check_graded(ck, g, want, *v, basis, at(p, "value"),
                   is_left ? a.name(*ai) + "·" + basis[*mi].name : basis[*mi].name + "·" + a.name(*ai));
      (is_left ? left[*ai * d + *mi] : right[*mi * n + *ai]) = *v;
    }
  }
  ck.fail();
  return Bimodule(a, std::move(basis), std::move(left), std::move(right));
}

CochainData parse_cochain(Checker& ck, const json& j, const GradedAlgebra& a, const Document& doc,
                          const std::string& path) {
  CochainData c;
  const json* records = &j;
  std::string rp = path;
  if (j.is_object()) {
    ck.only_keys(j, path, {"module", "records"});
    if (j.contains("module")) {
      if (!j["module"].is_string())
        ck.add(at(path, "module"), "expected a module name");
      else
        c.module = j["module"].get<std::string>();
    }
    if (!j.contains("records")) {
      ck.add(path, "missing records");
      return c;
    }
    records = &j["records"];
    rp = at(path, "records");
  }
  c.path = rp;
  if (!records->is_array()) {
    ck.add(rp, "expected a list of cochain records");
    return c;
  }
  const Bimodule* m = nullptr;
  if (!c.module.empty()) {
    m = doc.module(c.module);
    if (m == nullptr) {
      ck.add(at(path, "module"), "unknown module '" + c.module + "'");
      return c;
    }
  }
  const std::vector<BasisElement>& values = m ? m->basis() : a.basis();
  for (std::size_t k = 0; k < records->size(); ++k) {
    const std::string p = at(rp, k);
    const json& e = (*records)[k];
    if (!e.is_object()) {
      ck.add(p, "expected {monomial, last, value, degree}");
      continue;
    }
    ck.only_keys(e, p, {"monomial", "last", "value", "degree"});
    CochainRecord r;
    bool ok = true;
    const json mono = e.value("monomial", json::array());
    if (!mono.is_array()) {
      ck.add(at(p, "monomial"), "expected a list of names");
      ok = false;
    } else {
      for (std::size_t q = 0; q < mono.size(); ++q) {
        auto idx = ck.name(mono[q], a.basis(), at(at(p, "monomial"), q), "algebra basis element");
        if (idx)
          r.monomial.push_back(*idx);
        else
          ok = false;
      }
    }
    if (e.contains("last")) {
      auto idx = ck.name(e["last"], a.basis(), at(p, "last"), "algebra basis element");
      if (idx)
        r.last = *idx;
      else
        ok = false;
    } else if (!r.monomial.empty()) {
      ck.add(p, "a record with a monomial needs a last slot");
      ok = false;
    }
    auto v = ck.vector(e.value("value", json::object()), values, at(p, "value"), "module basis element");
    if (v)
      r.value = *v;
    else
      ok = false;
    if (e.contains("degree")) {
      r.degree = ck.degree(e["degree"], a.group(), at(p, "degree"));
      if (!r.degree) ok = false;
    }
    if (ok) c.records.push_back(std::move(r));
  }
  if (auto ar = c.arity())
    for (std::size_t k = 0; k < c.records.size(); ++k) {
      const auto& r = c.records[k];
      const std::size_t rar = r.last ? r.monomial.size() + 1 : 0;
      if (rar != *ar)
        ck.add(at(rp, k), "record arity " + std::to_string(rar) + " differs from arity " + std::to_string(*ar) +
                              " of the first record");
    }
  return c;
}

std::vector<std::string> name_list(Checker& ck, const json& j, const Document& doc, const std::string& path) {
  std::vector<std::string> out;
  if (!j.is_array()) {
    ck.add(path, "expected a list of cochain names");
    return out;
  }
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) {
      ck.add(at(path, k), "expected a cochain name");
      continue;
    }
    const auto s = j[k].get<std::string>();
    if (doc.cochain(s) == nullptr) ck.add(at(path, k), "unknown cochain '" + s + "'");
    out.push_back(s);
  }
  return out;
}

}  // namespace

DocumentError::DocumentError(std::vector<Diagnostic> diags)
    : std::runtime_error(summarize(diags)), diags_(std::move(diags)) {}

std::optional<std::size_t> CochainData::arity() const {
  if (records.empty()) return std::nullopt;
  return records.front().last ? records.front().monomial.size() + 1 : 0;
}

const Bimodule* Document::module(const std::string& name) const {
  for (const auto& [k, m] : modules)
    if (k == name) return &m;
  return nullptr;
}

const CochainData* Document::cochain(const std::string& name) const {
  for (const auto& [k, c] : cochains)
    if (k == name) return &c;
  return nullptr;
}

Bimodule parse_module(const json& j, const GradedAlgebra& a, FieldMode field, const std::string& path) {
  Checker ck;
  ck.field = field;
  try {
    return parse_module_with(ck, j, a, path);
  } catch (const GradingError& e) {
    throw DocumentError(path, e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const DocumentError*>(&e) == nullptr) throw DocumentError(path, e.what());
    throw;
  }
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("", std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  Checker ck;
  Document doc;
  if (!j.is_object()) throw DocumentError("", "expected a JSON object");
  ck.only_keys(j, "", {"field", "group", "epsilon", "basis", "products", "modules", "cochains", "family", "series",
                       "equivalence"});

  if (j.contains("field")) {
    const json& f = j["field"];
    if (f == "rational")
      doc.field = FieldMode::rational;
    else if (f == "gaussian")
      doc.field = FieldMode::gaussian;
    else
      ck.add("/field", "expected \"rational\" or \"gaussian\"");
  }
  ck.field = doc.field;

  // group
  std::vector<long> factors;
  if (!j.contains("group") || !j["group"].is_object() || !j["group"].contains("factors") ||
      !j["group"]["factors"].is_array()) {
    ck.add("/group", "expected {\"factors\": [integers]}");
  } else {
    ck.only_keys(j["group"], "/group", {"factors"});
    const json& fs = j["group"]["factors"];
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (!fs[k].is_number_integer() || fs[k].get<long>() < 0 || fs[k].get<long>() == 1)
        ck.add(at("/group/factors", k), "expected 0 (infinite cyclic) or an order m >= 2");
      else
        factors.push_back(fs[k].get<long>());
    }
  }
  ck.fail();
  GradingGroup group(factors);

  // epsilon
  std::vector<std::vector<Scalar>> table;
  if (!j.contains("epsilon") || !j["epsilon"].is_object() || !j["epsilon"].contains("matrix") ||
      !j["epsilon"]["matrix"].is_array()) {
    ck.add("/epsilon", "expected {\"matrix\": [[scalars]]}");
  } else {
    ck.only_keys(j["epsilon"], "/epsilon", {"matrix"});
    const json& m = j["epsilon"]["matrix"];
    if (m.size() != group.rank()) ck.add("/epsilon/matrix", "matrix size must equal the number of group factors");
    for (std::size_t r = 0; r < m.size(); ++r) {
      std::vector<Scalar> row;
      if (!m[r].is_array() || m[r].size() != group.rank()) {
        ck.add(at("/epsilon/matrix", r), "row length must equal the number of group factors");
        continue;
      }
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        auto s = ck.scalar(m[r][c], at(at("/epsilon/matrix", r), c));
        row.push_back(s.value_or(Scalar(1)));
      }
      table.push_back(std::move(row));
    }
  }
  ck.fail();
  CommutationFactor factor;
  try {
    factor = validate_factor(group, table);
  } catch (const FactorError& e) {
    throw DocumentError(at(at("/epsilon/matrix", e.j()), e.l()), e.what());
  }

  // basis and products
  if (!j.contains("basis")) ck.add("", "missing basis");
  std::vector<BasisElement> basis = ck.basis(j.value("basis", json::array()), group, "/basis");
  ck.fail();
  const std::size_t n = basis.size();
  std::vector<Vec> products(n * n, Vec(n));
  if (j.contains("products")) {
    const json& ps = j["products"];
    if (!ps.is_array()) ck.add("/products", "expected a list of products");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; ps.is_array() && k < ps.size(); ++k) {
      const std::string p = at("/products", k);
      const json& e = ps[k];
      if (!e.is_object()) {
        ck.add(p, "expected {left, right, value}");
        continue;
      }
      ck.only_keys(e, p, {"left", "right", "value"});
      auto l = ck.name(e.value("left", json()), basis, at(p, "left"), "basis element");
      auto r = ck.name(e.value("right", json()), basis, at(p, "right"), "basis element");
      auto v = ck.vector(e.value("value", json::object()), basis, at(p, "value"), "basis element");
      if (!l || !r || !v) continue;
      if (!seen.insert({*l, *r}).second) ck.add(p, "duplicate product " + basis[*l].name + "·" + basis[*r].name);
      check_graded(ck, group, group.add(basis[*l].degree, basis[*r].degree), *v, basis, at(p, "value"),
                   basis[*l].name + "·" + basis[*r].name);
      products[*l * n + *r] = *v;
    }
  }
  ck.fail();
  doc.algebra = GradedAlgebra(factor, basis, products);

  if (j.contains("modules")) {
    if (!j["modules"].is_object()) ck.add("/modules", "expected an object of named modules");
    for (const auto& [name, m] : j["modules"].items()) {
      try {
        doc.modules.emplace_back(name, parse_module(m, doc.algebra, doc.field, at("/modules", name)));
      } catch (const DocumentError& e) {
        for (const auto& d : e.diagnostics()) ck.add(d.path, d.reason);
      }
    }
  }
  ck.fail();

  if (j.contains("cochains")) {
    if (!j["cochains"].is_object()) ck.add("/cochains", "expected an object of named cochains");
    for (const auto& [name, c] : j["cochains"].items())
      doc.cochains.emplace_back(name, parse_cochain(ck, c, doc.algebra, doc, at("/cochains", name)));
  }
  ck.fail();

  if (j.contains("family")) doc.family = name_list(ck, j["family"], doc, "/family");
  if (j.contains("series")) doc.series = name_list(ck, j["series"], doc, "/series");
  if (j.contains("equivalence")) {
    const json& e = j["equivalence"];
    if (!e.is_object()) {
      ck.add("/equivalence", "expected {f, g, phi}");
    } else {
      ck.only_keys(e, "/equivalence", {"f", "g", "phi"});
      Document::Equivalence eq;
      eq.f = name_list(ck, e.value("f", json::array()), doc, "/equivalence/f");
      eq.g = name_list(ck, e.value("g", json::array()), doc, "/equivalence/g");
      eq.phi = name_list(ck, e.value("phi", json::array()), doc, "/equivalence/phi");
      doc.equivalence = std::move(eq);
    }
  }
  ck.fail();
  return doc;
}

Document load_document(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw DocumentError("", "cannot open '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

ojson degree_to_json(const Degree& d) {
  ojson a = ojson::array();
  for (long c : d.components) a.push_back(c);
  return a;
}

ojson vector_to_json(const Vec& v, const std::vector<BasisElement>& basis) {
  ojson o = ojson::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) o[basis[k].name] = v[k].str();
  return o;
}

namespace {

ojson basis_to_json(const std::vector<BasisElement>& basis) {
  ojson a = ojson::array();
  for (const auto& b : basis) a.push_back(ojson{{"name", b.name}, {"degree", degree_to_json(b.degree)}});
  return a;
}

ojson record_to_json(const CochainRecord& r, const GradedAlgebra& a, const std::vector<BasisElement>& values) {
  ojson o = ojson::object();
  if (r.last) {
    ojson mono = ojson::array();
    for (std::size_t x : r.monomial) mono.push_back(a.name(x));
    o["monomial"] = mono;
    o["last"] = a.name(*r.last);
  }
  o["value"] = vector_to_json(r.value, values);
  if (r.degree) o["degree"] = degree_to_json(*r.degree);
  return o;
}

}  // namespace

ojson algebra_to_json(const GradedAlgebra& a) {
  ojson o = ojson::object();
  o["group"] = ojson{{"factors", a.group().factors()}};
  ojson m = ojson::array();
  for (const auto& row : a.factor().table()) {
    ojson r = ojson::array();
    for (const auto& s : row) r.push_back(s.str());
    m.push_back(r);
  }
  o["epsilon"] = ojson{{"matrix", m}};
  o["basis"] = basis_to_json(a.basis());
  ojson ps = ojson::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(a.product(i, j)))
        ps.push_back(ojson{{"left", a.name(i)}, {"right", a.name(j)}, {"value", vector_to_json(a.product(i, j), a.basis())}});
  o["products"] = ps;
  return o;
}

ojson module_to_json(const Bimodule& m) {
  const GradedAlgebra& a = m.algebra();
  ojson o = ojson::object();
  o["basis"] = basis_to_json(m.basis());
  ojson left = ojson::array(), right = ojson::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!is_zero(m.left(i, j)))
        left.push_back(ojson{{"algebra", a.name(i)}, {"module", m.name(j)}, {"value", vector_to_json(m.left(i, j), m.basis())}});
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_zero(m.right(j, i)))
        right.push_back(ojson{{"module", m.name(j)}, {"algebra", a.name(i)}, {"value", vector_to_json(m.right(j, i), m.basis())}});
  o["left"] = left;
  o["right"] = right;
  return o;
}

ojson document_to_json(const Document& d) {
  ojson o = ojson::object();
  o["field"] = d.field == FieldMode::rational ? "rational" : "gaussian";
  const ojson alg = algebra_to_json(d.algebra);
  for (const auto& [k, v] : alg.items()) o[k] = v;
  if (!d.modules.empty()) {
    ojson ms = ojson::object();
    for (const auto& [name, m] : d.modules) ms[name] = module_to_json(m);
    o["modules"] = ms;
  }
  if (!d.cochains.empty()) {
    ojson cs = ojson::object();
    for (const auto& [name, c] : d.cochains) {
      const std::vector<BasisElement>& values = c.module.empty() ? d.algebra.basis() : d.module(c.module)->basis();
      ojson recs = ojson::array();
      for (const auto& r : c.records) recs.push_back(record_to_json(r, d.algebra, values));
      if (c.module.empty())
        cs[name] = recs;
      else
        cs[name] = ojson{{"module", c.module}, {"records", recs}};
    }
    o["cochains"] = cs;
  }
  if (!d.family.empty()) o["family"] = d.family;
  if (!d.series.empty()) o["series"] = d.series;
  if (d.equivalence) o["equivalence"] = ojson{{"f", d.equivalence->f}, {"g", d.equivalence->g}, {"phi", d.equivalence->phi}};
  return o;
}

std::string print_document(const Document& d) { return document_to_json(d).dump(2) + "\n"; }

Vec cochain_coordinates(const CochainComplex& c, const CochainData& d, std::size_t arity) {
  std::vector<Diagnostic> diags;
  const Bimodule& m = c.module();
  if (arity == 0) {
    Vec mv(m.dim());
    for (std::size_t k = 0; k < d.records.size(); ++k) {
      const auto& r = d.records[k];
      if (r.last) diags.push_back({at(d.path, k), "expected a C^0 record (value only)"});
      else axpy(mv, Scalar(1), r.value);
    }
    if (!diags.empty()) throw DocumentError(diags);
    auto sol = solve(ExactMatrix::from_columns(m.dim(), c.c0_basis()), mv);
    if (!sol) throw DocumentError(d.path, "value does not lie in C^0 = {m | (ab)m = a(bm)}");
    return *sol;
  }
  const CochainSpace& sp = c.space(arity);
  Vec f(sp.size());
  for (std::size_t k = 0; k < d.records.size(); ++k) {
    const auto& r = d.records[k];
    const std::string p = at(d.path, k);
    if (!r.last || r.monomial.size() + 1 != arity) {
      diags.push_back({p, "record does not have arity " + std::to_string(arity)});
      continue;
    }
    if (r.value.size() != m.dim()) {
      diags.push_back({at(p, "value"), "value does not belong to this module"});
      continue;
    }
    auto nm = normalize_wedge(c.rules(), r.monomial);
    if (!nm) {
      diags.push_back({at(p, "monomial"), "monomial repeats an even-type index and is zero"});
      continue;
    }
    const std::size_t mono = *sp.monomial_index(nm->indices);
    for (std::size_t l = 0; l < m.dim(); ++l) {
      if (r.value[l].is_zero()) continue;
      const std::size_t pos = sp.position(mono, *r.last, l);
      if (r.degree && sp.degree(pos) != *r.degree)
        diags.push_back({at(at(p, "value"), m.name(l)), "component has degree " + sp.degree(pos).str() +
                                                            ", record declares " + r.degree->str()});
      f[pos] += nm->sign * r.value[l];
    }
  }
  if (!diags.empty()) throw DocumentError(diags);
  return f;
}

std::vector<CochainRecord> cochain_records(const CochainComplex& c, std::size_t n, const Vec& f) {
  const Bimodule& m = c.module();
  std::vector<CochainRecord> out;
  if (n == 0) {
    Vec mv(m.dim());
    for (std::size_t k = 0; k < f.size(); ++k)
      if (!f[k].is_zero()) axpy(mv, f[k], c.c0_basis()[k]);
    std::map<Degree, Vec> parts;
    for (std::size_t l = 0; l < m.dim(); ++l)
      if (!mv[l].is_zero()) {
        auto [it, fresh] = parts.try_emplace(m.degree(l), Vec(m.dim()));
        it->second[l] = mv[l];
      }
    for (auto& [deg, v] : parts) out.push_back({{}, std::nullopt, v, deg});
    return out;
  }
  const CochainSpace& sp = c.space(n);
  const std::size_t dm = m.dim();
  for (std::size_t base = 0; base < sp.size(); base += dm) {
    std::map<Degree, Vec> parts;
    for (std::size_t l = 0; l < dm; ++l)
      if (!f[base + l].is_zero()) {
        auto [it, fresh] = parts.try_emplace(sp.degree(base + l), Vec(dm));
        it->second[l] = f[base + l];
      }
    const auto key = sp.key(base);
    for (auto& [deg, v] : parts) out.push_back({sp.monomials()[key.monomial], key.last, v, deg});
  }
  return out;
}

ojson cochain_to_json(const CochainComplex& c, std::size_t n, const Vec& f) {
  ojson a = ojson::array();
  for (const auto& r : cochain_records(c, n, f)) a.push_back(record_to_json(r, c.algebra(), c.module().basis()));
  return a;
}

}  // namespace lsym
