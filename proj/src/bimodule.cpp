#include "lsym/bimodule.hpp"

#include <set>
#include <utility>

namespace lsym {

namespace {

void check_action_grading(const GradedAlgebra& a, const std::vector<BasisElement>& basis,
                          const std::vector<Vec>& left, const std::vector<Vec>& right) {
  const std::size_t n = a.dim(), d = basis.size();
  const GradingGroup& g = a.group();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Degree want = g.add(a.degree(i), basis[j].degree);
      const Vec& l = left[i * d + j];
      const Vec& r = right[j * n + i];
      for (std::size_t k = 0; k < d; ++k) {
        if (!l[k].is_zero() && basis[k].degree != want)
          throw GradingError("left action " + a.name(i) + "·" + basis[j].name +
                             " has a component on '" + basis[k].name + "' of degree " +
                             basis[k].degree.str() + ", expected " + want.str());
        if (!r[k].is_zero() && basis[k].degree != want)
          throw GradingError("right action " + basis[j].name + "·" + a.name(i) +
                             " has a component on '" + basis[k].name + "' of degree " +
                             basis[k].degree.str() + ", expected " + want.str());
      }
    }
}

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = Scalar(1);
  return v;
}

}  // namespace

Bimodule::Bimodule(GradedAlgebra algebra, std::vector<BasisElement> basis, std::vector<Vec> left,
                   std::vector<Vec> right)
    : algebra_(std::move(algebra)), basis_(std::move(basis)), left_(std::move(left)), right_(std::move(right)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.name.empty()) throw std::invalid_argument("module basis names must be nonempty");
    if (!seen.insert(b.name).second) throw std::invalid_argument("duplicate module basis name '" + b.name + "'");
    if (!algebra_.group().contains(b.degree))
      throw std::invalid_argument("degree " + b.degree.str() + " of '" + b.name + "' is not in the grading group");
  }
  const std::size_t n = algebra_.dim(), d = basis_.size();
  if (left_.size() != n * d || right_.size() != n * d)
    throw std::invalid_argument("action tables must have dim(S) * dim(M) entries");
  for (const auto& v : left_)
    if (v.size() != d) throw std::invalid_argument("left action vector has wrong length");
  for (const auto& v : right_)
    if (v.size() != d) throw std::invalid_argument("right action vector has wrong length");
  check_action_grading(algebra_, basis_, left_, right_);
}

std::optional<std::size_t> Bimodule::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if (basis_[j].name == name) return j;
  return std::nullopt;
}

Vec Bimodule::act_left(std::size_t i, const Vec& m) const {
  Vec out(dim());
  for (std::size_t j = 0; j < dim(); ++j) axpy(out, m[j], left(i, j));
  return out;
}

Vec Bimodule::act_right(const Vec& m, std::size_t i) const {
  Vec out(dim());
  for (std::size_t j = 0; j < dim(); ++j) axpy(out, m[j], right(j, i));
  return out;
}

Vec Bimodule::act_left(const Vec& x, const Vec& m) const {
  Vec out(dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) axpy(out, x[i], act_left(i, m));
  return out;
}

Vec Bimodule::act_right(const Vec& m, const Vec& x) const {
  Vec out(dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) axpy(out, x[i], act_right(m, i));
  return out;
}

Bimodule regular_bimodule(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> left(n * n), right(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      left[i * n + j] = a.product(i, j);
      right[j * n + i] = a.product(j, i);
    }
  return Bimodule(a, a.basis(), std::move(left), std::move(right));
}

Bimodule zero_bimodule(const GradedAlgebra& a, std::vector<BasisElement> basis) {
  const std::size_t d = basis.size();
  std::vector<Vec> zero(a.dim() * d, Vec(d));
  return Bimodule(a, std::move(basis), zero, zero);
}

AxiomReport check_bimodule(const Bimodule& m, Exec exec) {
  const GradedAlgebra& a = m.algebra();
  const std::size_t n = a.dim(), d = m.dim();
  const std::size_t total = n * n * d;
  auto per = parallel_map<std::vector<TripleViolation>>(
      total,
      [&](std::size_t k) {
        const std::size_t i = k / (n * d), j = (k / d) % n, l = k % d;
        std::vector<TripleViolation> out;
        const Vec ml = unit(d, l);
        // (x·y)·m - x·(y·m) = ε(α,β)((y·x)·m - y·(x·m))
        Vec r = m.act_left(a.product(i, j), ml);
        axpy(r, Scalar(-1), m.act_left(i, m.left(j, l)));
        Vec s = m.act_left(a.product(j, i), ml);
        axpy(s, Scalar(-1), m.act_left(j, m.left(i, l)));
        axpy(r, -a.eps(i, j), s);
        if (!is_zero(r)) out.push_back({i, j, l, "left-left", std::move(r)});
        // (x·m)·y - x·(m·y) = ε(α,γ)((m·x)·y - m·(x·y)), x = e_i, y = e_j
        Vec u = m.act_right(m.left(i, l), j);
        axpy(u, Scalar(-1), m.act_left(i, m.right(l, j)));
        Vec w = m.act_right(m.right(l, i), j);
        axpy(w, Scalar(-1), m.act_right(ml, a.product(i, j)));
        axpy(u, -a.eps(a.degree(i), m.degree(l)), w);
        if (!is_zero(u)) out.push_back({i, j, l, "left-right", std::move(u)});
        return out;
      },
      exec);
  AxiomReport r;
  r.checked = total;
  for (auto& v : per)
    for (auto& t : v) r.violations.push_back(std::move(t));
  return r;
}

BimoduleFlags classify(const Bimodule& m) {
  BimoduleFlags f;
  f.antisymmetric = true;
  for (const auto& v : m.right_table())
    if (!is_zero(v)) f.antisymmetric = false;
  const GradedAlgebra& a = m.algebra();
  f.special = true;
  for (std::size_t i = 0; i < a.dim() && f.special; ++i)
    for (std::size_t j = 0; j < a.dim() && f.special; ++j)
      for (std::size_t l = 0; l < m.dim() && f.special; ++l) {
        Vec r = m.act_left(a.product(i, j), unit(m.dim(), l));
        axpy(r, Scalar(-1), m.act_left(i, m.left(j, l)));
        if (!is_zero(r)) f.special = false;
      }
  return f;
}

Bimodule hom_bimodule(const Bimodule& m) {
  const GradedAlgebra& a = m.algebra();
  const std::size_t n = a.dim(), d = m.dim(), hd = n * d;
  const GradingGroup& g = a.group();
  std::vector<BasisElement> basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < d; ++l)
      basis.push_back({a.name(j) + "->" + m.name(l), g.sub(m.degree(l), a.degree(j))});

  // Value of the elementary map (j -> l) on an algebra vector y.
  auto apply = [&](std::size_t j, std::size_t l, const Vec& y) {
    Vec v(d);
    axpy(v, y[j], unit(d, l));
    return v;
  };
  std::vector<Vec> left(n * hd, Vec(hd)), right(hd * n, Vec(hd));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        const std::size_t f = j * d + l;
        const Scalar e = a.eps(a.degree(i), basis[f].degree);
        Vec& out = left[i * hd + f];
        // (x·f)(y) = x·f(y) - ε(α,γ) f(x·y) + ε(α,γ) f(x)·y
        for (std::size_t q = 0; q < n; ++q) {
          const Vec y = a.basis_vector(q);
          Vec val = m.act_left(i, apply(j, l, y));
          axpy(val, -e, apply(j, l, a.product(i, q)));
          axpy(val, e, m.act_right(apply(j, l, a.basis_vector(i)), q));
          for (std::size_t k = 0; k < d; ++k)
            if (!val[k].is_zero()) out[q * d + k] = val[k];
        }
      }
  return Bimodule(a, std::move(basis), std::move(left), std::move(right));
}

Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& nmod) {
  const GradedAlgebra& a = m.algebra();
  if (a.dim() != nmod.algebra().dim() || a.table() != nmod.algebra().table() ||
      a.degrees() != nmod.algebra().degrees())
    throw std::invalid_argument("tensor_bimodule: modules over different algebras");
  const std::size_t n = a.dim(), dm = m.dim(), dn = nmod.dim(), td = dm * dn;
  const GradingGroup& g = a.group();
  std::vector<BasisElement> basis;
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t l = 0; l < dn; ++l)
      basis.push_back({m.name(j) + "(x)" + nmod.name(l), g.add(m.degree(j), nmod.degree(l))});

  auto put = [&](Vec& out, const Scalar& c, const Vec& mv, const Vec& nv) {
    if (c.is_zero()) return;
    for (std::size_t j = 0; j < dm; ++j) {
      if (mv[j].is_zero()) continue;
      for (std::size_t l = 0; l < dn; ++l)
        if (!nv[l].is_zero()) out[j * dn + l] += c * mv[j] * nv[l];
    }
  };
  std::vector<Vec> left(n * td, Vec(td)), right(td * n, Vec(td));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t l = 0; l < dn; ++l) {
        const std::size_t t = j * dn + l;
        const Vec mj = unit(dm, j), nl = unit(dn, l);
        const Scalar e = a.eps(a.degree(i), m.degree(j));
        // x·(m⊗n) = (x·m - ε(α,β) m·x)⊗n + ε(α,β) m⊗(x·n)
        Vec first = m.left(i, j);
        axpy(first, -e, m.right(j, i));
        put(left[i * td + t], Scalar(1), first, nl);
        put(left[i * td + t], e, mj, nmod.left(i, l));
        // (m⊗n)·x = m⊗(n·x)
        put(right[t * n + i], Scalar(1), mj, nmod.right(l, i));
      }
  return Bimodule(a, std::move(basis), std::move(left), std::move(right));
}

Vec LieModule::act(std::size_t i, const Vec& m) const {
  Vec out(dim());
  for (std::size_t j = 0; j < dim(); ++j) axpy(out, m[j], act(i, j));
  return out;
}

AxiomReport check_lie_module(const LieModule& m, Exec exec) {
  const std::size_t n = m.lie.dim(), d = m.dim();
  const std::size_t total = n * n * d;
  auto per = parallel_map<std::vector<TripleViolation>>(
      total,
      [&](std::size_t k) {
        const std::size_t i = k / (n * d), j = (k / d) % n, l = k % d;
        std::vector<TripleViolation> out;
        Vec lhs(d);
        const Vec& xy = m.lie.bracket(i, j);
        for (std::size_t q = 0; q < n; ++q) axpy(lhs, xy[q], m.act(q, l));
        axpy(lhs, Scalar(-1), m.act(i, m.act(j, l)));
        axpy(lhs, m.lie.eps(i, j), m.act(j, m.act(i, l)));
        if (!is_zero(lhs)) out.push_back({i, j, l, "lie-module", std::move(lhs)});
        return out;
      },
      exec);
  AxiomReport r;
  r.checked = total;
  for (auto& v : per)
    for (auto& t : v) r.violations.push_back(std::move(t));
  return r;
}

LieModule lie_module_of(const Bimodule& m) {
  const GradedAlgebra& a = m.algebra();
  const std::size_t n = a.dim(), d = m.dim();
  LieModule out{associated_lie(a), m.basis(), std::vector<Vec>(n * d)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v = m.left(i, j);
      axpy(v, -a.eps(m.degree(j), a.degree(i)), m.right(j, i));
      out.action[i * d + j] = std::move(v);
    }
  auto rep = check_lie_module(out);
  if (!rep.pass())
    throw ConsistencyError("induced epsilon-Lie action violates the module axiom at (" +
                           a.name(rep.violations[0].i) + ", " + a.name(rep.violations[0].j) + ", " +
                           m.name(rep.violations[0].l) + ")");
  return out;
}

}  // namespace lsym
