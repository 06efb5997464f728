#include "lsym/algebra.hpp"

#include <set>
#include <utility>

namespace lsym {

namespace {

std::vector<Scalar> eps_table(const CommutationFactor& f, const std::vector<BasisElement>& basis) {
  const std::size_t n = basis.size();
  std::vector<Scalar> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = f(basis[i].degree, basis[j].degree);
  return t;
}

void check_basis(const GradingGroup& group, const std::vector<BasisElement>& basis) {
  std::set<std::string> seen;
  for (const auto& b : basis) {
    if (b.name.empty()) throw std::invalid_argument("basis names must be nonempty");
    if (!seen.insert(b.name).second) throw std::invalid_argument("duplicate basis name '" + b.name + "'");
    if (!group.contains(b.degree))
      throw std::invalid_argument("degree " + b.degree.str() + " of '" + b.name +
                                  "' is not a reduced element of the grading group");
  }
}

void check_table_shape(const std::vector<Vec>& table, std::size_t n) {
  if (table.size() != n * n)
    throw std::invalid_argument("structure table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(n * n));
  for (const auto& v : table)
    if (v.size() != n) throw std::invalid_argument("structure constant vector has wrong length");
}

void check_grading(const GradingGroup& group, const std::vector<BasisElement>& basis,
                   const std::vector<Vec>& table, const char* op) {
  const std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Degree want = group.add(basis[i].degree, basis[j].degree);
      const Vec& v = table[i * n + j];
      for (std::size_t l = 0; l < n; ++l)
        if (!v[l].is_zero() && basis[l].degree != want)
          throw GradingError(std::string(op) + "(" + basis[i].name + ", " + basis[j].name +
                             ") has a component on '" + basis[l].name + "' of degree " +
                             basis[l].degree.str() + ", but the product of degrees " +
                             basis[i].degree.str() + " and " + basis[j].degree.str() + " is " +
                             want.str());
    }
}

Vec bilinear(const std::vector<Vec>& table, std::size_t n, const Vec& a, const Vec& b) {
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      axpy(out, a[i] * b[j], table[i * n + j]);
    }
  }
  return out;
}

// Collects violations from a flat loop over n^3 triples in index order.
AxiomReport collect_triples(std::size_t n, Exec exec,
                            const std::function<std::vector<TripleViolation>(std::size_t, std::size_t,
                                                                             std::size_t)>& check) {
  const std::size_t total = n * n * n;
  auto per = parallel_map<std::vector<TripleViolation>>(
      total, [&](std::size_t k) { return check(k / (n * n), (k / n) % n, k % n); }, exec);
  AxiomReport r;
  r.checked = total;
  for (auto& v : per)
    for (auto& t : v) r.violations.push_back(std::move(t));
  return r;
}

}  // namespace

GradedAlgebra::GradedAlgebra(CommutationFactor factor, std::vector<BasisElement> basis,
                             std::vector<Vec> table)
    : factor_(std::move(factor)), basis_(std::move(basis)), table_(std::move(table)) {
  check_basis(factor_.group(), basis_);
  check_table_shape(table_, basis_.size());
  check_grading(factor_.group(), basis_, table_, "product");
  eps_ = eps_table(factor_, basis_);
}

GradedAlgebra GradedAlgebra::zero_product(CommutationFactor factor, std::vector<BasisElement> basis) {
  const std::size_t n = basis.size();
  return GradedAlgebra(std::move(factor), std::move(basis), std::vector<Vec>(n * n, Vec(n)));
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::vector<Degree> GradedAlgebra::degrees() const {
  std::vector<Degree> d;
  for (const auto& b : basis_) d.push_back(b.degree);
  return d;
}

Vec GradedAlgebra::multiply(const Vec& a, const Vec& b) const { return bilinear(table_, dim(), a, b); }

Vec GradedAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = Scalar(1);
  return v;
}

ExactMatrix GradedAlgebra::left_mult(std::size_t i) const {
  ExactMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, product(i, j));
  return m;
}

ExactMatrix GradedAlgebra::right_mult(std::size_t i) const {
  ExactMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, product(j, i));
  return m;
}

Vec associator(const GradedAlgebra& a, std::size_t i, std::size_t j, std::size_t l) {
  Vec r = a.multiply(a.product(i, j), a.basis_vector(l));
  Vec s = a.multiply(a.basis_vector(i), a.product(j, l));
  axpy(r, Scalar(-1), s);
  return r;
}

AxiomReport check_left_symmetric(const GradedAlgebra& a, Exec exec) {
  return collect_triples(a.dim(), exec, [&](std::size_t i, std::size_t j, std::size_t l) {
    std::vector<TripleViolation> out;
    Vec r = associator(a, i, j, l);
    axpy(r, -a.eps(i, j), associator(a, j, i, l));
    if (!is_zero(r)) out.push_back({i, j, l, "left-symmetry", std::move(r)});
    return out;
  });
}

EpsilonLieAlgebra::EpsilonLieAlgebra(CommutationFactor factor, std::vector<BasisElement> basis,
                                     std::vector<Vec> table)
    : factor_(std::move(factor)), basis_(std::move(basis)), table_(std::move(table)) {
  check_basis(factor_.group(), basis_);
  check_table_shape(table_, basis_.size());
  check_grading(factor_.group(), basis_, table_, "bracket");
  eps_ = eps_table(factor_, basis_);
}

Vec EpsilonLieAlgebra::bracket(const Vec& a, const Vec& b) const { return bilinear(table_, dim(), a, b); }

AxiomReport check_epsilon_skew(const EpsilonLieAlgebra& g) {
  AxiomReport r;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      ++r.checked;
      Vec v = g.bracket(i, j);
      axpy(v, g.eps(i, j), g.bracket(j, i));
      if (!is_zero(v)) r.violations.push_back({i, j, 0, "epsilon-skew", std::move(v)});
    }
  return r;
}

AxiomReport check_epsilon_jacobi(const EpsilonLieAlgebra& g, Exec exec) {
  const std::size_t n = g.dim();
  auto unit = [n](std::size_t k) {
    Vec v(n);
    v[k] = Scalar(1);
    return v;
  };
  return collect_triples(n, exec, [&](std::size_t i, std::size_t j, std::size_t l) {
    std::vector<TripleViolation> out;
    Vec r(n);
    axpy(r, g.eps(l, i), g.bracket(unit(i), g.bracket(j, l)));
    axpy(r, g.eps(i, j), g.bracket(unit(j), g.bracket(l, i)));
    axpy(r, g.eps(j, l), g.bracket(unit(l), g.bracket(i, j)));
    if (!is_zero(r)) out.push_back({i, j, l, "epsilon-jacobi", std::move(r)});
    return out;
  });
}

EpsilonLieAlgebra associated_lie(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = a.product(i, j);
      axpy(v, -a.eps(i, j), a.product(j, i));
      table[i * n + j] = std::move(v);
    }
  EpsilonLieAlgebra g(a.factor(), a.basis(), std::move(table));
  auto jac = check_epsilon_jacobi(g);
  if (!jac.pass())
    throw ConsistencyError("associated bracket violates the epsilon-Jacobi identity at (" +
                           a.name(jac.violations[0].i) + ", " + a.name(jac.violations[0].j) + ", " +
                           a.name(jac.violations[0].l) + "); is the algebra left-symmetric?");
  return g;
}

GradedAlgebra gl_epsilon(const CommutationFactor& f, const std::vector<Degree>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("gl_epsilon needs at least one line");
  const std::size_t d = degrees.size();
  const GradingGroup& group = f.group();
  auto label = [d](std::size_t p) {
    return std::to_string(p + 1);
  };
  std::vector<BasisElement> basis;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      std::string name = "E" + label(p) + (d > 9 ? "_" : "") + label(q);
      basis.push_back({name, group.sub(group.make(degrees[p].components), group.make(degrees[q].components))});
    }
  const std::size_t n = d * d;
  std::vector<Vec> table(n * n, Vec(n));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t s = 0; s < d; ++s)  // E_pq E_qs = E_ps
        table[(p * d + q) * n + (q * d + s)][p * d + s] = Scalar(1);
  return GradedAlgebra(f, std::move(basis), std::move(table));
}

std::vector<ExactMatrix> multiplication_algebra(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<ExactMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(a.left_mult(i));
    gens.push_back(a.right_mult(i));
  }
  auto flat = [n](const ExactMatrix& m) {
    Vec v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = m(r, c);
    return v;
  };
  SpanBuilder span(n * n);
  std::vector<ExactMatrix> basis;
  auto offer = [&](ExactMatrix m) {
    if (span.add(flat(m))) basis.push_back(std::move(m));
  };
  offer(ExactMatrix::identity(n));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& g : gens) offer(g * basis[k]);
  return basis;
}

std::vector<Vec> spin(const std::vector<ExactMatrix>& algebra_basis, const Vec& v) {
  SpanBuilder span(v.size());
  for (const auto& b : algebra_basis) span.add(b.apply(v));
  return span.basis();
}

bool is_two_sided_ideal(const GradedAlgebra& a, const std::vector<Vec>& ideal) {
  SpanBuilder span(a.dim());
  for (const auto& v : ideal) span.add(v);
  for (const auto& v : ideal)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!span.contains(a.multiply(a.basis_vector(i), v))) return false;
      if (!span.contains(a.multiply(v, a.basis_vector(i)))) return false;
    }
  return true;
}

namespace {

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& w, std::size_t n) {
  if (w.empty()) {
    std::vector<Vec> all;
    for (std::size_t k = 0; k < n; ++k) {
      Vec v(n);
      v[k] = Scalar(1);
      all.push_back(std::move(v));
    }
    return all;
  }
  ExactMatrix m(w.size(), n);
  for (std::size_t r = 0; r < w.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = w[r][c];
  return rank_nullspace(m).nullspace;
}

bool proper(const std::vector<Vec>& s, std::size_t n) { return !s.empty() && s.size() < n; }

// Candidate singular elements: the basis of M(A), then pairwise sums.
std::vector<ExactMatrix> norton_candidates(const std::vector<ExactMatrix>& basis) {
  std::vector<ExactMatrix> c = basis;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = k + 1; l < basis.size(); ++l) c.push_back(basis[k] + basis[l]);
  return c;
}

}  // namespace

SimplicityCertificate is_simple(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) throw std::invalid_argument("is_simple needs a nonzero algebra");
  SimplicityCertificate cert;
  auto mult = multiplication_algebra(a);
  cert.multiplication_algebra_dim = mult.size();

  SpanBuilder square(n);
  for (const auto& v : a.table()) square.add(v);
  if (square.dim() == 0) {
    cert.reason = "zero product: A·A = 0";
    if (n > 1) cert.ideal = {a.basis_vector(0)};
    return cert;
  }

  std::vector<ExactMatrix> transposed;
  for (const auto& m : mult) transposed.push_back(m.transpose());
  auto candidates = norton_candidates(mult);

  if (mult.size() == n * n) {
    cert.simple = true;
    cert.reason = "multiplication algebra is the full matrix algebra (dimension " +
                  std::to_string(n * n) + ")";
    for (const auto& theta : candidates) {
      auto ker = rank_nullspace(theta).nullspace;
      if (ker.size() != 1) continue;
      auto kerT = rank_nullspace(theta.transpose()).nullspace;
      if (spin(mult, ker[0]).size() == n && spin(transposed, kerT[0]).size() == n) {
        cert.witness = NortonWitness{theta, ker[0], kerT[0]};
        break;
      }
    }
    return cert;
  }

  auto found = [&](std::vector<Vec> ideal, std::string why) {
    cert.ideal = std::move(ideal);
    cert.reason = std::move(why);
    return cert;
  };
  if (proper(square.basis(), n)) return found(square.basis(), "A·A is a proper ideal");

  ExactMatrix ann(2 * n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) {
        ann(i * n + r, c) = a.product(i, c)[r];
        ann(n * n + i * n + r, c) = a.product(c, i)[r];
      }
  auto annihilator = rank_nullspace(ann).nullspace;
  if (proper(annihilator, n)) return found(annihilator, "two-sided annihilator is a proper ideal");

  for (std::size_t k = 0; k < n; ++k) {
    auto s = spin(mult, a.basis_vector(k));
    if (proper(s, n)) return found(s, "ideal generated by " + a.name(k) + " is proper");
  }
  for (const auto& theta : candidates) {
    for (const auto& v : rank_nullspace(theta).nullspace) {
      auto s = spin(mult, v);
      if (proper(s, n)) return found(s, "spun kernel vector of a singular element is a proper ideal");
    }
    for (const auto& w : rank_nullspace(theta.transpose()).nullspace) {
      auto s = spin(transposed, w);
      if (proper(s, n))
        return found(orthogonal_complement(s, n),
                     "annihilator of a spun transposed kernel vector is a proper ideal");
    }
  }
  cert.reason = "multiplication algebra has dimension " + std::to_string(mult.size()) + " < " +
                std::to_string(n * n) +
                ": reducible over C, but no invariant subspace over Q(i) was found";
  return cert;
}

}  // namespace lsym
