#include "lsym/deformation.hpp"

#include <string>

namespace lsym {

namespace {

/// T(u, e_z) for a vector u.
Vec apply_left_vec(const ProductTable& t, std::size_t n, const Vec& u, std::size_t z) {
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k)
    if (!u[k].is_zero()) axpy(out, u[k], t[k * n + z]);
  return out;
}

/// T(e_x, u) for a vector u.
Vec apply_right_vec(const ProductTable& t, std::size_t n, std::size_t x, const Vec& u) {
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k)
    if (!u[k].is_zero()) axpy(out, u[k], t[x * n + k]);
  return out;
}

/// T(u, v) for vectors u, v.
Vec apply_vec(const ProductTable& t, std::size_t n, const Vec& u, const Vec& v) {
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k)
    if (!u[k].is_zero()) axpy(out, u[k], apply_right_vec(t, n, k, v));
  return out;
}

/// Tr(Ts(x,y),z) - Tr(x,Ts(y,z)) - ε(α,β)(Tr(Ts(y,x),z) - Tr(y,Ts(x,z)))
Vec assoc_term(const GradedAlgebra& a, const ProductTable& tr, const ProductTable& ts, std::size_t x, std::size_t y,
               std::size_t z) {
  const std::size_t n = a.dim();
  Vec v = apply_left_vec(tr, n, ts[x * n + y], z);
  axpy(v, Scalar(-1), apply_right_vec(tr, n, x, ts[y * n + z]));
  Vec w = apply_left_vec(tr, n, ts[y * n + x], z);
  axpy(w, Scalar(-1), apply_right_vec(tr, n, y, ts[x * n + z]));
  axpy(v, -a.eps(x, y), w);
  return v;
}

std::vector<ProductTable> tables(const DeformationContext& ctx, const DeformationSeries& f) {
  std::vector<ProductTable> out{ctx.algebra().table()};
  for (const auto& t : f.terms) out.push_back(ctx.table_of(t));
  return out;
}

/// Linear map φ as an n x n matrix, column x = φ(e_x).
ExactMatrix map_matrix(std::size_t n, const Vec& c1) {
  ExactMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t l = 0; l < n; ++l) m(l, x) = c1[x * n + l];
  return m;
}

Vec map_cochain(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  Vec c(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t l = 0; l < n; ++l) c[x * n + l] = m(l, x);
  return c;
}

ProductTable zero_table(std::size_t n) { return ProductTable(n * n, Vec(n)); }

/// Solves D x = b restricted to the given columns; returns the embedded solution.
std::optional<Vec> solve_on(const ExactMatrix& d, const std::vector<std::size_t>& cols, const Vec& b,
                            std::size_t& rank_image, std::size_t& rank_augmented) {
  ExactMatrix sub = d.select_columns(cols);
  rank_image = rank(sub);
  auto sol = solve(sub, b);
  if (!sol) {
    rank_augmented = rank(sub.hcat(ExactMatrix::from_columns(b.size(), {b})));
    return std::nullopt;
  }
  rank_augmented = rank_image;
  Vec full(d.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = (*sol)[k];
  return full;
}

void require_degree_zero(const DeformationContext& ctx, const DeformationSeries& f) {
  for (std::size_t k = 0; k < f.terms.size(); ++k) {
    if (f.terms[k].size() != ctx.complex().dim(2))
      throw std::invalid_argument("deformation term " + std::to_string(k + 1) + " has the wrong length");
    if (!ctx.is_degree_zero(2, f.terms[k]))
      throw std::invalid_argument("deformation term " + std::to_string(k + 1) + " is not of degree zero");
  }
}

}  // namespace

DeformationContext::DeformationContext(GradedAlgebra a, Exec exec)
    : complex_(regular_bimodule(a)), d1_(complex_.coboundary_matrix(1, exec)), d2_(complex_.coboundary_matrix(2, exec)) {}

std::vector<std::size_t> DeformationContext::degree_zero(std::size_t n) const {
  const Degree zero = algebra().group().zero();
  std::vector<std::size_t> out;
  auto degs = complex_.degrees(n);
  for (std::size_t k = 0; k < degs.size(); ++k)
    if (degs[k] == zero) out.push_back(k);
  return out;
}

bool DeformationContext::is_degree_zero(std::size_t n, const Vec& f) const {
  const Degree zero = algebra().group().zero();
  auto degs = complex_.degrees(n);
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!f[k].is_zero() && degs[k] != zero) return false;
  return true;
}

ProductTable DeformationContext::table_of(const Vec& c2) const {
  const std::size_t n = algebra().dim();
  ProductTable t(n * n, Vec(n));
  for (std::size_t xy = 0; xy < n * n; ++xy)
    for (std::size_t l = 0; l < n; ++l) t[xy][l] = c2[xy * n + l];
  return t;
}

Vec DeformationContext::cochain_of(const ProductTable& t) const {
  const std::size_t n = algebra().dim();
  Vec c(n * n * n);
  for (std::size_t xy = 0; xy < n * n; ++xy)
    for (std::size_t l = 0; l < n; ++l) c[xy * n + l] = t[xy][l];
  return c;
}

std::vector<Vec> infinitesimal_space(const DeformationContext& ctx) {
  const CohomologyResult h = cohomology_at(ctx.complex(), 2);
  const Degree zero = ctx.algebra().group().zero();
  std::vector<Vec> out;
  for (std::size_t k = 0; k < h.representatives.size(); ++k) {
    if (h.representative_degrees[k] != zero) continue;
    DeformationSeries s{{h.representatives[k]}};
    for (const auto& v : integrability_residual(ctx, s, 1))
      if (!is_zero(v)) throw ConsistencyError("an H^2 representative fails the first integrability condition");
    out.push_back(h.representatives[k]);
  }
  return out;
}

std::vector<Vec> integrability_residual(const DeformationContext& ctx, const DeformationSeries& f, std::size_t k) {
  const GradedAlgebra& a = ctx.algebra();
  const std::size_t n = a.dim();
  auto ts = tables(ctx, f);
  std::vector<Vec> out(n * n * n, Vec(n));
  for (std::size_t r = 0; r <= k; ++r) {
    const std::size_t s = k - r;
    if (r >= ts.size() || s >= ts.size()) continue;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) axpy(out[(x * n + y) * n + z], Scalar(1), assoc_term(a, ts[r], ts[s], x, y, z));
  }
  return out;
}

std::optional<std::size_t> first_failing_order(const DeformationContext& ctx, const DeformationSeries& f) {
  for (std::size_t k = 1; k <= f.order(); ++k)
    for (const auto& v : integrability_residual(ctx, f, k))
      if (!is_zero(v)) return k;
  return std::nullopt;
}

Vec obstruction(const DeformationContext& ctx, const DeformationSeries& terms) {
  require_degree_zero(ctx, terms);
  if (auto bad = first_failing_order(ctx, terms))
    throw PreconditionError("integrability fails at order " + std::to_string(*bad), *bad);
  const GradedAlgebra& a = ctx.algebra();
  const std::size_t p = terms.order() + 1;
  auto ts = tables(ctx, terms);
  const CochainSpace& c3 = ctx.complex().space(3);
  Vec mu(c3.size());
  for (std::size_t mono = 0; mono < c3.monomials().size(); ++mono) {
    const auto& xy = c3.monomials()[mono];
    for (std::size_t z = 0; z < a.dim(); ++z) {
      Vec v(a.dim());
      for (std::size_t r = 1; r < p; ++r) axpy(v, Scalar(1), assoc_term(a, ts[r], ts[p - r], xy[0], xy[1], z));
      const std::size_t base = c3.position(mono, z, 0);
      for (std::size_t l = 0; l < v.size(); ++l) mu[base + l] = v[l];
    }
  }
  return mu;
}

ExtendResult extend(const DeformationContext& ctx, const DeformationSeries& terms) {
  ExtendResult r;
  r.mu = obstruction(ctx, terms);
  auto sol = solve_on(ctx.d2(), ctx.degree_zero(2), r.mu, r.rank_image, r.rank_augmented);
  if (!sol) return r;
  DeformationSeries longer = terms;
  longer.terms.push_back(*sol);
  for (const auto& v : integrability_residual(ctx, longer, longer.order()))
    if (!is_zero(v)) throw ConsistencyError("extension solves dF = mu but fails integrability");
  r.extended = true;
  r.next = std::move(*sol);
  return r;
}

GradedAlgebra specialize(const DeformationContext& ctx, const DeformationSeries& terms, const Scalar& lambda) {
  require_degree_zero(ctx, terms);
  const GradedAlgebra& a = ctx.algebra();
  ProductTable t = a.table();
  Scalar power(1);
  for (const auto& f : terms.terms) {
    power *= lambda;
    ProductTable ft = ctx.table_of(f);
    for (std::size_t k = 0; k < t.size(); ++k) axpy(t[k], power, ft[k]);
  }
  GradedAlgebra out(a.factor(), a.basis(), std::move(t));
  AxiomReport rep = check_left_symmetric(out);
  if (!rep.pass())
    throw NotIntegrableError("the truncated series is not integrable at lambda = " + lambda.str(), std::move(rep));
  return out;
}

FirstOrderResult first_order_equivalent(const DeformationContext& ctx, const Vec& f, const Vec& g) {
  FirstOrderResult r;
  r.difference = f;
  axpy(r.difference, Scalar(-1), g);
  auto sol = solve_on(ctx.d1(), ctx.degree_zero(1), r.difference, r.rank_image, r.rank_augmented);
  if (sol) {
    r.equivalent = true;
    r.phi = std::move(*sol);
  }
  return r;
}

EquivalenceSeries inverse(const DeformationContext& ctx, const EquivalenceSeries& phi, std::size_t p) {
  const std::size_t n = ctx.algebra().dim();
  std::vector<ExactMatrix> ph{ExactMatrix::identity(n)}, ps{ExactMatrix::identity(n)};
  for (std::size_t k = 1; k <= p; ++k) ph.push_back(k <= phi.order() ? map_matrix(n, phi.maps[k - 1]) : ExactMatrix(n, n));
  EquivalenceSeries out;
  for (std::size_t k = 1; k <= p; ++k) {
    ExactMatrix acc(n, n);
    for (std::size_t j = 1; j <= k; ++j) acc = acc - ph[j] * ps[k - j];
    ps.push_back(acc);
    out.maps.push_back(map_cochain(acc));
  }
  return out;
}

namespace {

/// Coefficient tables of Φ⁻¹ g(Φx, Φy) for orders 0..p.
std::vector<ProductTable> transformed_tables(const DeformationContext& ctx, const DeformationSeries& g,
                                             const EquivalenceSeries& phi, std::size_t p) {
  const std::size_t n = ctx.algebra().dim();
  std::vector<ProductTable> gt = tables(ctx, g);
  while (gt.size() <= p) gt.push_back(zero_table(n));
  std::vector<ExactMatrix> ph{ExactMatrix::identity(n)};
  for (std::size_t k = 1; k <= p; ++k) ph.push_back(k <= phi.order() ? map_matrix(n, phi.maps[k - 1]) : ExactMatrix(n, n));
  std::vector<ExactMatrix> ps{ExactMatrix::identity(n)};
  for (const auto& m : inverse(ctx, phi, p).maps) ps.push_back(map_matrix(n, m));

  // h_m(x, y) = Σ_{a+b+c=m} G_a(φ_b x, φ_c y)
  std::vector<ProductTable> h(p + 1, zero_table(n));
  for (std::size_t m = 0; m <= p; ++m)
    for (std::size_t ga = 0; ga <= m; ++ga)
      for (std::size_t b = 0; b + ga <= m; ++b) {
        const std::size_t c = m - ga - b;
        for (std::size_t x = 0; x < n; ++x) {
          const Vec u = ph[b].column(x);
          if (is_zero(u)) continue;
          for (std::size_t y = 0; y < n; ++y) {
            const Vec v = ph[c].column(y);
            if (is_zero(v)) continue;
            axpy(h[m][x * n + y], Scalar(1), apply_vec(gt[ga], n, u, v));
          }
        }
      }
  // (Φ⁻¹ h)_m = Σ_{u+v=m} ψ_u h_v
  std::vector<ProductTable> out(p + 1, zero_table(n));
  for (std::size_t m = 0; m <= p; ++m)
    for (std::size_t u = 0; u <= m; ++u)
      for (std::size_t xy = 0; xy < n * n; ++xy)
        if (!is_zero(h[m - u][xy])) axpy(out[m][xy], Scalar(1), ps[u].apply(h[m - u][xy]));
  return out;
}

}  // namespace

DeformationSeries transform(const DeformationContext& ctx, const DeformationSeries& f, const EquivalenceSeries& phi) {
  const std::size_t p = f.order();
  auto t = transformed_tables(ctx, f, phi, p);
  DeformationSeries out;
  for (std::size_t m = 1; m <= p; ++m) out.terms.push_back(ctx.cochain_of(t[m]));
  return out;
}

bool verify_equivalence(const DeformationContext& ctx, const DeformationSeries& f, const DeformationSeries& g,
                        const EquivalenceSeries& phi, std::size_t p) {
  const std::size_t n = ctx.algebra().dim();
  auto rhs = transformed_tables(ctx, g, phi, p);
  std::vector<ProductTable> lhs = tables(ctx, f);
  while (lhs.size() <= p) lhs.push_back(zero_table(n));
  for (std::size_t m = 0; m <= p; ++m)
    if (lhs[m] != rhs[m]) return false;
  return true;
}

NormalizeResult normalize_leading_term(const DeformationContext& ctx, const DeformationSeries& f) {
  require_degree_zero(ctx, f);
  NormalizeResult r;
  r.series = f;
  const std::size_t p = f.order();
  for (;;) {
    std::size_t lead = 0;
    for (std::size_t k = 1; k <= p && lead == 0; ++k)
      if (!is_zero(r.series.terms[k - 1])) lead = k;
    if (lead == 0) {
      r.trivial = true;
      r.leading_order = 0;
      return r;
    }
    const Vec& fn = r.series.terms[lead - 1];
    if (!is_zero(ctx.complex().coboundary(2, fn)))
      throw PreconditionError("leading term of order " + std::to_string(lead) + " is not a 2-cocycle", lead);
    std::size_t ri = 0, ra = 0;
    auto phi = solve_on(ctx.d1(), ctx.degree_zero(1), fn, ri, ra);
    if (!phi) {
      r.leading_order = lead;
      return r;
    }
    // g = Φ f(Φ⁻¹x, Φ⁻¹y) with Φ = id + λ^lead φ, i.e. f = Φ⁻¹ g(Φx, Φy).
    EquivalenceSeries step;
    step.maps.assign(lead, Vec(phi->size()));
    step.maps[lead - 1] = *phi;
    DeformationSeries next = transform(ctx, r.series, inverse(ctx, step, p));
    if (!verify_equivalence(ctx, r.series, next, step, p))
      throw ConsistencyError("normalization step does not produce an equivalent series");
    r.steps.emplace_back(lead, std::move(*phi));
    r.series = std::move(next);
  }
}

}  // namespace lsym
