#include "lsym/cohomology.hpp"

namespace lsym {

namespace {

std::map<Degree, std::vector<std::size_t>> blocks_of(const std::vector<Degree>& degrees) {
  std::map<Degree, std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < degrees.size(); ++k) out[degrees[k]].push_back(k);
  return out;
}

/// d_n : C^n -> C^{n+1} and d_{n-1} (absent for n = 0), with degrees of C^{n-1} and C^n.
CohomologyResult cohomology_from(std::size_t n, const ExactMatrix& d_n, const ExactMatrix* d_prev,
                                 const std::vector<Degree>& deg_n, const std::vector<Degree>& deg_prev) {
  CohomologyResult r;
  r.n = n;
  r.dim_C = d_n.cols();
  auto prev_blocks = blocks_of(deg_prev);
  for (const auto& [deg, cols] : blocks_of(deg_n)) {
    CohomologyDims dims;
    dims.dim_C = cols.size();
    auto rn = rank_nullspace(d_n.select_columns(cols));
    SpanBuilder span(d_n.cols());
    if (d_prev != nullptr) {
      auto it = prev_blocks.find(deg);
      if (it != prev_blocks.end())
        for (std::size_t c : it->second) {
          Vec b = d_prev->column(c);
          if (span.add(b)) r.b_basis.push_back(std::move(b));
        }
    }
    dims.dim_B = span.dim();
    for (const auto& z : rn.nullspace) {
      Vec full(d_n.cols());
      for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = z[k];
      if (span.add(full)) {
        r.representatives.push_back(full);
        r.representative_degrees.push_back(deg);
      }
      r.z_basis.push_back(std::move(full));
    }
    dims.dim_Z = rn.nullspace.size();
    if (dims.dim_Z < dims.dim_B) throw ConsistencyError("B^n is not contained in Z^n: d∘d ≠ 0");
    dims.dim_H = dims.dim_Z - dims.dim_B;
    if (span.dim() != dims.dim_Z) throw ConsistencyError("coboundaries are not cocycles: d∘d ≠ 0");
    r.dim_Z += dims.dim_Z;
    r.dim_B += dims.dim_B;
    r.dim_H += dims.dim_H;
    r.by_degree[deg] = dims;
  }
  return r;
}

}  // namespace

CohomologyResult cohomology_at(const CochainComplex& c, std::size_t n, Exec exec) {
  ExactMatrix d_n = c.coboundary_matrix(n, exec);
  if (n == 0) return cohomology_from(0, d_n, nullptr, c.degrees(0), {});
  ExactMatrix d_prev = c.coboundary_matrix(n - 1, exec);
  return cohomology_from(n, d_n, &d_prev, c.degrees(n), c.degrees(n - 1));
}

CohomologyResult ce_cohomology_at(const CEComplex& ce, std::size_t i, Exec exec) {
  ExactMatrix d_i = ce.coboundary_matrix(i, exec);
  if (i == 0) return cohomology_from(0, d_i, nullptr, ce.space(0).degrees(), {});
  ExactMatrix d_prev = ce.coboundary_matrix(i - 1, exec);
  return cohomology_from(i, d_i, &d_prev, ce.space(i).degrees(), ce.space(i - 1).degrees());
}

std::size_t nonzero_count(const ExactMatrix& m) {
  std::size_t k = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) ++k;
  return k;
}

CurryingReport theorem41_check(const CochainComplex& c, const CEComplex& ce, std::size_t i, Exec exec) {
  if (i < 1) throw std::invalid_argument("theorem41_check needs i >= 1");
  CurryingReport r;
  r.i = i;
  r.dim_H_S = cohomology_at(c, i + 1, exec).dim_H;
  r.dim_H_CE = ce_cohomology_at(ce, i, exec).dim_H;
  const ExactMatrix psi_i = psi_matrix(ce, c, i);
  const ExactMatrix psi_next = psi_matrix(ce, c, i + 1);
  for (std::size_t x = 0; x < c.algebra().dim(); ++x)
    r.xi_rho_residual += nonzero_count(psi_i * ce.xi_matrix(x, i, exec) - c.rho_matrix(x, i + 1, exec) * psi_i);
  r.d_residual = nonzero_count(psi_next * ce.coboundary_matrix(i, exec) - c.coboundary_matrix(i + 1, exec) * psi_i);
  return r;
}

FourTermReport remark42_check(const CochainComplex& c, const CEComplex& ce, Exec exec) {
  FourTermReport r;
  auto h0 = cohomology_at(c, 0, exec);
  r.dim_Z0 = h0.dim_Z;
  r.dim_C0 = h0.dim_C;
  r.dim_H0_CE = ce_cohomology_at(ce, 0, exec).dim_H;
  r.dim_H1 = cohomology_at(c, 1, exec).dim_H;
  return r;
}

}  // namespace lsym
