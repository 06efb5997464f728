#ifndef LSYM_COHOMOLOGY_HPP
#define LSYM_COHOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "lsym/cochain.hpp"

namespace lsym {

struct CohomologyDims {
  std::size_t dim_C = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
};

/*
 * H^n = Z^n / B^n with B⁰ = 0. Everything is computed one Γ-degree block at a
 * time (d preserves degree), so bases and representatives are homogeneous.
 * Representatives: start from the B-basis and greedily admit Z-nullspace
 * vectors in echelon order whenever they raise the rank.
 */
struct CohomologyResult {
  std::size_t n = 0;
  std::size_t dim_C = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
  std::vector<Vec> z_basis;
  std::vector<Vec> b_basis;
  std::vector<Vec> representatives;
  std::vector<Degree> representative_degrees;
  std::map<Degree, CohomologyDims> by_degree;
};

CohomologyResult cohomology_at(const CochainComplex& c, std::size_t n, Exec exec = default_exec());

/// Same computation for the ε-Lie complex (B⁰ = 0).
CohomologyResult ce_cohomology_at(const CEComplex& ce, std::size_t i, Exec exec = default_exec());

/// Number of nonzero entries; used as the residual of a matrix identity.
std::size_t nonzero_count(const ExactMatrix& m);

/// Currying ψ: C^i(𝔤_S, C¹(S,M)) -> C^{i+1}(S,M) intertwines ξ with ρ and 𝔡 with d.
struct CurryingReport {
  std::size_t i = 0;
  std::size_t dim_H_S = 0;   // dim H^{i+1}(S, M)
  std::size_t dim_H_CE = 0;  // dim H^i(𝔤_S, C¹(S, M))
  std::size_t xi_rho_residual = 0;  // Σ_x nnz(ψ ξ(x) - ρ(x) ψ)
  std::size_t d_residual = 0;       // nnz(ψ 𝔡 - d ψ)
  bool pass() const { return dim_H_S == dim_H_CE && xi_rho_residual == 0 && d_residual == 0; }
};

CurryingReport theorem41_check(const CochainComplex& c, const CEComplex& ce, std::size_t i,
                              Exec exec = default_exec());

/// Four-term exact sequence Z⁰, C⁰, H⁰_CE, H¹: only the alternating dimension sum is checked.
struct FourTermReport {
  std::size_t dim_Z0 = 0, dim_C0 = 0, dim_H0_CE = 0, dim_H1 = 0;
  long alternating_sum() const {
    return static_cast<long>(dim_Z0) - static_cast<long>(dim_C0) + static_cast<long>(dim_H0_CE) -
           static_cast<long>(dim_H1);
  }
  bool pass() const { return alternating_sum() == 0; }
};

FourTermReport remark42_check(const CochainComplex& c, const CEComplex& ce, Exec exec = default_exec());

}  // namespace lsym

#endif  // LSYM_COHOMOLOGY_HPP
