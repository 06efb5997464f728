#ifndef LSYM_DEFORMATION_HPP
#define LSYM_DEFORMATION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsym/cochain.hpp"
#include "lsym/cohomology.hpp"

namespace lsym {

/// Bilinear map on S as a table: entry x * dim + y holds F(e_x, e_y).
using ProductTable = std::vector<Vec>;

/// f_λ = F_0 + λF_1 + ... + λ^p F_p; terms hold F_1..F_p as C²(S,S) coordinates.
struct DeformationSeries {
  std::vector<Vec> terms;
  std::size_t order() const { return terms.size(); }
};

/// Φ_λ = id + λφ_1 + ... + λ^p φ_p; maps hold φ_1..φ_p as C¹(S,S) coordinates.
struct EquivalenceSeries {
  std::vector<Vec> maps;
  std::size_t order() const { return maps.size(); }
};

/// Terms below order p do not satisfy the integrability conditions.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::size_t order) : std::invalid_argument(what), order_(order) {}
  std::size_t order() const { return order_; }

 private:
  std::size_t order_;
};

/// A specialized product failed the left-symmetry check.
class NotIntegrableError : public std::runtime_error {
 public:
  NotIntegrableError(const std::string& what, AxiomReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// The regular complex C(S, S) together with d_1 and d_2.
class DeformationContext {
 public:
  explicit DeformationContext(GradedAlgebra a, Exec exec = default_exec());

  const GradedAlgebra& algebra() const { return complex_.algebra(); }
  const CochainComplex& complex() const { return complex_; }
  const ExactMatrix& d1() const { return d1_; }
  const ExactMatrix& d2() const { return d2_; }
  /// Indices of the Γ-degree-zero basis cochains of C^n.
  std::vector<std::size_t> degree_zero(std::size_t n) const;
  bool is_degree_zero(std::size_t n, const Vec& f) const;

  ProductTable table_of(const Vec& c2) const;
  Vec cochain_of(const ProductTable& t) const;

 private:
  CochainComplex complex_;
  ExactMatrix d1_, d2_;
};

/// Degree-zero part of H²(S,S): homogeneous representatives, each a 2-cocycle.
std::vector<Vec> infinitesimal_space(const DeformationContext& ctx);

/*
 * Coefficient of λ^k in the left-symmetry defect of f_λ, as a full tensor
 * indexed (x * n + y) * n + z (vectors in S); zero iff the deformed product is left-symmetric at order k.
 */
std::vector<Vec> integrability_residual(const DeformationContext& ctx, const DeformationSeries& f, std::size_t k);

/// First order k <= order whose integrability residual is nonzero.
std::optional<std::size_t> first_failing_order(const DeformationContext& ctx, const DeformationSeries& f);

/*
 * μ_p = Σ_{r+s=p, r,s>0} F_r(F_s(x,y),z) - F_r(x,F_s(y,z))
 *                        - ε(α,β)(F_r(F_s(y,x),z) - F_r(y,F_s(x,z)))
 * as C³(S,S) coordinates, p = terms.order() + 1; integrability at order p is dF_p = μ_p.
 * Throws PreconditionError naming the first failing order below p.
 */
Vec obstruction(const DeformationContext& ctx, const DeformationSeries& terms);

struct ExtendResult {
  bool extended = false;
  Vec next;  // F_p, echelon-minimal, when extended
  Vec mu;    // μ_p
  /// Certificate when not extended: rank(d_2 | degree 0) < rank([d_2 | degree 0, μ_p]).
  std::size_t rank_image = 0, rank_augmented = 0;
};

ExtendResult extend(const DeformationContext& ctx, const DeformationSeries& terms);

/// Structure constants c + Σ λ^i F_i, re-validated; throws NotIntegrableError on failure.
GradedAlgebra specialize(const DeformationContext& ctx, const DeformationSeries& terms, const Scalar& lambda);

struct FirstOrderResult {
  bool equivalent = false;
  Vec phi;         // dφ = F - G when equivalent
  Vec difference;  // F - G
  std::size_t rank_image = 0, rank_augmented = 0;
};

/// Solves dφ = F - G over degree-zero 1-cochains.
FirstOrderResult first_order_equivalent(const DeformationContext& ctx, const Vec& f, const Vec& g);

/// Φ⁻¹ f(Φx, Φy) truncated at the order of f.
DeformationSeries transform(const DeformationContext& ctx, const DeformationSeries& f, const EquivalenceSeries& phi);

/// Inverse of Φ_λ modulo λ^{p+1}: ψ_0 = id, ψ_k = -Σ_{j=1..k} φ_j ψ_{k-j}.
EquivalenceSeries inverse(const DeformationContext& ctx, const EquivalenceSeries& phi, std::size_t p);

/// f_λ = Φ⁻¹ g_λ(Φ x, Φ y) modulo λ^{p+1}, coefficient by coefficient.
bool verify_equivalence(const DeformationContext& ctx, const DeformationSeries& f, const DeformationSeries& g,
                        const EquivalenceSeries& phi, std::size_t p);

struct NormalizeResult {
  bool trivial = false;  // every term was removed
  DeformationSeries series;
  /// (n, φ) per step: Φ = id + λ^n φ with dφ the removed leading term.
  std::vector<std::pair<std::size_t, Vec>> steps;
  /// Order of the leading term of `series` (0 when trivial).
  std::size_t leading_order = 0;
};

/*
 * Repeatedly replaces f by the equivalent Φ f(Φ⁻¹x, Φ⁻¹y) with Φ = id + λ^n φ
 * and dφ = F_n until the leading term F_n is not a coboundary, or nothing is left.
 */
NormalizeResult normalize_leading_term(const DeformationContext& ctx, const DeformationSeries& f);

}  // namespace lsym

#endif  // LSYM_DEFORMATION_HPP
