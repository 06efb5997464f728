#ifndef LSYM_ALGEBRA_HPP
#define LSYM_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsym/grading.hpp"
#include "lsym/linalg.hpp"
#include "lsym/parallel.hpp"
#include "lsym/scalar.hpp"

namespace lsym {

struct BasisElement {
  std::string name;
  Degree degree;
};

/// A structure constant sits at a degree-incompatible slot (S_α·S_β ⊄ S_{α+β}).
class GradingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that holds by theory failed; signals a bug or unchecked input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One failing basis triple of a trilinear identity together with its residual.
struct TripleViolation {
  std::size_t i = 0, j = 0, l = 0;
  std::string identity;
  Vec residual;
};

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<TripleViolation> violations;
  bool pass() const { return violations.empty(); }
};

/*
 * Γ-graded algebra given by structure constants: product(i, j) is the
 * coefficient vector of e_i·e_j. The constructor rejects tables that are not
 * degree compatible, so every GradedAlgebra satisfies S_α·S_β ⊆ S_{α+β}.
 */
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(CommutationFactor factor, std::vector<BasisElement> basis, std::vector<Vec> table);

  /// Algebra with the zero product.
  static GradedAlgebra zero_product(CommutationFactor factor, std::vector<BasisElement> basis);

  std::size_t dim() const { return basis_.size(); }
  const CommutationFactor& factor() const { return factor_; }
  const GradingGroup& group() const { return factor_.group(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  const Degree& degree(std::size_t i) const { return basis_[i].degree; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<Degree> degrees() const;

  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<Vec>& table() const { return table_; }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis_vector(std::size_t i) const;

  /// ε(deg e_i, deg e_j), precomputed.
  const Scalar& eps(std::size_t i, std::size_t j) const { return eps_[i * dim() + j]; }
  Scalar eps(const Degree& a, const Degree& b) const { return factor_(a, b); }

  /// Left and right multiplication operators as dim x dim matrices.
  ExactMatrix left_mult(std::size_t i) const;
  ExactMatrix right_mult(std::size_t i) const;

 private:
  CommutationFactor factor_;
  std::vector<BasisElement> basis_;
  std::vector<Vec> table_;
  std::vector<Scalar> eps_;
};

/// (e_i, e_j, e_l) = (e_i e_j) e_l - e_i (e_j e_l)
Vec associator(const GradedAlgebra& a, std::size_t i, std::size_t j, std::size_t l);

/// Exhaustive check of (x,y,z) = ε(α,β)(y,x,z) on basis triples.
AxiomReport check_left_symmetric(const GradedAlgebra& a, Exec exec = default_exec());

/// ε-Lie algebra by bracket table; bracket(i, j) = [e_i, e_j].
class EpsilonLieAlgebra {
 public:
  EpsilonLieAlgebra() = default;
  EpsilonLieAlgebra(CommutationFactor factor, std::vector<BasisElement> basis, std::vector<Vec> table);

  std::size_t dim() const { return basis_.size(); }
  const CommutationFactor& factor() const { return factor_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const Degree& degree(std::size_t i) const { return basis_[i].degree; }
  const Vec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& a, const Vec& b) const;
  const Scalar& eps(std::size_t i, std::size_t j) const { return eps_[i * dim() + j]; }

 private:
  CommutationFactor factor_;
  std::vector<BasisElement> basis_;
  std::vector<Vec> table_;
  std::vector<Scalar> eps_;
};

/// [x,y] + ε(α,β)[y,x] = 0 on basis pairs (reported as triples with l = 0).
AxiomReport check_epsilon_skew(const EpsilonLieAlgebra& g);
/// ε(γ,α)[x,[y,z]] + ε(α,β)[y,[z,x]] + ε(β,γ)[z,[x,y]] = 0 on basis triples.
AxiomReport check_epsilon_jacobi(const EpsilonLieAlgebra& g, Exec exec = default_exec());

/// Bracket [x,y] = x·y - ε(α,β) y·x. Throws ConsistencyError if the result is not ε-Lie.
EpsilonLieAlgebra associated_lie(const GradedAlgebra& a);

/// End(V) for a graded space with one line per entry of `degrees`; basis E_pq, p-major.
GradedAlgebra gl_epsilon(const CommutationFactor& f, const std::vector<Degree>& degrees);

/// Evidence that a module is irreducible: θ in the multiplication algebra with a
/// one-dimensional kernel whose generator spins to everything, plus the same for θᵀ.
struct NortonWitness {
  ExactMatrix theta;
  Vec kernel_vector;
  Vec transposed_kernel_vector;
};

struct SimplicityCertificate {
  bool simple = false;
  std::string reason;
  std::size_t multiplication_algebra_dim = 0;
  /// Basis of a nonzero proper two-sided ideal, when one was found.
  std::vector<Vec> ideal;
  std::optional<NortonWitness> witness;
};

/// Basis of the unital associative algebra generated by all L_{e_i} and R_{e_i}.
std::vector<ExactMatrix> multiplication_algebra(const GradedAlgebra& a);

/// Span of {b v : b in algebra_basis}, as a reduced basis.
std::vector<Vec> spin(const std::vector<ExactMatrix>& algebra_basis, const Vec& v);

/// True iff span(ideal) is invariant under all left and right multiplications.
bool is_two_sided_ideal(const GradedAlgebra& a, const std::vector<Vec>& ideal);

/*
 * Simplicity over the algebraic closure. A is simple iff A·A ≠ 0 and A is an
 * irreducible module over its multiplication algebra M(A); over C that is
 * dim M(A) = (dim A)^2 by Burnside's theorem. When A is not simple, a proper
 * ideal defined over Q(i) is searched for with Norton-style kernel spinning.
 */
SimplicityCertificate is_simple(const GradedAlgebra& a);

}  // namespace lsym

#endif  // LSYM_ALGEBRA_HPP
