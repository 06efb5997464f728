#ifndef LSYM_BIMODULE_HPP
#define LSYM_BIMODULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsym/algebra.hpp"

namespace lsym {

/*
 * Bimodule over a generalized left-symmetric algebra, given by action tables:
 * left(i, j) is the coefficient vector of e_i·m_j and right(j, i) that of m_j·e_i.
 * Construction enforces that both actions shift degrees additively; the two
 * compatibility identities are checked separately by check_bimodule.
 */
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(GradedAlgebra algebra, std::vector<BasisElement> basis, std::vector<Vec> left,
           std::vector<Vec> right);

  const GradedAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& name(std::size_t j) const { return basis_[j].name; }
  const Degree& degree(std::size_t j) const { return basis_[j].degree; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const Vec& left(std::size_t i, std::size_t j) const { return left_[i * dim() + j]; }
  const Vec& right(std::size_t j, std::size_t i) const { return right_[j * algebra_.dim() + i]; }

  /// e_i · m for a module vector m.
  Vec act_left(std::size_t i, const Vec& m) const;
  /// m · e_i for a module vector m.
  Vec act_right(const Vec& m, std::size_t i) const;
  /// x · m for an algebra vector x.
  Vec act_left(const Vec& x, const Vec& m) const;
  /// m · x for an algebra vector x.
  Vec act_right(const Vec& m, const Vec& x) const;

  const std::vector<Vec>& left_table() const { return left_; }
  const std::vector<Vec>& right_table() const { return right_; }

 private:
  GradedAlgebra algebra_;
  std::vector<BasisElement> basis_;
  std::vector<Vec> left_;   // [i * dim + j]
  std::vector<Vec> right_;  // [j * dim A + i]
};

/// S acting on itself by multiplication on both sides.
Bimodule regular_bimodule(const GradedAlgebra& a);

/// Both actions zero.
Bimodule zero_bimodule(const GradedAlgebra& a, std::vector<BasisElement> basis);

/// Exhaustive check of both bimodule identities on (e_i, e_j, m_l) triples.
AxiomReport check_bimodule(const Bimodule& m, Exec exec = default_exec());

struct BimoduleFlags {
  bool antisymmetric = false;  // right action identically zero
  bool special = false;        // left action associative
};

BimoduleFlags classify(const Bimodule& m);

/// C¹(S,M) = Hom(S,M); basis e_j ↦ m_l at index j * dim M + l, named "e_j->m_l".
Bimodule hom_bimodule(const Bimodule& m);

/// M ⊗ N; basis (m_j, n_l) at index j * dim N + l, named "m_j(x)n_l".
Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n);

/// Left module over the associated ε-Lie algebra; action(i, j) = [e_i, m_j].
struct LieModule {
  EpsilonLieAlgebra lie;
  std::vector<BasisElement> basis;
  std::vector<Vec> action;  // [i * dim + j]

  std::size_t dim() const { return basis.size(); }
  const Degree& degree(std::size_t j) const { return basis[j].degree; }
  const Vec& act(std::size_t i, std::size_t j) const { return action[i * dim() + j]; }
  Vec act(std::size_t i, const Vec& m) const;
};

/// [[x,y],m] = [x,[y,m]] - ε(α,β)[y,[x,m]] on basis triples.
AxiomReport check_lie_module(const LieModule& m, Exec exec = default_exec());

/// [x, m] = x·m - ε(β,α) m·x. Throws ConsistencyError if the module axiom fails.
LieModule lie_module_of(const Bimodule& m);

}  // namespace lsym

#endif  // LSYM_BIMODULE_HPP
