#ifndef LSYM_COCHAIN_HPP
#define LSYM_COCHAIN_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lsym/algebra.hpp"
#include "lsym/bimodule.hpp"

namespace lsym {

/// ε on basis index pairs, enough to normalize wedge words over that basis.
struct WedgeRules {
  std::size_t n = 0;
  std::vector<Scalar> eps;  // [i * n + j]
  const Scalar& operator()(std::size_t i, std::size_t j) const { return eps[i * n + j]; }
  bool odd(std::size_t i) const { return !eps[i * n + i].is_one(); }
};

WedgeRules wedge_rules(const GradedAlgebra& a);
WedgeRules wedge_rules(const EpsilonLieAlgebra& g);

struct WedgeMonomial {
  std::vector<std::size_t> indices;
  Scalar sign{1};
};

/*
 * Sorts a wedge word ascending. Each adjacent swap of factors of degrees α, β
 * (left, right) multiplies the sign by -ε(α, β); a repeated even-type index
 * gives nullopt (the word is zero in the ε-exterior power).
 */
std::optional<WedgeMonomial> normalize_wedge(const WedgeRules& r, std::vector<std::size_t> factors);
std::optional<WedgeMonomial> normalize_wedge(const GradedAlgebra& a, std::vector<std::size_t> factors);

/// All canonical monomials of a given length, in lexicographic order.
std::vector<std::vector<std::size_t>> canonical_monomials(const WedgeRules& r, std::size_t length);

/*
 * Coordinates of Hom(∧^k V ⊗ V, M) (has_last) or Hom(∧^k V, M) (no last slot).
 * Position of the elementary cochain (monomial, last, value) is
 * (monomial * last_count + last) * dim M + value, i.e. lexicographic.
 */
class CochainSpace {
 public:
  struct Key {
    std::size_t monomial = 0;
    std::size_t last = 0;
    std::size_t value = 0;
  };

  CochainSpace() = default;
  CochainSpace(const WedgeRules& rules, const GradingGroup& group, std::vector<Degree> slot_degrees,
               std::vector<Degree> value_degrees, std::size_t monomial_length, bool has_last);

  std::size_t arity() const { return mono_len_ + (has_last_ ? 1 : 0); }
  std::size_t monomial_length() const { return mono_len_; }
  bool has_last() const { return has_last_; }
  std::size_t size() const { return monomials_.size() * last_count() * dim_value(); }
  std::size_t last_count() const { return has_last_ ? slot_degrees_.size() : 1; }
  std::size_t dim_value() const { return value_degrees_.size(); }

  const std::vector<std::vector<std::size_t>>& monomials() const { return monomials_; }
  std::optional<std::size_t> monomial_index(const std::vector<std::size_t>& m) const;
  Key key(std::size_t pos) const;
  std::size_t position(std::size_t monomial, std::size_t last, std::size_t value) const {
    return (monomial * last_count() + last) * dim_value() + value;
  }
  const Degree& degree(std::size_t pos) const { return degrees_[pos]; }
  const std::vector<Degree>& degrees() const { return degrees_; }

  /// Value at an arbitrary argument word (length = arity), by normalization.
  Vec evaluate(const WedgeRules& rules, const Vec& f, const std::vector<std::size_t>& args) const;

 private:
  std::vector<Degree> slot_degrees_, value_degrees_;
  std::size_t mono_len_ = 0;
  bool has_last_ = true;
  std::vector<std::vector<std::size_t>> monomials_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<Degree> degrees_;
};

/// Splits coordinates by Γ-degree; every returned vector is homogeneous.
std::map<Degree, Vec> homogeneous_components(const std::vector<Degree>& degrees, const Vec& f);

/// Evaluates a cochain on a word of basis indices.
using WordEvaluator = std::function<Vec(const std::vector<std::size_t>&)>;

/*
 * Complex C(S, M): C⁰ = {m | (ab)m = a(bm)} and C^n = Hom(∧^{n-1} S ⊗ S, M).
 * Cochains are coordinate vectors in the bases above; C⁰ coordinates refer to
 * c0_basis(). Face maps act on full tensor cochains Hom(S^{⊗n}, M), where the
 * coordinate of (x_1..x_n; m_l) is (((x_1 dim S + x_2) ...) dim S + x_n) dim M + l.
 */
class CochainComplex {
 public:
  explicit CochainComplex(Bimodule m);

  const Bimodule& module() const { return module_; }
  const GradedAlgebra& algebra() const { return module_.algebra(); }
  const WedgeRules& rules() const { return rules_; }

  /// Basis of C^n for n >= 1 (cached).
  const CochainSpace& space(std::size_t n) const;
  /// Homogeneous basis of C⁰ as vectors in M.
  const std::vector<Vec>& c0_basis() const { return c0_basis_; }
  std::size_t dim(std::size_t n) const { return n == 0 ? c0_basis_.size() : space(n).size(); }
  /// Γ-degree of each basis cochain of C^n.
  std::vector<Degree> degrees(std::size_t n) const;

  Vec evaluate(std::size_t n, const Vec& f, const std::vector<std::size_t>& args) const;

  /// d: C^n -> C^{n+1}.
  Vec coboundary(std::size_t n, const Vec& f) const;
  ExactMatrix coboundary_matrix(std::size_t n, Exec exec = default_exec()) const;

  /// ρ(e_x) on C^n, n >= 1.
  Vec rho(std::size_t x, std::size_t n, const Vec& f) const;
  ExactMatrix rho_matrix(std::size_t x, std::size_t n, Exec exec = default_exec()) const;

  // Full tensor cochains.
  std::size_t tensor_dim(std::size_t n) const;
  std::vector<std::size_t> tensor_word(std::size_t n, std::size_t word_index) const;
  Degree tensor_degree(std::size_t n, std::size_t pos) const;
  Vec to_tensor(std::size_t n, const Vec& f) const;
  /// Inverse of to_tensor; nullopt when t is not ε-alternating in its first n-1 slots.
  std::optional<Vec> from_tensor(std::size_t n, const Vec& t) const;
  /// D_t: Hom(S^{⊗n}, M) -> Hom(S^{⊗(n+1)}, M), t >= 1; zero for t > n.
  Vec face(std::size_t t, std::size_t n, const Vec& tensor) const;
  ExactMatrix face_matrix(std::size_t t, std::size_t n, Exec exec = default_exec()) const;

 private:
  Vec coboundary_homogeneous(std::size_t n, const Vec& f, const Degree& beta) const;

  Bimodule module_;
  WedgeRules rules_;
  std::vector<Vec> c0_basis_;
  std::vector<Degree> c0_degrees_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<CochainSpace>> spaces_;
};

/*
 * One face D_t (1-based t <= i) of a homogeneous degree-β cochain f of arity i,
 * evaluated at args = (x_1, ..., x_{i+1}).
 */
Vec face_value(const Bimodule& m, std::size_t t, const Degree& beta, const std::vector<std::size_t>& args,
               const WordEvaluator& f);

/*
 * Chevalley–Eilenberg complex C(𝔤, 𝔐) with C^i = Hom(∧^i 𝔤, 𝔐); C⁰ = 𝔐.
 * Coordinates: (monomial, value) at monomial * dim 𝔐 + value.
 */
class CEComplex {
 public:
  explicit CEComplex(LieModule m);

  const LieModule& module() const { return module_; }
  const WedgeRules& rules() const { return rules_; }
  const CochainSpace& space(std::size_t i) const;
  std::size_t dim(std::size_t i) const { return space(i).size(); }

  Vec coboundary(std::size_t i, const Vec& f) const;
  ExactMatrix coboundary_matrix(std::size_t i, Exec exec = default_exec()) const;
  /// ξ(e_x) on C^i.
  Vec xi(std::size_t x, std::size_t i, const Vec& f) const;
  ExactMatrix xi_matrix(std::size_t x, std::size_t i, Exec exec = default_exec()) const;

 private:
  Vec coboundary_homogeneous(std::size_t i, const Vec& f, const Degree& beta) const;

  LieModule module_;
  WedgeRules rules_;
  GradingGroup group_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<CochainSpace>> spaces_;
};

/// The ε-Lie side attached to (S, M): 𝔤_S acting on C¹(S, M).
CEComplex ce_complex_of(const Bimodule& m);

/// ψ: C^i(𝔤_S, C¹(S,M)) -> C^{i+1}(S,M), ψ(f)(x_1..x_i, x_{i+1}) = f(x_1..x_i)(x_{i+1}).
Vec psi(const CEComplex& ce, const CochainComplex& c, std::size_t i, const Vec& f);
Vec psi_inv(const CEComplex& ce, const CochainComplex& c, std::size_t i, const Vec& g);
ExactMatrix psi_matrix(const CEComplex& ce, const CochainComplex& c, std::size_t i);

}  // namespace lsym

#endif  // LSYM_COCHAIN_HPP
