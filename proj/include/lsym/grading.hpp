#ifndef LSYM_GRADING_HPP
#define LSYM_GRADING_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsym/scalar.hpp"

namespace lsym {

/// Element of a finitely generated abelian group, one component per cyclic factor.
struct Degree {
  std::vector<long> components;

  auto operator<=>(const Degree&) const = default;
  bool operator==(const Degree&) const = default;
  std::string str() const;
};

/// Product of cyclic factors; 0 stands for an infinite cyclic factor, m >= 2 for Z/mZ.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<long> factors);

  const std::vector<long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  /// Reduces finite components into [0, m). Throws on a length mismatch.
  Degree make(std::vector<long> components) const;
  Degree zero() const { return Degree{std::vector<long>(factors_.size(), 0)}; }
  Degree add(const Degree& a, const Degree& b) const;
  Degree sub(const Degree& a, const Degree& b) const;
  Degree neg(const Degree& a) const;
  bool contains(const Degree& a) const;

  bool operator==(const GradingGroup&) const = default;

 private:
  long reduce(std::size_t j, long v) const;
  std::vector<long> factors_;
};

/// Raised by validate_factor; names the generator pair that breaks an axiom.
class FactorError : public std::invalid_argument {
 public:
  FactorError(const std::string& what, std::size_t j, std::size_t l)
      : std::invalid_argument(what), j_(j), l_(l) {}
  std::size_t j() const { return j_; }
  std::size_t l() const { return l_; }

 private:
  std::size_t j_, l_;
};

/*
 * Commutation factor stored on generators. Values on arbitrary degrees are
 * products of generator entries raised to component powers, which makes the
 * two biadditivity laws hold by construction.
 */
class CommutationFactor {
 public:
  CommutationFactor() = default;

  const GradingGroup& group() const { return group_; }
  const std::vector<std::vector<Scalar>>& table() const { return table_; }

  Scalar operator()(const Degree& a, const Degree& b) const;
  /// ε(a, a), always +1 or -1.
  int parity_sign(const Degree& a) const;
  bool is_odd(const Degree& a) const { return parity_sign(a) < 0; }

  friend CommutationFactor validate_factor(GradingGroup group,
                                           std::vector<std::vector<Scalar>> table);

 private:
  GradingGroup group_;
  std::vector<std::vector<Scalar>> table_;
};

/// Checks reciprocity, nonzero entries and the order constraint on finite factors.
CommutationFactor validate_factor(GradingGroup group, std::vector<std::vector<Scalar>> table);

/// Z/2 with ε(a, b) = (-1)^{ab}.
CommutationFactor super_factor();
/// ε ≡ 1 on a group.
CommutationFactor trivial_factor(GradingGroup group);

inline Scalar epsilon(const CommutationFactor& f, const Degree& a, const Degree& b) {
  return f(a, b);
}

struct Z2Split {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
};

/// Indices into `degrees`, split by the sign of ε(α, α).
Z2Split z2_decomposition(const CommutationFactor& f, const std::vector<Degree>& degrees);

}  // namespace lsym

#endif  // LSYM_GRADING_HPP
