#include "lsym/grading.hpp"

#include <sstream>
#include <utility>

namespace lsym {

std::string Degree::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < components.size(); ++j) os << (j ? "," : "") << components[j];
  os << ']';
  return os.str();
}

GradingGroup::GradingGroup(std::vector<long> factors) : factors_(std::move(factors)) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] < 0 || factors_[j] == 1)
      throw std::invalid_argument("group factor " + std::to_string(j) +
                                  " must be 0 (infinite cyclic) or >= 2");
  }
}

long GradingGroup::reduce(std::size_t j, long v) const {
  long m = factors_[j];
  if (m == 0) return v;
  long r = v % m;
  return r < 0 ? r + m : r;
}

Degree GradingGroup::make(std::vector<long> components) const {
  if (components.size() != factors_.size())
    throw std::invalid_argument("degree has " + std::to_string(components.size()) +
                                " components, group has " + std::to_string(factors_.size()) +
                                " factors");
  for (std::size_t j = 0; j < components.size(); ++j) components[j] = reduce(j, components[j]);
  return Degree{std::move(components)};
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const {
  Degree r = a;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r.components[j] = reduce(j, a.components[j] + b.components[j]);
  return r;
}

Degree GradingGroup::sub(const Degree& a, const Degree& b) const {
  Degree r = a;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r.components[j] = reduce(j, a.components[j] - b.components[j]);
  return r;
}

Degree GradingGroup::neg(const Degree& a) const { return sub(zero(), a); }

bool GradingGroup::contains(const Degree& a) const {
  if (a.components.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    if (reduce(j, a.components[j]) != a.components[j]) return false;
  return true;
}

Scalar CommutationFactor::operator()(const Degree& a, const Degree& b) const {
  Scalar r(1);
  const std::size_t n = group_.rank();
  for (std::size_t j = 0; j < n; ++j) {
    if (a.components[j] == 0) continue;
    for (std::size_t l = 0; l < n; ++l) {
      long e = a.components[j] * b.components[l];
      if (e == 0) continue;
      const Scalar& t = table_[j][l];
      if (t.is_one()) continue;
      if (t == Scalar(-1)) {
        if (e % 2) r = -r;
        continue;
      }
      r *= t.pow(e);
    }
  }
  return r;
}

int CommutationFactor::parity_sign(const Degree& a) const {
  Scalar s = (*this)(a, a);
  return s.is_one() ? 1 : -1;
}

CommutationFactor validate_factor(GradingGroup group, std::vector<std::vector<Scalar>> table) {
  const std::size_t n = group.rank();
  if (table.size() != n)
    throw FactorError("epsilon matrix has " + std::to_string(table.size()) + " rows, expected " +
                          std::to_string(n),
                      0, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (table[j].size() != n)
      throw FactorError("epsilon matrix row " + std::to_string(j) + " has wrong length", j, 0);
  }
  auto pair = [](std::size_t j, std::size_t l) {
    return "(" + std::to_string(j) + "," + std::to_string(l) + ")";
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      if (table[j][l].is_zero()) throw FactorError("epsilon entry " + pair(j, l) + " is zero", j, l);
      if (!(table[j][l] * table[l][j]).is_one())
        throw FactorError("epsilon(g_j,g_l)*epsilon(g_l,g_j) != 1 at " + pair(j, l), j, l);
      for (std::size_t k : {j, l}) {
        long m = group.factors()[k];
        if (m != 0 && !table[j][l].pow(m).is_one())
          throw FactorError("epsilon entry " + pair(j, l) + " raised to the order " +
                                std::to_string(m) + " of factor " + std::to_string(k) +
                                " is not 1",
                            j, l);
      }
    }
  }
  CommutationFactor f;
  f.group_ = std::move(group);
  f.table_ = std::move(table);
  return f;
}

CommutationFactor super_factor() { return validate_factor(GradingGroup({2}), {{Scalar(-1)}}); }

CommutationFactor trivial_factor(GradingGroup group) {
  const std::size_t n = group.rank();
  return validate_factor(std::move(group),
                         std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(1))));
}

Z2Split z2_decomposition(const CommutationFactor& f, const std::vector<Degree>& degrees) {
  Z2Split s;
  for (std::size_t k = 0; k < degrees.size(); ++k)
    (f.is_odd(degrees[k]) ? s.odd : s.even).push_back(k);
  return s;
}

}  // namespace lsym
