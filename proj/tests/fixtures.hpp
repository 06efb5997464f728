#ifndef LSYM_TEST_FIXTURES_HPP
#define LSYM_TEST_FIXTURES_HPP

#include "lsym/algebra.hpp"
#include "lsym/bimodule.hpp"
#include "lsym/cochain.hpp"

namespace lsym::fixtures {

inline Degree even() { return Degree{{0}}; }
inline Degree odd() { return Degree{{1}}; }

/// x even, y1 and y2 odd: x·x = 2x, x·y1 = y1, x·y2 = y2, y1·y2 = x, y2·y1 = -x.
inline GradedAlgebra super3() {
  std::vector<BasisElement> basis{{"x", even()}, {"y1", odd()}, {"y2", odd()}};
  std::vector<Vec> t(9, Vec(3));
  t[0 * 3 + 0][0] = 2;
  t[0 * 3 + 1][1] = 1;
  t[0 * 3 + 2][2] = 1;
  t[1 * 3 + 2][0] = 1;
  t[2 * 3 + 1][0] = -1;
  return GradedAlgebra(super_factor(), basis, t);
}

/// gl(1|1): E11, E12, E21, E22 with V = (even, odd).
inline GradedAlgebra gl11() { return gl_epsilon(super_factor(), {even(), odd()}); }

/// e·e = e, f·f = f over the trivial factor on Z; not simple.
inline GradedAlgebra idempotents() {
  CommutationFactor f = trivial_factor(GradingGroup({0}));
  std::vector<BasisElement> basis{{"e", Degree{{0}}}, {"f", Degree{{0}}}};
  std::vector<Vec> t(4, Vec(2));
  t[0][0] = 1;
  t[3][1] = 1;
  return GradedAlgebra(f, basis, t);
}

/// The degree-zero 2-cocycles F_a, F_b, F_c of super3() as C²(S,S) coordinates:
/// F_a(x,x) = x, F_a(x,y2) = y2; F_b(x,y1) = y2; F_c(x,y2) = y1.
inline std::vector<Vec> super3_family(const CochainComplex& c) {
  const CochainSpace& s = c.space(2);
  const std::size_t x = *s.monomial_index({0});
  auto unit = [&](std::vector<std::pair<std::size_t, std::size_t>> entries) {
    Vec v(s.size());
    for (auto [last, value] : entries) v[s.position(x, last, value)] = 1;
    return v;
  };
  return {unit({{0, 0}, {2, 2}}), unit({{1, 2}}), unit({{2, 1}})};
}

}  // namespace lsym::fixtures

#endif  // LSYM_TEST_FIXTURES_HPP
