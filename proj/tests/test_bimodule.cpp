#include <doctest.h>

#include "fixtures.hpp"
#include "lsym/bimodule.hpp"

using namespace lsym;
using namespace lsym::fixtures;

TEST_CASE("regular bimodules pass and are classified") {
  for (const GradedAlgebra& a : {super3(), gl11(), idempotents()}) {
    Bimodule m = regular_bimodule(a);
    CHECK(check_bimodule(m).pass());
  }
  BimoduleFlags f = classify(regular_bimodule(super3()));
  CHECK_FALSE(f.antisymmetric);
  CHECK_FALSE(f.special);  // (y1·y2)·y1 = y1 but y1·(y2·y1) = 0
  CHECK(classify(regular_bimodule(gl11())).special);
}

TEST_CASE("a broken right action is reported") {
  GradedAlgebra a = idempotents();
  Bimodule r = regular_bimodule(a);
  std::vector<Vec> right = r.right_table();
  right[0 * 2 + 1] = Vec{Scalar(1), Scalar(0)};  // e·f := e
  Bimodule bad(a, r.basis(), r.left_table(), right);
  CHECK_FALSE(check_bimodule(bad).pass());
}

TEST_CASE("hom bimodule action on a degree-zero map") {
  Bimodule h = hom_bimodule(regular_bimodule(super3()));
  CHECK(h.dim() == 9);
  CHECK(check_bimodule(h).pass());
  // f: x -> x. x·f = g with g(x) = 2x, g(y1) = y1, g(y2) = y2.
  Vec f(9);
  f[0 * 3 + 0] = 1;
  Vec g = h.act_left(0, f);
  Vec expect(9);
  expect[0 * 3 + 0] = 2;
  expect[1 * 3 + 1] = 1;
  expect[2 * 3 + 2] = 1;
  CHECK(g == expect);
  CHECK(classify(h).antisymmetric);
}

TEST_CASE("tensor bimodule action") {
  Bimodule r = regular_bimodule(super3());
  Bimodule t = tensor_bimodule(r, r);
  CHECK(t.dim() == 9);
  CHECK(check_bimodule(t).pass());
  Vec y1y2(9);
  y1y2[1 * 3 + 2] = 1;
  Vec expect(9);
  expect[1 * 3 + 2] = 2;
  CHECK(t.act_left(0, y1y2) == expect);
}

TEST_CASE("Lie module of the regular bimodule is the adjoint action") {
  GradedAlgebra a = super3();
  LieModule m = lie_module_of(regular_bimodule(a));
  EpsilonLieAlgebra g = associated_lie(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.act(i, j) == g.bracket(i, j));
  CHECK(check_lie_module(m).pass());
  CHECK(check_lie_module(lie_module_of(hom_bimodule(regular_bimodule(gl11())))).pass());
}
