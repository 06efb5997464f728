#include <doctest.h>

#include "fixtures.hpp"
#include "lsym/cochain.hpp"

using namespace lsym;
using namespace lsym::fixtures;

namespace {

ExactMatrix scaled(const ExactMatrix& m, const Scalar& c) {
  ExactMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= c;
  return r;
}

/// ρ(v) for an algebra vector v.
ExactMatrix rho_of(const CochainComplex& c, const Vec& v, std::size_t n) {
  ExactMatrix r(c.dim(n), c.dim(n));
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) r = r + scaled(c.rho_matrix(k, n), v[k]);
  return r;
}

}  // namespace

TEST_CASE("wedge normalization signs") {
  GradedAlgebra a = super3();  // x even; y1, y2 odd
  auto m = normalize_wedge(a, {1, 0});
  REQUIRE(m);
  CHECK(m->indices == std::vector<std::size_t>{0, 1});
  CHECK(m->sign == Scalar(-1));  // -ε(odd, even) = -1
  auto yy = normalize_wedge(a, {2, 1});
  REQUIRE(yy);
  CHECK(yy->sign == Scalar(1));  // -ε(odd, odd) = +1
  CHECK_FALSE(normalize_wedge(a, {0, 0}));
  auto rep = normalize_wedge(a, {1, 1});
  REQUIRE(rep);
  CHECK(rep->indices == std::vector<std::size_t>{1, 1});
  WedgeRules r = wedge_rules(a);
  CHECK(canonical_monomials(r, 2).size() == 5);
  CHECK(canonical_monomials(r, 3).size() == 7);  // x y1 y1, x y1 y2, x y2 y2, and four odd cubes
}

TEST_CASE("cochain space dimensions") {
  CochainComplex c(regular_bimodule(super3()));
  CHECK(c.dim(0) == 0);
  CHECK(c.dim(1) == 9);
  CHECK(c.dim(2) == 27);
  CHECK(c.dim(3) == 45);
  CochainComplex g(regular_bimodule(gl11()));
  CHECK(g.dim(0) == 4);
  CHECK(g.dim(1) == 16);
  CHECK(g.dim(2) == 64);
  CHECK(g.dim(3) == 128);
}

TEST_CASE("C0 is the associativity nullspace") {
  CochainComplex c(regular_bimodule(idempotents()));
  CHECK(c.dim(0) == 2);
  CochainComplex g(regular_bimodule(gl11()));
  for (const Vec& m : g.c0_basis()) {
    const Bimodule& b = g.module();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Vec lhs = b.act_left(g.algebra().product(i, j), m);
        Vec rhs = b.act_left(i, b.act_left(j, m));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("coboundary squares to zero") {
  for (const GradedAlgebra& a : {super3(), gl11(), idempotents()}) {
    CochainComplex c(regular_bimodule(a));
    for (std::size_t n = 0; n <= 2; ++n) CHECK((c.coboundary_matrix(n + 1) * c.coboundary_matrix(n)).is_zero());
  }
}

TEST_CASE("coboundary matrix agrees with the pointwise coboundary") {
  CochainComplex c(regular_bimodule(super3()));
  ExactMatrix d = c.coboundary_matrix(2);
  for (std::size_t k = 0; k < c.dim(2); ++k) {
    Vec e(c.dim(2));
    e[k] = 1;
    CHECK(d.column(k) == c.coboundary(2, e));
  }
}

TEST_CASE("pre-simplicial identities on full tensors") {
  for (const GradedAlgebra& a : {super3(), gl11()}) {
    CochainComplex c(regular_bimodule(a));
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t t = 2; t <= 3; ++t)
        for (std::size_t s = 1; s < t; ++s) {
          ExactMatrix lhs = c.face_matrix(t, n + 1) * c.face_matrix(s, n);
          ExactMatrix rhs = c.face_matrix(s, n + 1) * c.face_matrix(t - 1, n);
          CHECK_MESSAGE(lhs == rhs, "n=" << n << " s=" << s << " t=" << t);
        }
  }
}

TEST_CASE("alternating sum of faces is the coboundary") {
  CochainComplex c(regular_bimodule(super3()));
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t k = 0; k < c.dim(n); ++k) {
      Vec f(c.dim(n));
      f[k] = 1;
      Vec tensor = c.to_tensor(n, f);
      Vec sum(c.tensor_dim(n + 1));
      for (std::size_t t = 1; t <= n; ++t) axpy(sum, t % 2 == 1 ? Scalar(1) : Scalar(-1), c.face(t, n, tensor));
      CHECK(sum == c.to_tensor(n + 1, c.coboundary(n, f)));
    }
}

TEST_CASE("tensor embedding round trip") {
  CochainComplex c(regular_bimodule(gl11()));
  for (std::size_t n = 1; n <= 3; ++n) {
    Vec f(c.dim(n));
    for (std::size_t k = 0; k < f.size(); k += 3) f[k] = Scalar(static_cast<long>(k % 7) - 3);
    auto back = c.from_tensor(n, c.to_tensor(n, f));
    REQUIRE(back);
    CHECK(*back == f);
  }
  Vec t(c.tensor_dim(3));
  t[0] = 1;  // (E11, E11, E11) alone is not alternating in the wedge slots
  CHECK_FALSE(c.from_tensor(3, t));
}

TEST_CASE("rho is a representation and commutes with d") {
  for (const GradedAlgebra& a : {super3(), gl11()}) {
    CochainComplex c(regular_bimodule(a));
    EpsilonLieAlgebra g = associated_lie(a);
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t x = 0; x < a.dim(); ++x) {
        CHECK(c.coboundary_matrix(n) * c.rho_matrix(x, n) == c.rho_matrix(x, n + 1) * c.coboundary_matrix(n));
        for (std::size_t y = 0; y < a.dim(); ++y) {
          ExactMatrix lhs = rho_of(c, g.bracket(x, y), n);
          ExactMatrix rhs = c.rho_matrix(x, n) * c.rho_matrix(y, n) -
                            scaled(c.rho_matrix(y, n) * c.rho_matrix(x, n), a.eps(x, y));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("CE complex and currying") {
  CochainComplex c(regular_bimodule(super3()));
  CEComplex ce = ce_complex_of(c.module());
  CHECK((ce.coboundary_matrix(2) * ce.coboundary_matrix(1)).is_zero());
  CHECK((ce.coboundary_matrix(1) * ce.coboundary_matrix(0)).is_zero());
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(ce.dim(i) == c.dim(i + 1));
    ExactMatrix p = psi_matrix(ce, c, i);
    CHECK(rank(p) == p.rows());
    for (std::size_t k = 0; k < ce.dim(i); ++k) {
      Vec f(ce.dim(i));
      f[k] = 1;
      CHECK(psi_inv(ce, c, i, psi(ce, c, i, f)) == f);
      for (std::size_t x = 0; x < 3; ++x) CHECK(psi(ce, c, i, ce.xi(x, i, f)) == c.rho(x, i + 1, psi(ce, c, i, f)));
    }
    CHECK(psi_matrix(ce, c, i + 1) * ce.coboundary_matrix(i) == c.coboundary_matrix(i + 1) * p);
  }
}
