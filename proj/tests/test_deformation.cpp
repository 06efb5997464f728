#include <doctest.h>

#include "fixtures.hpp"
#include "lsym/deformation.hpp"
#include "test_support.hpp"

using namespace lsym;
using namespace lsym::fixtures;

namespace {

Vec combo(const std::vector<Vec>& basis, const std::vector<Scalar>& coeffs) {
  Vec out(basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) axpy(out, coeffs[k], basis[k]);
  return out;
}

/// Random degree-zero cochain in C^n.
Vec random_degree_zero(std::mt19937_64& g, const DeformationContext& ctx, std::size_t n) {
  Vec f(ctx.complex().dim(n));
  for (std::size_t k : ctx.degree_zero(n)) f[k] = testing::random_rational(g, 3);
  return f;
}

std::size_t span_rank(const std::vector<Vec>& vs) {
  return rank(ExactMatrix::from_columns(vs.front().size(), vs));
}

}  // namespace

TEST_CASE("infinitesimal deformations span F_a, F_b, F_c modulo coboundaries") {
  DeformationContext ctx(super3());
  std::vector<Vec> inf = infinitesimal_space(ctx);
  CHECK(inf.size() == 3);
  std::vector<Vec> fam = super3_family(ctx.complex());
  std::vector<Vec> b;
  for (std::size_t k = 0; k < ctx.d1().cols(); ++k) b.push_back(ctx.d1().column(k));
  for (const Vec& f : fam) CHECK(is_zero(ctx.d2().apply(f)));
  auto with = [&](std::vector<Vec> extra) {
    std::vector<Vec> all = b;
    all.insert(all.end(), extra.begin(), extra.end());
    return span_rank(all);
  };
  const std::size_t rb = span_rank(b);
  CHECK(rb == 6);
  CHECK(with(inf) == rb + 3);
  CHECK(with(fam) == rb + 3);
  std::vector<Vec> both = inf;
  both.insert(both.end(), fam.begin(), fam.end());
  CHECK(with(both) == rb + 3);
}

TEST_CASE("first-order integrability residual is the coboundary") {
  DeformationContext ctx(super3());
  auto g = testing::engine("first-order residual");
  const CochainComplex& c = ctx.complex();
  for (int trial = 0; trial < 5; ++trial) {
    Vec f = random_degree_zero(g, ctx, 2);
    std::vector<Vec> res = integrability_residual(ctx, DeformationSeries{{f}}, 1);
    Vec df = c.to_tensor(3, c.coboundary(2, f));
    const std::size_t n = 3;
    for (std::size_t w = 0; w < n * n * n; ++w)
      for (std::size_t l = 0; l < n; ++l) CHECK(res[w][l] == -df[w * n + l]);
  }
}

TEST_CASE("the family satisfies the second-order condition") {
  DeformationContext ctx(super3());
  std::vector<Vec> fam = super3_family(ctx.complex());
  Vec f1 = combo(fam, {Scalar(2), Scalar(1), Scalar(-3)});
  Vec mu = obstruction(ctx, DeformationSeries{{f1}});
  CHECK(is_zero(mu));
  ExtendResult e = extend(ctx, DeformationSeries{{fam[2]}});
  CHECK(e.extended);
  CHECK(is_zero(e.next));
}

TEST_CASE("obstructions of integrable series are cocycles") {
  auto g = testing::engine("obstruction cocycle");
  for (const GradedAlgebra& a : {super3(), gl11()}) {
    DeformationContext ctx(a);
    std::vector<Vec> inf = infinitesimal_space(ctx);
    for (int trial = 0; trial < 3; ++trial) {
      Vec f1 = ctx.d1().apply(random_degree_zero(g, ctx, 1));
      for (const Vec& v : inf) axpy(f1, testing::random_rational(g, 3), v);
      Vec mu = obstruction(ctx, DeformationSeries{{f1}});
      CHECK(is_zero(ctx.complex().coboundary(3, mu)));
    }
  }
}

TEST_CASE("preconditions are enforced") {
  DeformationContext ctx(super3());
  Vec bad(ctx.complex().dim(2));
  bad[ctx.degree_zero(2).front()] = 1;
  REQUIRE_FALSE(is_zero(ctx.d2().apply(bad)));
  try {
    obstruction(ctx, DeformationSeries{{bad}});
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(e.order() == 1);
  }
  CHECK_THROWS_AS(specialize(ctx, DeformationSeries{{bad}}, Scalar(1)), NotIntegrableError);
  CHECK_THROWS_AS(normalize_leading_term(ctx, DeformationSeries{{bad}}), PreconditionError);
}

TEST_CASE("specialized family members are simple left-symmetric algebras") {
  DeformationContext ctx(super3());
  std::vector<Vec> fam = super3_family(ctx.complex());
  for (const Scalar& t : {Scalar::rational(1, 2), Scalar::rational(2, 3), Scalar::rational(-1, 2)}) {
    GradedAlgebra b = specialize(ctx, DeformationSeries{{combo(fam, {t - 1, 0, 0})}}, Scalar(1));
    CHECK(b.product(0, 0) == Vec{t + 1, 0, 0});
    CHECK(b.product(0, 2) == Vec{0, 0, t});
    CHECK(is_simple(b).simple);
  }
  GradedAlgebra s2 = specialize(ctx, DeformationSeries{{fam[2]}}, Scalar(1));
  CHECK(s2.product(0, 2) == Vec{0, 1, 1});
  CHECK(is_simple(s2).simple);
}

TEST_CASE("truncated inverse and transform") {
  DeformationContext ctx(gl11());
  auto g = testing::engine("inverse");
  EquivalenceSeries phi;
  for (int k = 0; k < 3; ++k) phi.maps.push_back(random_degree_zero(g, ctx, 1));
  EquivalenceSeries inv = inverse(ctx, phi, 3);
  CHECK(inverse(ctx, inv, 3).maps == phi.maps);
  // A coboundary series stays left-symmetric after conjugation and round-trips.
  DeformationSeries f{{ctx.d1().apply(random_degree_zero(g, ctx, 1))}};
  f.terms.push_back(Vec(ctx.complex().dim(2)));
  f.terms.push_back(Vec(ctx.complex().dim(2)));
  DeformationSeries h = transform(ctx, f, phi);
  CHECK(verify_equivalence(ctx, h, f, phi, 3));
  CHECK(transform(ctx, h, inv).terms == f.terms);
}

TEST_CASE("equivalence calculus") {
  DeformationContext ctx(super3());
  std::vector<Vec> fam = super3_family(ctx.complex());
  auto g = testing::engine("equivalence");
  Vec phi = random_degree_zero(g, ctx, 1);
  Vec dphi = ctx.d1().apply(phi);
  CHECK(verify_equivalence(ctx, DeformationSeries{{dphi}}, DeformationSeries{}, EquivalenceSeries{{phi}}, 1));
  CHECK_FALSE(first_order_equivalent(ctx, fam[1], fam[2]).equivalent);
  Vec shifted = fam[0];
  axpy(shifted, Scalar(1), dphi);
  FirstOrderResult r = first_order_equivalent(ctx, shifted, fam[0]);
  CHECK(r.equivalent);
  CHECK(ctx.d1().apply(r.phi) == dphi);

  NormalizeResult n = normalize_leading_term(ctx, DeformationSeries{{dphi}});
  CHECK(n.trivial);
  // g = λ² F_a conjugated by Φ = id + λφ: the λ term is removable, the λ² term is not.
  DeformationSeries base{{Vec(ctx.complex().dim(2)), fam[0]}};
  DeformationSeries f = transform(ctx, base, EquivalenceSeries{{phi}});
  REQUIRE_FALSE(is_zero(f.terms[0]));
  NormalizeResult m = normalize_leading_term(ctx, f);
  CHECK_FALSE(m.trivial);
  CHECK(m.steps.size() == 1);
  CHECK(m.leading_order == 2);
  CHECK(is_zero(m.series.terms[0]));
  NormalizeResult again = normalize_leading_term(ctx, m.series);
  CHECK(again.steps.empty());
  CHECK(again.series.terms == m.series.terms);
}
