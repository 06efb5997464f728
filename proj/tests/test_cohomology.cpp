#include <doctest.h>

#include "fixtures.hpp"
#include "lsym/cohomology.hpp"

using namespace lsym;
using namespace lsym::fixtures;

namespace {

struct Dims {
  std::size_t C, Z, B, H;
};

void check_dims(const CohomologyResult& h, Dims d) {
  CHECK(h.dim_C == d.C);
  CHECK(h.dim_Z == d.Z);
  CHECK(h.dim_B == d.B);
  CHECK(h.dim_H == d.H);
  CHECK(h.dim_H == h.dim_Z - h.dim_B);
  CHECK(h.representatives.size() == h.dim_H);
}

}  // namespace

// Expected values come from the independent rational oracle in tests/oracle.
TEST_CASE("cohomology of the 3-dimensional superalgebra") {
  CochainComplex c(regular_bimodule(super3()));
  check_dims(cohomology_at(c, 0), {0, 0, 0, 0});
  check_dims(cohomology_at(c, 1), {9, 3, 0, 3});
  CohomologyResult h2 = cohomology_at(c, 2);
  check_dims(h2, {27, 9, 6, 3});
  check_dims(cohomology_at(c, 3), {45, 18, 18, 0});
  CHECK(h2.by_degree.at(Degree{{0}}).dim_C == 13);
  CHECK(h2.by_degree.at(Degree{{0}}).dim_Z == 5);
  CHECK(h2.by_degree.at(Degree{{0}}).dim_B == 2);
  CHECK(h2.by_degree.at(Degree{{0}}).dim_H == 3);
  CHECK(h2.by_degree.at(Degree{{1}}).dim_H == 0);
  for (const Degree& d : h2.representative_degrees) CHECK(d == Degree{{0}});
}

TEST_CASE("cohomology of gl(1|1)") {
  CochainComplex c(regular_bimodule(gl11()));
  check_dims(cohomology_at(c, 0), {4, 1, 0, 1});
  check_dims(cohomology_at(c, 1), {16, 3, 3, 0});
  check_dims(cohomology_at(c, 2), {64, 19, 13, 6});
}

TEST_CASE("representatives are homogeneous cocycles independent modulo coboundaries") {
  CochainComplex c(regular_bimodule(gl11()));
  CohomologyResult h = cohomology_at(c, 2);
  ExactMatrix d = c.coboundary_matrix(2);
  SpanBuilder span(c.dim(2));
  for (const Vec& b : h.b_basis) span.add(b);
  for (std::size_t k = 0; k < h.representatives.size(); ++k) {
    const Vec& r = h.representatives[k];
    CHECK(is_zero(d.apply(r)));
    CHECK(span.add(r));
    for (std::size_t p = 0; p < r.size(); ++p)
      if (!r[p].is_zero()) CHECK(c.space(2).degree(p) == h.representative_degrees[k]);
  }
}

TEST_CASE("CE cohomology and the currying bridge") {
  CochainComplex c(regular_bimodule(super3()));
  CEComplex ce = ce_complex_of(c.module());
  for (std::size_t i = 1; i <= 2; ++i) {
    CurryingReport r = theorem41_check(c, ce, i);
    CHECK(r.pass());
    CHECK(r.xi_rho_residual == 0);
    CHECK(r.d_residual == 0);
  }
  CHECK(theorem41_check(c, ce, 1).dim_H_S == 3);
  CHECK(theorem41_check(c, ce, 2).dim_H_S == 0);
  CochainComplex g(regular_bimodule(gl11()));
  CurryingReport rg = theorem41_check(g, ce_complex_of(g.module()), 1);
  CHECK(rg.pass());
  CHECK(rg.dim_H_CE == 6);
}

TEST_CASE("four-term dimension identity") {
  for (const GradedAlgebra& a : {super3(), gl11(), idempotents()}) {
    CochainComplex c(regular_bimodule(a));
    FourTermReport r = remark42_check(c, ce_complex_of(c.module()));
    CHECK(r.alternating_sum() == 0);
  }
  CochainComplex c(regular_bimodule(super3()));
  FourTermReport r = remark42_check(c, ce_complex_of(c.module()));
  CHECK(r.dim_H0_CE == 3);
  CHECK(r.dim_H1 == 3);
}
