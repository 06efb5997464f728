#include <doctest.h>

#include "lsym/grading.hpp"
#include "lsym/linalg.hpp"
#include "lsym/scalar.hpp"

using namespace lsym;

TEST_CASE("scalar parse and canonical text") {
  CHECK(parse_scalar("3/4") == Scalar::rational(3, 4));
  CHECK(parse_scalar("-6/8").str() == "-3/4");
  CHECK(parse_scalar("2*i") == Scalar(0, 2));
  CHECK(parse_scalar("1-2*i") == Scalar(1, -2));
  CHECK(parse_scalar("1/2+3/5*i").str() == "1/2+3/5*i");
  CHECK(Scalar(1, -2).str() == "1-2*i");
  CHECK(Scalar(0, -1).str() == "-1*i");
  for (const char* s : {"0", "7", "-1/3", "5*i", "-1/2-1/3*i", "4+1*i"})
    CHECK(parse_scalar(parse_scalar(s).str()).str() == parse_scalar(s).str());
}

TEST_CASE("scalar parse errors carry the byte offset") {
  for (const char* s : {"", "x", "1/", "1+2", "1*j", "1 ", "--1"}) CHECK_THROWS_AS(parse_scalar(s), ParseError);
  try {
    parse_scalar("12a");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_scalar("1/0"), DomainError);
}

TEST_CASE("scalar field arithmetic") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1, 1) / Scalar(1, -1)) == i);
  CHECK(Scalar(3, 4).norm() == 25);
  CHECK(Scalar(2).pow(-3) == Scalar::rational(1, 8));
  CHECK(i.pow(4) == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
  CHECK_THROWS_AS(arith(1, 0, ArithOp::div), DomainError);
  CHECK(arith(Scalar::rational(1, 2), Scalar::rational(1, 3), ArithOp::sub) == Scalar::rational(1, 6));
}

TEST_CASE("grading group arithmetic") {
  GradingGroup g({0, 2});
  CHECK(g.make({3, 5}) == Degree{{3, 1}});
  CHECK(g.add(Degree{{1, 1}}, Degree{{2, 1}}) == Degree{{3, 0}});
  CHECK(g.neg(Degree{{1, 1}}) == Degree{{-1, 1}});
  CHECK_THROWS(g.make({1}));
  CHECK_THROWS(GradingGroup({1}));
}

TEST_CASE("commutation factor validation") {
  CHECK_THROWS_AS(validate_factor(GradingGroup({0}), {{Scalar(2)}}), FactorError);
  CHECK_THROWS_AS(validate_factor(GradingGroup({0, 0}), {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(1)}}),
                  FactorError);
  CHECK_THROWS_AS(validate_factor(GradingGroup({2}), {{Scalar::i()}}), FactorError);
  CHECK_THROWS_AS(validate_factor(GradingGroup({0}), {{Scalar(0)}}), FactorError);
  CommutationFactor f = validate_factor(GradingGroup({0, 0}), {{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(1)}});
  Degree a{{1, 0}}, b{{0, 1}}, c{{2, 3}};
  CHECK(f(a, b) == Scalar::i());
  CHECK(f(a, b) * f(b, a) == Scalar(1));
  CHECK(f(f.group().add(a, b), c) == f(a, c) * f(b, c));
  CHECK(f(c, f.group().add(a, b)) == f(c, a) * f(c, b));
  CHECK(f.parity_sign(f.group().add(a, b)) == 1);
  CommutationFactor s = super_factor();
  CHECK(s(Degree{{1}}, Degree{{1}}) == Scalar(-1));
  Z2Split z = z2_decomposition(s, {Degree{{0}}, Degree{{1}}, Degree{{1}}});
  CHECK(z.even == std::vector<std::size_t>{0});
  CHECK(z.odd == std::vector<std::size_t>{1, 2});
}

TEST_CASE("exact rank, nullspace and solve") {
  ExactMatrix m(3, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  m(2, 0) = Scalar::i(), m(2, 1) = 0, m(2, 2) = 1;
  RankNullspace rn = rank_nullspace(m);
  CHECK(rn.rank == 2);
  REQUIRE(rn.nullspace.size() == 1);
  CHECK(is_zero(m.apply(rn.nullspace[0])));
  Vec b{Scalar(1), Scalar(2), Scalar(0)};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.apply(*x) == b);
  CHECK_FALSE(solve(m, Vec{Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(rank(ExactMatrix::identity(4)) == 4);
  CHECK(rank(ExactMatrix(2, 5)) == 0);
}

TEST_CASE("span builder keeps an echelon basis") {
  SpanBuilder s(3);
  CHECK(s.add(Vec{Scalar(1), Scalar(1), Scalar(0)}));
  CHECK(s.add(Vec{Scalar(0), Scalar(1), Scalar(1)}));
  CHECK_FALSE(s.add(Vec{Scalar(1), Scalar(2), Scalar(1)}));
  CHECK(s.contains(Vec{Scalar(2), Scalar(0), Scalar(-2)}));
  CHECK(s.dim() == 2);
}
