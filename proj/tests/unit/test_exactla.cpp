#include "crcore/exactla.hpp"

#include <doctest.h>

#include <random>

using namespace crcore;

TEST_CASE("gaussian rationals: field operations and printing") {
  Gq a(frac(1, 2), frac(-3, 4)), b(2, 1);
  CHECK((a * a.inverse() == Gq(1)));
  CHECK(((a + b) - b == a));
  CHECK((a * b == Gq(frac(7, 4), frac(-1, 1))));
  CHECK(toString(Gq(frac(-1, 2), frac(1, 3))) == "-1/2+1/3*i");
  CHECK(toString(Gq(0, -1)) == "-i");
  CHECK(toString(Gq(0)) == "0");
  CHECK_THROWS_AS(Gq(0).inverse(), std::domain_error);
}

TEST_CASE("gaussian rationals: print/parse round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9), den(1, 7);
  for (int k = 0; k < 200; ++k) {
    Gq x(frac(d(rng), den(rng)), frac(d(rng), den(rng)));
    CHECK((parseGq(toString(x)) == x));
  }
  CHECK((parseGq("3*i") == Gq(0, 3)));
  CHECK((parseGq("1/2-i") == Gq(frac(1, 2), -1)));
  CHECK_THROWS_AS(parseGq("1/0"), std::invalid_argument);
}

TEST_CASE("exact elimination: rank, kernel, solve, determinant") {
  MatQ m(3, 4);
  m << 1, 2, 3, 4, 2, 4, 6, 8, 0, 1, Rational(1, 2), 0;
  CHECK(rank<Rational>(m) == 2);
  MatQ k = kernel<Rational>(m);
  CHECK(k.cols() == 2);
  MatQ prod = m * k;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(sgn(prod(i, j)) == 0);

  Vec<Rational> rhs(3);
  rhs << 1, 2, 1;
  auto sol = solveLinear<Rational>(m, rhs);
  REQUIRE(sol.consistent);
  Vec<Rational> back = m * sol.particular;
  CHECK(back == rhs);
  rhs(1) = 3;
  CHECK_FALSE(solveLinear<Rational>(m, rhs).consistent);

  MatG g(2, 2);
  g << Gq(1), Gq(0, 1), Gq(0, -1), Gq(2);
  CHECK((determinant<Gq>(g) == Gq(1)));
}

TEST_CASE("subspaces are canonical") {
  MatG a(2, 3), b(2, 3);
  a << Gq(1), Gq(1), Gq(0), Gq(0), Gq(1), Gq(1);
  b << Gq(1), Gq(2), Gq(1), Gq(1), Gq(0), Gq(-1);
  auto A = SubspaceG::fromRows(a), B = SubspaceG::fromRows(b);
  CHECK(A == B);
  VecG v(3);
  v << Gq(2), Gq(3), Gq(1);
  CHECK(A.contains(v));
  v(2) = Gq(0, 1);
  CHECK_FALSE(A.contains(v));
  auto C = SubspaceG::fromRows(MatG(identity<Gq>(3).topRows(1)));
  CHECK(A.intersect(C).dim() == 0);
  CHECK(A.sum(C).dim() == 3);
}
