#include "crcore/models.hpp"

#include <doctest.h>

using namespace crcore;

namespace {

AbstractCore threeCore() {
  auto c = std::make_shared<ContactAlgebra>(1, 1);
  return AbstractCore::fromGenerators(c, {parseElement(*c, "z^2", 0, 1), parseElement(*c, "z^3", 1, 1)});
}

}  // namespace

TEST_CASE("dimension bound values") {
  CHECK(dimensionBoundValue(1, 0) == 1);
  CHECK(dimensionBoundValue(1, 1) == 1);
  CHECK(dimensionBoundValue(2, 0) == 3);
  CHECK(dimensionBoundValue(2, 1) == 4);
  CHECK(dimensionBound(2, {3, 4}));
  CHECK_FALSE(dimensionBound(2, {3, 5}));
}

TEST_CASE("core axioms") {
  auto core = threeCore();
  auto rep = validate(core);
  CHECK(rep.valid);
  CHECK(core.height() == 1);
  CHECK(core.realDim() == 7);
  CHECK(leviRank(core, 0) == 1);
  CHECK(leviRank(core, 1) == 1);
  auto c = core.c;
  // z^3 without z^2 breaks [m^{1(10)}, c^{-1(01)}] in m^{0(10)}
  auto broken = AbstractCore::fromGenerators(c, {parseElement(*c, "z^3", 1, 1)});
  CHECK_FALSE(validate(broken).valid);
  CHECK_THROWS(AbstractCore::fromGenerators(c, {parseElement(*c, "z*zb", 0, 1)}));
  CHECK(validate(AbstractCore::heisenberg(c)).valid);
}

TEST_CASE("automorphisms preserve brackets and cores") {
  auto c = std::make_shared<ContactAlgebra>(2, 1);
  Automorphism g{zeros<Gq>(4, 4), Gq(1)};
  // U(1,1) boost with cosh = 5/4, sinh = 3/4
  g.A(0, 0) = g.A(1, 1) = g.A(2, 2) = g.A(3, 3) = Gq(frac(5, 4));
  g.A(0, 1) = g.A(1, 0) = g.A(2, 3) = g.A(3, 2) = Gq(frac(3, 4));
  CHECK(autViolations(*c, g).empty());
  const Element X = parseElement(*c, "z1^2+i*z1*zb2", 0, 1), Y = parseElement(*c, "z2^3-zb1", 1, 1);
  CHECK(applyAutomorphism(*c, g, c->bracket(X, Y)) == c->bracket(applyAutomorphism(*c, g, X), applyAutomorphism(*c, g, Y)));
  auto core = AbstractCore::fromGenerators(c, {parseElement(*c, "z1*z2", 0, 1)});
  CHECK(validate(applyAutomorphism(g, core)).valid);
  Automorphism bad = g;
  bad.A(0, 1) = Gq(1);
  CHECK_FALSE(autViolations(*c, bad).empty());
}

TEST_CASE("universal pair at n = 1") {
  auto c = std::make_shared<ContactAlgebra>(1, 1);
  auto pair = buildUniversal(c, 3);
  CHECK(pairViolations(pair).empty());
  auto chain = freemanSequence(pair);
  CHECK((chain.status == ChainStatus::CertifiedUpToBudget));
  auto pred = predictedFreeman(pair, static_cast<int>(chain.terms.size()));
  REQUIRE(pred.size() == chain.terms.size());
  for (std::size_t k = 0; k < pred.size(); ++k) CHECK(pred[k] == chain.terms[k]);
  auto ex = extractCore(pair, chain);
  REQUIRE(ex.ok);
  for (int p = 0; p <= 3; ++p) CHECK(ex.core.dim10(p) == 1);
  // u^p leaves out exactly the minimal ad J eigenspace
  for (int p = -1; p <= 3; ++p) CHECK(pair.q.dim(p) == c->dim(p) - 1);
}

TEST_CASE("Freeman and Tanaka sequences of the 3-nondegenerate algebra") {
  auto c = std::make_shared<ContactAlgebra>(1, 1);
  std::vector<Element> g{c->T(), c->z(0), c->zb(0), c->E()};
  Element M = parseElement(*c, "z^2+z*zb", 0, 1);
  Element N = parseElement(*c, "z^3+2*z^2*zb+z*zb^2-3*i*z-3*i*zb", 1, 1);
  for (const auto& x : {M, N}) {
    g.push_back(x);
    g.push_back(c->conjugate(x));
  }
  CRAlgebraPair p;
  p.c = c;
  p.maxDegree = 1;
  p.ghat = gradedSpan(*c, g);
  p.q = intersect(*c, p.ghat, universalU(*c, -2, 1));
  CHECK(pairViolations(p).empty());
  auto chain = freemanSequence(p);
  CHECK(chain.k == 3);
  CHECK(chain.dims() == std::vector<int>{4, 3, 2, 1});
  auto t = tanakaSequence(p, chain);
  CHECK(t.dimM2 == 1);
  auto ex = extractCore(p, chain);
  REQUIRE(ex.ok);
  const auto expected = threeCore();
  CHECK(ex.core.m10.at(0) == expected.m10.at(0));
  CHECK(ex.core.m10.at(1) == expected.m10.at(1));
  CHECK(ex.core.height() == 1);
  CHECK(ex.core.realDim() == 7);
}
