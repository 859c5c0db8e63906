#include "crcore/abscore.hpp"
#include "crcore/classify7.hpp"
#include "oracle/s1_action.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace crcore;

namespace {

CoreLineRep rep(int r, Gq a, Gq b, Gq c) { return CoreLineRep{r, {a, b, c}}; }
const Gq I = Gq::I();

Rational randomRational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return frac(num(rng), den(rng));
}

}  // namespace

TEST_CASE("invariants of sample lines") {
  auto inv = orbitInvariants(rep(2, 1, Gq(0, frac(1, 2)), 0));
  REQUIRE(inv.R);
  CHECK(*inv.R == Rational(9, 25));
  CHECK(orbitInvariants(rep(2, 1, I, 0)).qq == 0);
  auto e3 = orbitInvariants(rep(1, 0, 0, 1));
  CHECK(e3.qq == 1);
  CHECK(e3.h == -1);
  CHECK(e3.dependent);
  CHECK(e3.causal == -1);
  CHECK_THROWS(orbitInvariants(rep(1, 0, 0, 0)));
}

TEST_CASE("canonical forms of sample lines") {
  auto l = canonicalForm(rep(2, I, 0, 0));
  CHECK(l.family == "m_t");
  CHECK(l.t == Rational(0));
  l = canonicalForm(rep(2, 1, I, 0));
  CHECK(l.t == Rational(1));
  CHECK(l.stabilizer == "C+so2");
  l = canonicalForm(rep(1, Gq(1, 1), 0, Gq(1, -1)));
  CHECK(l.family == "mtilde_t");
  CHECK(l.t == Rational(0));
  l = canonicalForm(rep(2, 1, Gq(0, frac(1, 2)), 0));
  CHECK(l.t == Rational(1, 2));
  CHECK(l.stabilizer == "C");
  CHECK(canonicalForm(rep(1, 1, I, 1)).family == "m_pm");
  CHECK(canonicalForm(rep(1, 1, I, 1)).sign == 1);
  CHECK(canonicalForm(rep(1, 1, -I, 1)).sign == -1);
  CHECK(canonicalForm(rep(1, 0, 0, 1)).family == "m_<0");
  CHECK(canonicalForm(rep(1, 1, 0, 1)).family == "m_null");
}

TEST_CASE("irrational parameters are carried as exact equations") {
  // z = eps1 + i(eps1 + eps2)/2 has R = 5/9, not a rational square
  auto l = canonicalForm(rep(2, Gq(1, frac(1, 2)), Gq(0, frac(1, 2)), 0));
  CHECK_FALSE(l.t);
  CHECK(l.parameter.rfind("((1-t^2)/(1+t^2))^2 = ", 0) == 0);
  auto m = canonicalForm(rep(1, Gq(2, 3), Gq(0), Gq(2, -1)));
  CHECK(m.family == "mtilde_t");
  CHECK(m.t == Rational(1, 2));
  auto w = canonicalForm(rep(1, Gq(1, 1), 0, Gq(1, -1)));
  CHECK(w.t == Rational(0));
  auto s = canonicalForm(rep(1, 0, Gq(1), Gq(1, 1)));
  CHECK(s.family == "mtilde_t");
  CHECK(s.t == Rational(-1, 2));
}

TEST_CASE("stabilizer algebras of the canonical forms") {
  CHECK(stabilizerAlgebra(rep(2, 1, I, 0)).realDim == 3);
  CHECK(stabilizerAlgebra(rep(1, 1, 0, 1)).tag == "C+(R⋉R)");
  CHECK(stabilizerAlgebra(rep(1, 1, 0, 1)).realDim == 4);
  CHECK(stabilizerAlgebra(rep(2, 1, Gq(0, frac(1, 2)), 0)).tag == "C");
  CHECK(stabilizerAlgebra(rep(1, 1, 0, 0)).tag == "C+so(1,1)");
  CHECK(stabilizerAlgebra(rep(1, 0, 0, 1)).tag == "C+so2");
  CHECK(stabilizerAlgebra(rep(1, 1, I, 1)).tag == "C");
  // the real line eps1 + eps3 is fixed by the null rotation generated by L3 + boost
  for (const auto& A : stabilizerAlgebra(rep(1, 1, 0, 1)).kPart) {
    Rational tr = A(0, 0) + A(1, 1) + A(2, 2);
    CHECK(tr == 0);
  }
}

TEST_CASE("labels are invariant under C^x K") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int r : {2, 1})
    for (int trial = 0; trial < 40; ++trial) {
      auto A = cayleyElement(r, randomRational(rng), randomRational(rng), randomRational(rng));
      if (!A) continue;
      const Gq c(randomRational(rng) + 1 / Rational(7), randomRational(rng));
      CoreLineRep z = rep(r, Gq(randomRational(rng), randomRational(rng)), Gq(randomRational(rng), randomRational(rng)),
                          Gq(randomRational(rng), randomRational(rng)));
      if (z.z[0].isZero() && z.z[1].isZero() && z.z[2].isZero()) continue;
      auto w = actOn(z, c, *A);
      CHECK(canonicalForm(z) == canonicalForm(w));
      CHECK(orbitInvariants(z).planeType == orbitInvariants(w).planeType);
      CHECK(stabilizerAlgebra(z).tag == stabilizerAlgebra(w).tag);
      ++checked;
    }
  CHECK(checked > 40);
}

TEST_CASE("Cayley elements preserve the form") {
  for (int r : {2, 1}) {
    auto A = cayleyElement(r, frac(1, 3), frac(-1, 2), frac(2, 5));
    REQUIRE(A);
    MatQ eta = identity<Rational>(3);
    if (r == 1) eta(2, 2) = -1;
    CHECK(MatQ(A->transpose() * eta * *A) == eta);
    CHECK(determinant<Rational>(*A) == 1);
  }
}

TEST_CASE("dictionary round trip and equivariance with Aut(c, J)") {
  std::mt19937 rng(23);
  for (int r : {2, 1}) {
    ContactAlgebra c(2, r);
    Automorphism g{zeros<Gq>(4, 4), Gq(1)};
    if (r == 2) {
      g.A(0, 0) = Gq(frac(3, 5)), g.A(0, 1) = Gq(0, frac(-4, 5)), g.A(1, 0) = Gq(0, frac(-4, 5)), g.A(1, 1) = Gq(frac(3, 5));
    } else {
      g.A(0, 0) = Gq(frac(5, 4)), g.A(0, 1) = Gq(0, frac(3, 4)), g.A(1, 0) = Gq(0, frac(-3, 4)), g.A(1, 1) = Gq(frac(5, 4));
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) g.A(2 + a, 2 + b) = g.A(a, b).conj();
    REQUIRE(autViolations(c, g).empty());
    for (int trial = 0; trial < 20; ++trial) {
      CoreLineRep z = rep(r, Gq(randomRational(rng), randomRational(rng)), Gq(randomRational(rng), randomRational(rng)),
                          Gq(randomRational(rng), randomRational(rng)));
      if (z.z[0].isZero() && z.z[1].isZero() && z.z[2].isZero()) continue;
      Element X = elementFromCoreLine(c, z);
      auto back = coreLineFromElement(c, X);
      CHECK(back.z == z.z);
      auto moved = coreLineFromElement(c, applyAutomorphism(c, g, X));
      CHECK(canonicalForm(moved) == canonicalForm(z));
    }
  }
}

TEST_CASE("circle action closed forms agree with the direct action") {
  std::vector<std::pair<Rational, Rational>> pts{{1, 0}, {0, 1}, {frac(3, 5), frac(4, 5)}, {frac(-5, 13), frac(12, 13)},
                                                 {frac(8, 17), frac(-15, 17)}};
  std::mt19937 rng(31);
  for (int r : {2, 1}) {
    int n = 0;
    for (const auto& [a, b] : pts)
      for (int k = 0; k < 6; ++k) {
        const Rational t1 = randomRational(rng), t2 = randomRational(rng) + frac(1, 11);
        auto o = oracle::s1Direct(r, a, b, t1, t2);
        auto d = s1Action(r, a, b, t1, t2);
        REQUIRE(o);
        REQUIRE(d.defined);
        CHECK(d.t1 == o->t1);
        CHECK(d.t2 * d.t2 == o->t2sq);
        CHECK(sgn(d.t2) == o->t2sign);
        auto p = s1ActionDisplayed(r, a, b, t1, t2);
        CHECK(p.t1 == o->t1);
        if (r == 1) CHECK(p.t2sq == o->t2sq);
        ++n;
      }
    CHECK(n >= 20);
  }
  auto id = s1Action(2, 1, 0, frac(2, 3), frac(5, 7));
  CHECK(id.t1 == frac(2, 3));
  CHECK(id.t2 == frac(5, 7));
  auto fixed = s1Action(2, 0, 1, 0, 1);
  CHECK(fixed.t1 == 0);
  CHECK(fixed.t2 == 1);
  auto fixedDisplayed = s1ActionDisplayed(2, 0, 1, 0, 1);
  CHECK(fixedDisplayed.t2sq == 1);
  CHECK_THROWS_AS(s1Action(2, 1, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("the displayed (2,0) t2 expression differs from the direct action") {
  auto p = s1ActionDisplayed(2, frac(3, 5), frac(4, 5), 1, 1);
  auto o = oracle::s1Direct(2, frac(3, 5), frac(4, 5), 1, 1);
  CHECK(p.t1 == o->t1);
  CHECK(p.t2sq != o->t2sq);
}

TEST_CASE("vanishing denominators are signalled") {
  // D = (t1 b - a)^2 + (t2 b)^2 = 0 needs t2 = 0 and t1 b = a
  CHECK_FALSE(s1Action(1, frac(3, 5), frac(4, 5), frac(3, 4), 0).defined);
  CHECK_FALSE(s1ActionDisplayed(2, frac(3, 5), frac(4, 5), frac(3, 4), 0).defined);
}

TEST_CASE("tables") {
  auto t20 = enumerateTable(2), t11 = enumerateTable(1);
  int admissible = 0;
  for (const auto& row : t20) {
    CHECK(row.verified);
    admissible += row.admissible;
  }
  for (const auto& row : t11) {
    CHECK(row.verified);
    admissible += row.admissible;
  }
  CHECK(admissible == 7);
  auto j = nlohmann::json::parse(tableJson(t11));
  for (const char* key : {"family", "parameter", "generator", "stabilizer", "admissible"}) CHECK(j[0].contains(key));
  CHECK(tableMarkdown(t20).find("| (2,0) | m_t | t = 1 |") != std::string::npos);
  // fixed generators re-parse to the same element
  ContactAlgebra c(2, 1);
  for (const auto& row : t11)
    if (row.note.empty()) CHECK(c.toString(parseElement(c, row.generator, 0, 1)) == row.generator);
  CHECK_THROWS_AS(enumerateTable(0), std::invalid_argument);
}

TEST_CASE("invariants separate the canonical forms") {
  std::vector<CoreLineRep> forms;
  for (Rational t : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) forms.push_back(rep(2, 1, Gq(0, t), 0));
  for (Rational t : {Rational(-1), Rational(-1, 3), Rational(0), Rational(1, 3), Rational(1)})
    forms.push_back(rep(1, 1, Gq(0, t), 0));
  for (Rational t : {Rational(-2), Rational(0), Rational(3)}) forms.push_back(rep(1, Gq(1, t + 1), 0, Gq(1, t - 1)));
  forms.push_back(rep(1, 1, I, 1));
  forms.push_back(rep(1, 1, -I, 1));
  forms.push_back(rep(1, 0, 0, 1));
  forms.push_back(rep(1, 1, 0, 1));
  for (std::size_t a = 0; a < forms.size(); ++a)
    for (std::size_t b = a + 1; b < forms.size(); ++b) {
      if (forms[a].r != forms[b].r) continue;
      CHECK_FALSE(orbitInvariants(forms[a]) == orbitInvariants(forms[b]));
      CHECK_FALSE(canonicalForm(forms[a]) == canonicalForm(forms[b]));
    }
}
