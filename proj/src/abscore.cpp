#include "crcore/abscore.hpp"

namespace crcore {

namespace {
bool inExtremal10(const ContactAlgebra& c, const Element& X) {
  for (const auto& t : X.terms())
    if (t.layer != -1 || t.mono.bidegree(c.n()).second != 0) return false;
  return true;
}
}  // namespace

int AbstractCore::height() const {
  int h = -1;
  for (const auto& [p, s] : m10)
    if (s.dim() > 0) h = std::max(h, p);
  return h;
}

int AbstractCore::dim10(int p) const {
  auto it = m10.find(p);
  return it == m10.end() ? 0 : static_cast<int>(it->second.dim());
}

int AbstractCore::realDim() const {
  int d = 1 + 2 * c->n();
  for (const auto& [p, s] : m10) d += 2 * static_cast<int>(s.dim());
  return d;
}

std::vector<Element> AbstractCore::generators(int p) const {
  auto it = m10.find(p);
  if (it == m10.end()) return {};
  return elementsOf(*c, p, it->second);
}

bool operator==(const AbstractCore& a, const AbstractCore& b) {
  if (a.c->n() != b.c->n() || a.c->r() != b.c->r()) return false;
  const int h = std::max(a.height(), b.height());
  for (int p = 0; p <= h; ++p) {
    if (a.dim10(p) != b.dim10(p)) return false;
    if (a.dim10(p) > 0 && !(a.m10.at(p) == b.m10.at(p))) return false;
  }
  return true;
}

AbstractCore AbstractCore::fromGenerators(ContactPtr c, const std::vector<Element>& gens) {
  for (const auto& g : gens)
    if (!g.isZero() && (g.degree() < 0 || !inExtremal10(*c, g)))
      throw std::invalid_argument("core generator " + c->toString(g) + " is not in M^{p(10)}");
  GradedSubspace s = gradedSpan(*c, gens);
  AbstractCore core{std::move(c), {}};
  for (auto& [p, sub] : s.parts)
    if (sub.dim() > 0) core.m10[p] = sub;
  return core;
}

long dimensionBoundValue(int n, int p) {
  // binom(n + p + 1, p + 2)
  long r = 1;
  for (int k = 1; k <= p + 2; ++k) r = r * (n + p + 1 - (p + 2) + k) / k;
  return r;
}

bool dimensionBound(int n, const std::vector<int>& dims10) {
  for (std::size_t p = 0; p < dims10.size(); ++p)
    if (dims10[p] > dimensionBoundValue(n, static_cast<int>(p))) return false;
  return true;
}

bool dimensionBound(const AbstractCore& core) {
  std::vector<int> d;
  for (int p = 0; p <= core.height(); ++p) d.push_back(core.dim10(p));
  return dimensionBound(core.c->n(), d);
}

int leviRank(const AbstractCore& core, int p) {
  const auto& c = *core.c;
  auto xs = core.generators(p);
  if (xs.empty()) return 0;
  const int n = c.n();
  std::vector<std::vector<int>> seqs{{}};
  for (int k = 0; k < p + 2; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& s : seqs)
      for (int j = 0; j < n; ++j) {
        auto t = s;
        t.push_back(j);
        next.push_back(t);
      }
    seqs = std::move(next);
  }
  MatG m = zeros<Gq>(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(seqs.size()));
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < seqs.size(); ++b) {
      Element y = xs[a];
      for (int j : seqs[b]) y = c.bracket(y, c.zb(j));
      if (!y.isZero()) m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = y.terms().front().c;
    }
  return static_cast<int>(rank<Gq>(m));
}

CoreReport validate(const AbstractCore& core) {
  CoreReport rep;
  const auto& c = *core.c;
  if (!c.space().valid()) rep.violations.push_back("negative part: symplectic data invalid");
  for (const auto& [p, s] : core.m10) {
    if (p < 0) {
      rep.violations.push_back("component in negative degree " + std::to_string(p));
      continue;
    }
    auto xs = elementsOf(c, p, s);
    for (const auto& x : xs)
      if (!inExtremal10(c, x))
        rep.violations.push_back("m^{" + std::to_string(p) + "(10)} not inside M^{" + std::to_string(p) + "(10)}: " +
                                 c.toString(x));
    if (p >= 1) {
      SubspaceG below = core.m10.count(p - 1) ? core.m10.at(p - 1) : SubspaceG(c.dim(p - 1));
      for (const auto& x : xs)
        for (int j = 0; j < c.n(); ++j) {
          Element y = c.bracket(x, c.zb(j));
          if (!y.isZero() && !below.contains(c.coords(y)))
            rep.violations.push_back("[m^{" + std::to_string(p) + "(10)}, c^{-1(01)}] not in m^{" +
                                     std::to_string(p - 1) + "(10)}: [" + c.toString(x) + ", " +
                                     c.toString(c.zb(j)) + "] = " + c.toString(y));
        }
    }
    if (leviRank(core, p) != static_cast<int>(s.dim()))
      rep.violations.push_back("L^{" + std::to_string(p + 2) + "} not injective");
  }
  rep.valid = rep.violations.empty();
  rep.height = core.height();
  return rep;
}

Automorphism Automorphism::identity(int n) { return {crcore::identity<Gq>(2 * n), Gq(1)}; }

Automorphism Automorphism::phase(int n, const Gq& u) {
  Automorphism g{zeros<Gq>(2 * n, 2 * n), Gq(1)};
  for (int j = 0; j < n; ++j) {
    g.A(j, j) = u;
    g.A(n + j, n + j) = u.conj();
  }
  return g;
}

std::vector<std::string> autViolations(const ContactAlgebra& c, const Automorphism& g) {
  std::vector<std::string> out;
  const int n = c.n(), m = 2 * n;
  if (g.A.rows() != m || g.A.cols() != m) return {"A has wrong size"};
  if (!g.lambda.isReal() || g.lambda.isZero()) out.push_back("lambda must be real and nonzero");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!g.A(n + a, b).isZero() || !g.A(a, n + b).isZero()) out.push_back("A does not commute with ad J");
      if (g.A(n + a, n + b) != g.A(a, b).conj()) out.push_back("A is not real");
    }
  MatG Bc = zeros<Gq>(m, m);
  for (int j = 0; j < n; ++j) {
    Bc(j, n + j) = Gq(0, frac(-c.space().eps(j), 2));
    Bc(n + j, j) = Gq(0, frac(c.space().eps(j), 2));
  }
  MatG lhs = g.A.transpose() * Bc * g.A;
  MatG rhs = Bc * g.lambda;
  if (lhs != rhs) out.push_back("A^T B A != lambda B");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Element applyAutomorphism(const ContactAlgebra& c, const Automorphism& g, const Element& X) {
  const int p = X.degree(), nv = c.nvars();
  std::vector<std::map<Monomial, Gq>> images(static_cast<std::size_t>(nv));
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b)
      if (!g.A(b, a).isZero()) images[static_cast<std::size_t>(a)][c.var(b)] = g.A(b, a);
  auto mul = [](const std::map<Monomial, Gq>& x, const std::map<Monomial, Gq>& y) {
    std::map<Monomial, Gq> out;
    for (const auto& [m1, c1] : x)
      for (const auto& [m2, c2] : y) out[m1 * m2] += c1 * c2;
    return out;
  };
  const Gq linv = g.lambda.inverse();
  std::vector<Term> ts;
  for (const auto& t : X.terms()) {
    std::map<Monomial, Gq> poly{{Monomial{}, t.c}};
    for (int a = 0; a < nv; ++a)
      for (int k = 0; k < t.mono.e[a]; ++k) poly = mul(poly, images[static_cast<std::size_t>(a)]);
    Gq scale(1);
    const int e = t.layer - p;
    for (int k = 0; k < std::abs(e); ++k) scale *= (e > 0 ? g.lambda : linv);
    for (const auto& [m, w] : poly)
      if (!w.isZero()) ts.push_back({t.layer, m, w * scale});
  }
  return Element(p, std::move(ts));
}

AbstractCore applyAutomorphism(const Automorphism& g, const AbstractCore& core) {
  auto v = autViolations(*core.c, g);
  if (!v.empty()) throw std::invalid_argument("not an element of Aut(c, J): " + v.front());
  AbstractCore out{core.c, {}};
  for (const auto& [p, s] : core.m10)
    out.m10[p] = mapSpan(*core.c, p, s, p, [&](const Element& x) { return applyAutomorphism(*core.c, g, x); });
  return out;
}

}  // namespace crcore
