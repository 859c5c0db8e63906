#include "crcore/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace crcore {

int MatrixPresentation::indexOf(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  return -1;
}

std::vector<int> ModelCandidate::gradedDims() const {
  std::vector<int> d;
  for (int p = -2; p <= top(); ++p) d.push_back(ghat.dim(p));
  return d;
}

namespace {

VecG flatten(const MatG& m) {
  VecG v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Element E_(const ContactAlgebra& c, const std::string& s, int deg) { return parseElement(c, s, deg, 1); }

}  // namespace

EmbedResult prolongationEmbed(const MatrixPresentation& pres) {
  EmbedResult out;
  const std::size_t N = pres.labels.size();
  if (pres.mats.size() != N || pres.degrees.size() != N) throw std::invalid_argument("presentation: size mismatch");
  auto c = std::make_shared<ContactAlgebra>(pres.n, pres.r);
  out.model.name = pres.name;
  out.model.kind = "matrix";
  out.model.c = c;

  const Eigen::Index sz = pres.mats[0].rows() * pres.mats[0].cols();
  MatG F(sz, static_cast<Eigen::Index>(N));
  for (std::size_t k = 0; k < N; ++k) F.col(static_cast<Eigen::Index>(k)) = flatten(pres.mats[k]);
  if (rank<Gq>(F) != static_cast<Eigen::Index>(N)) {
    out.errors.push_back("basis matrices are linearly dependent");
    return out;
  }
  // structure constants [X_a, X_b] = sum_k s(a,b)_k X_k
  std::vector<std::vector<VecG>> sc(N, std::vector<VecG>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      MatG comm = pres.mats[a] * pres.mats[b] - pres.mats[b] * pres.mats[a];
      auto sol = solveLinear<Gq>(F, flatten(comm));
      if (!sol.consistent) {
        out.errors.push_back("[" + pres.labels[a] + ", " + pres.labels[b] + "] leaves the span");
        return out;
      }
      for (std::size_t k = 0; k < N; ++k)
        if (!sol.particular(static_cast<Eigen::Index>(k)).isZero() && pres.degrees[k] != pres.degrees[a] + pres.degrees[b])
          out.errors.push_back("[" + pres.labels[a] + ", " + pres.labels[b] + "] breaks the grading");
      sc[a][b] = sol.particular;
    }
  if (!out.errors.empty()) return out;

  std::vector<std::optional<Element>> img(N);
  for (const auto& [label, text] : pres.identification) {
    const int k = pres.indexOf(label);
    if (k < 0) throw std::invalid_argument("identification: unknown label " + label);
    if (pres.degrees[static_cast<std::size_t>(k)] >= 0)
      throw std::invalid_argument("identification: " + label + " has nonnegative degree");
    img[static_cast<std::size_t>(k)] = parseElement(*c, text, pres.degrees[static_cast<std::size_t>(k)], 1);
  }
  std::vector<std::size_t> minus1;
  for (std::size_t k = 0; k < N; ++k) {
    if (pres.degrees[k] < 0 && !img[k]) {
      out.errors.push_back("negative element " + pres.labels[k] + " is not identified");
      return out;
    }
    if (pres.degrees[k] == -1) minus1.push_back(k);
  }
  auto combo = [&](const VecG& coeffs, int deg) {
    Element s(deg);
    for (std::size_t k = 0; k < N; ++k)
      if (!coeffs(static_cast<Eigen::Index>(k)).isZero()) s += coeffs(static_cast<Eigen::Index>(k)) * *img[k];
    return s;
  };

  const int top = *std::max_element(pres.degrees.begin(), pres.degrees.end());
  for (int d = 0; d <= top; ++d) {
    const int D = c->dim(d);
    std::vector<Element> basis;
    for (int k = 0; k < D; ++k) basis.push_back(c->basisElement(d, k));
    // rows: coordinates of [basis_k, phi(e)] for each e of degree -1
    const int Dm = c->dim(d - 1);
    MatG A(static_cast<Eigen::Index>(Dm * minus1.size()), D);
    for (std::size_t e = 0; e < minus1.size(); ++e)
      for (int k = 0; k < D; ++k)
        A.block(static_cast<Eigen::Index>(e * Dm), k, Dm, 1) = c->coords(c->bracket(basis[k], *img[minus1[e]]));
    if (rank<Gq>(A) != D) {
      out.errors.push_back("contact algebra is not transitive in degree " + std::to_string(d));
      return out;
    }
    for (std::size_t a = 0; a < N; ++a) {
      if (pres.degrees[a] != d) continue;
      VecG rhs(A.rows());
      for (std::size_t e = 0; e < minus1.size(); ++e)
        rhs.segment(static_cast<Eigen::Index>(e * Dm), Dm) = c->coords(combo(sc[a][minus1[e]], d - 1));
      auto sol = solveLinear<Gq>(A, rhs);
      if (!sol.consistent) {
        out.errors.push_back("action of " + pres.labels[a] + " on degree -1 is not realizable in c^" + std::to_string(d));
        return out;
      }
      img[a] = c->fromCoords(d, sol.particular);
    }
  }
  for (auto& x : img) out.images.push_back(*x);

  out.bracketTableMatches = true;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      ++out.pairsChecked;
      const int deg = pres.degrees[a] + pres.degrees[b];
      Element lhs = c->bracket(out.images[a], out.images[b]);
      Element rhs = deg >= -2 ? combo(sc[a][b], deg) : Element(deg);
      if (!(lhs == rhs) && !(lhs.isZero() && rhs.isZero())) {
        out.bracketTableMatches = false;
        out.errors.push_back("bracket table differs at [" + pres.labels[a] + ", " + pres.labels[b] + "]");
      }
    }
  const int iE = pres.indexOf(pres.Elabel), iJ = pres.indexOf(pres.Jlabel);
  if (iE < 0 || !(out.images[static_cast<std::size_t>(iE)] == c->E()))
    out.errors.push_back("E does not map to the grading element");
  if (iJ < 0 || !(out.images[static_cast<std::size_t>(iJ)] == c->Jelem()))
    out.errors.push_back("J does not map to the complex structure");

  out.model.ghat = gradedSpan(*c, out.images);
  for (std::size_t k = 0; k < N; ++k) out.model.generators.emplace_back(pres.labels[k], out.images[k]);
  return out;
}

CRAlgebraPair modelToCRAlgebra(const ModelCandidate& m) {
  CRAlgebraPair pair;
  pair.c = m.c;
  pair.maxDegree = m.top();
  pair.truncated = false;
  pair.ghat = m.ghat;
  pair.q = intersect(*m.c, m.ghat, universalU(*m.c, -2, m.top()));
  return pair;
}

std::vector<GradedSubspace> predictedFreeman(const CRAlgebraPair& pair, int terms) {
  const auto& c = *pair.c;
  GradedSubspace qbar = conjugate(c, pair.q);
  std::vector<GradedSubspace> out;
  for (int q = -1; q < terms - 1; ++q) {
    GradedSubspace t;
    for (int p = -2; p <= pair.maxDegree; ++p) {
      if (p >= q)
        t.parts[p] = pair.q.at(c, p);
      else if (p >= 0)
        t.parts[p] = pair.q.at(c, p).intersect(qbar.at(c, p));
      else
        t.parts[p] = SubspaceG(c.dim(p));
    }
    out.push_back(t);
  }
  return out;
}

ModelReport verifyModel(const ModelCandidate& m, const AbstractCore& core) {
  const auto& c = *m.c;
  ModelReport r;
  const int top = std::max(m.top(), 0);
  auto v = closureViolations(c, m.ghat, -2, top, true);
  r.closed = v.empty();
  for (std::size_t k = 0; k < std::min<std::size_t>(v.size(), 3); ++k) r.failures.push_back("closure: " + v[k]);
  r.conjStable = conjugate(c, m.ghat) == m.ghat;
  if (!r.conjStable) r.failures.push_back("not conj-stable");
  r.axiom1 = m.ghat.at(c, -2).dim() == c.dim(-2) && m.ghat.at(c, -1).dim() == c.dim(-1);
  for (const auto& [p, s] : m.ghat.parts)
    if (p < -2 && s.dim() > 0) r.axiom1 = false;
  if (!r.axiom1) r.failures.push_back("(i): negative part is not c^-2 + c^-1");
  r.axiom2 = m.ghat.contains(c, c.E());
  if (!r.axiom2) r.failures.push_back("(ii): E not in g^0");
  r.propertyJ = m.ghat.contains(c, c.Jelem());

  GradedSubspace u = universalU(c, -2, top);
  GradedSubspace ub = conjugate(c, u);
  r.axiom3 = true;
  r.axiom4 = true;
  for (int p = 0; p <= top; ++p) {
    SubspaceG g = m.ghat.at(c, p);
    SubspaceG gu = g.intersect(u.at(c, p));
    if (!(gu.sum(g.intersect(ub.at(c, p))) == g)) {
      r.axiom3 = false;
      r.failures.push_back("(iii) fails in degree " + std::to_string(p));
    }
    SubspaceG proj = extremal10Span(c, p, gu);
    auto it = core.m10.find(p);
    SubspaceG want = it == core.m10.end() ? SubspaceG(c.dim(p)) : it->second;
    if (!(proj == want)) {
      r.axiom4 = false;
      r.failures.push_back("(iv) fails in degree " + std::to_string(p) + ": projection has dim " +
                           std::to_string(proj.dim()) + ", core has dim " + std::to_string(want.dim()));
    }
  }
  for (const auto& [p, s] : core.m10)
    if (p > top && s.dim() > 0) {
      r.axiom4 = false;
      r.failures.push_back("(iv) fails in degree " + std::to_string(p) + ": model has no component");
    }
  return r;
}

SubspaceG lineStabilizer(const ContactAlgebra& c, const SubspaceG& V, const Element& X) {
  SubspaceG line = spanIn(c, X.degree(), {X});
  SubspaceG S = restrictByBrackets(c, 0, V, {{X, line}});
  return S.intersect(conjugate(c, 0, S));
}

namespace {

std::vector<MatG> parseMats(const std::vector<std::vector<std::string>>& rows) {
  std::vector<MatG> out;
  for (const auto& r : rows) {
    const auto k = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(r.size()))));
    if (k * k != static_cast<Eigen::Index>(r.size())) throw std::invalid_argument("matrix entries are not square");
    MatG m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) m(i, j) = parseGq(r[static_cast<std::size_t>(i * k + j)]);
    out.push_back(m);
  }
  return out;
}

const std::vector<std::string> kLabels = {"E2",   "E1_10", "E2_10", "E",     "J",     "H",     "e0_10", "e1_10",
                                          "e2_10", "em2", "E1_01", "E2_01", "e0_01", "e1_01", "e2_01"};
const std::vector<int> kDegrees = {2, 1, 1, 0, 0, 0, 0, -1, -1, -2, 1, 1, 0, -1, -1};

using Rows = std::vector<std::vector<std::string>>;

// 4x4 row-major entries in the label order above.
const Rows kSl4 = {
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-4", "0", "0", "0", "0"},
    {"0", "0", "0", "i", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "i", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-1"},
    {"0", "-1", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1/2", "0", "0", "0", "0", "1/2", "0", "0", "0", "0", "-1/2", "0", "0", "0", "0", "-1/2"},
    {"1", "-i", "0", "0", "-i", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "i", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "i", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-4", "0"},
    {"0", "0", "0", "-i", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "-i", "1", "0", "0", "0", "0", "0", "0"},
    {"1", "i", "0", "0", "i", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-i", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "-i", "0", "0"},
};
const Rows kSu13 = {
    {"2*i", "-2*i", "0", "0", "2*i", "-2*i", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "i", "0", "0", "0", "0", "-i"},
    {"1/2*i", "0", "0", "0", "0", "1/2*i", "0", "0", "0", "0", "-1/2*i", "0", "0", "0", "0", "-1/2*i"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "1", "1", "0", "0", "0", "0", "0", "0"},
    {"2*i", "2*i", "0", "0", "-2*i", "-2*i", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "1", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
};
const Rows kSu22 = {
    {"2*i", "0", "-2*i", "0", "0", "0", "0", "0", "2*i", "0", "-2*i", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "i", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-i"},
    {"1/2*i", "0", "0", "0", "0", "-1/2*i", "0", "0", "0", "0", "1/2*i", "0", "0", "0", "0", "-1/2*i"},
    {"0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"2*i", "0", "2*i", "0", "0", "0", "0", "0", "-2*i", "0", "-2*i", "0", "0", "0", "0", "0"},
    {"0", "-1", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "-1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "1", "0"},
    {"0", "-1", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
};

MatrixPresentation simplePresentation(const std::string& name) {
  MatrixPresentation p;
  p.name = name;
  p.n = 2;
  p.labels = kLabels;
  p.degrees = kDegrees;
  if (name == "sl4") {
    p.r = 1;
    p.mats = parseMats(kSl4);
    // complex-Witt basis, rescaled by a conformal symplectic map to stay rational
    p.identification = {{"e1_10", "z1+z2"}, {"e2_10", "z1-z2"}, {"e1_01", "zb1+zb2"}, {"e2_01", "zb1-zb2"}, {"em2", "2*T"}};
  } else {
    p.r = name == "su13" ? 1 : 2;
    p.mats = parseMats(name == "su13" ? kSu13 : kSu22);
    p.identification = {{"e1_10", "z1"}, {"e2_10", "z2"}, {"e1_01", "zb1"}, {"e2_01", "zb2"}, {"em2", "T"}};
  }
  return p;
}

std::vector<Element> negativeBasis(const ContactAlgebra& c) {
  std::vector<Element> out = {c.T()};
  for (int j = 0; j < c.n(); ++j) {
    out.push_back(c.z(j));
    out.push_back(c.zb(j));
  }
  return out;
}

ModelCandidate contactModel(const std::string& name, ContactPtr c,
                            const std::vector<std::pair<std::string, Element>>& gens,
                            const std::vector<Element>& coreGens) {
  ModelCandidate m;
  m.name = name;
  m.kind = "contact";
  m.c = c;
  std::vector<Element> all = negativeBasis(*c);
  all.push_back(c->E());
  for (const auto& [label, x] : gens) {
    all.push_back(x);
    all.push_back(c->conjugate(x));
  }
  m.ghat = gradedSpan(*c, all);
  m.generators = gens;
  m.core = AbstractCore::fromGenerators(c, coreGens);
  return m;
}

// c^{-2} + c^{-1} + (n#hat + <X> + <Xbar>), n#hat the stabilizer of m^{0(10)} = <X> in C E + S^{1,1}.
ModelCandidate nonsemisimpleModel(const std::string& name, int r, const std::string& Xtext) {
  auto c = std::make_shared<ContactAlgebra>(2, r);
  Element X = E_(*c, Xtext, 0);
  std::vector<Element> V = {c->E()};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Element y(0);
      Monomial m = c->var(a) * c->var(2 + b);
      y.add(-1, m, Gq(1));
      V.push_back(y);
    }
  SubspaceG nsharp = lineStabilizer(*c, spanIn(*c, 0, V), X);
  std::vector<std::pair<std::string, Element>> gens = {{"X", X}};
  auto ns = elementsOf(*c, 0, nsharp);
  for (std::size_t k = 0; k < ns.size(); ++k) gens.emplace_back("n" + std::to_string(k + 1), ns[k]);
  ModelCandidate m = contactModel(name, c, gens, {X});
  m.maximality = "unknown";
  return m;
}

}  // namespace

GradedSubspace transitiveProlongation(const ContactAlgebra& c, const SubspaceG& g0, int D) {
  GradedSubspace g = fullRange(c, -2, -1);
  g.parts[0] = g0;
  std::vector<Element> minus1;
  for (int j = 0; j < c.n(); ++j) {
    minus1.push_back(c.z(j));
    minus1.push_back(c.zb(j));
  }
  for (int p = 1; p <= D; ++p) {
    std::vector<std::pair<Element, SubspaceG>> cons;
    for (const auto& y : minus1) cons.emplace_back(y, g.at(c, p - 1));
    g.parts[p] = restrictByBrackets(c, p, SubspaceG::full(c.dim(p)), cons);
    if (g.parts[p].dim() == 0) break;
  }
  return g;
}

ModelCandidate levinondegenerateModel(int n, int r) {
  auto c = std::make_shared<ContactAlgebra>(n, r);
  std::vector<Element> g0 = {c->E()};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Element y(0);
      y.add(-1, c->var(a) * c->var(n + b), Gq(1));
      g0.push_back(y);
    }
  ModelCandidate m;
  m.name = "levi-nondeg";
  m.kind = "contact";
  m.c = c;
  m.ghat = transitiveProlongation(*c, spanIn(*c, 0, g0), 4);
  for (int p = 0; p <= m.ghat.maxDegree(); ++p)
    for (auto& x : elementsOf(*c, p, m.ghat.at(*c, p))) m.generators.emplace_back("g" + std::to_string(p), x);
  m.core = AbstractCore::heisenberg(c);
  m.maximality = "maximal (bounded evidence)";
  return m;
}

std::vector<RegistryEntry> builtinModels() {
  std::vector<RegistryEntry> out;
  for (const std::string name : {"sl4", "su13", "su22"}) {
    RegistryEntry e;
    e.name = name;
    e.family = "simple";
    e.matrix = simplePresentation(name);
    auto emb = prolongationEmbed(*e.matrix);
    e.model = emb.model;
    if (emb.ok()) {
      auto pair = modelToCRAlgebra(e.model);
      auto ex = extractCore(pair, freemanSequence(pair));
      if (ex.ok) e.model.core = ex.core;
    }
    if (!e.model.core.c) e.model.core = AbstractCore::heisenberg(e.model.c);
    e.model.maximality = "maximal (bounded evidence)";
    e.expectedDims = {1, 4, 5, 4, 1};
    e.expectedK = 2;
    out.push_back(std::move(e));
  }
  struct NS {
    const char* name;
    int r;
    const char* X;
  };
  for (const NS& ns : {NS{"nonss-20-t1", 2, "z1^2"}, NS{"nonss-11-m+1", 1, "z1^2"}, NS{"nonss-11-m-1", 1, "z2^2"},
                       NS{"nonss-11-mnull", 1, "z1^2-z2^2-2*i*z1*z2"}}) {
    RegistryEntry e;
    e.name = ns.name;
    e.family = "nonsemisimple";
    e.model = nonsemisimpleModel(ns.name, ns.r, ns.X);
    e.expectedK = 2;
    out.push_back(std::move(e));
  }
  out[3].expectedDims = {1, 4, 5};
  out[4].expectedDims = {1, 4, 5};
  out[5].expectedDims = {1, 4, 5};
  out[6].expectedDims = {1, 4, 6};
  {
    auto c = std::make_shared<ContactAlgebra>(1, 1);
    RegistryEntry e;
    e.name = "three-nondeg";
    e.family = "3-nondegenerate";
    Element M = E_(*c, "z^2+z*zb", 0), N = E_(*c, "z^3+2*z^2*zb+z*zb^2-3*i*z-3*i*zb", 1);
    e.model = contactModel(e.name, c, {{"M", M}, {"N", N}}, {E_(*c, "z^2", 0), E_(*c, "z^3", 1)});
    e.model.maximality = "maximal (bounded evidence)";
    e.expectedDims = {1, 2, 3, 2};
    e.expectedK = 3;
    e.expectPropertyJ = false;
    out.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.name = "levi-nondeg";
    e.family = "regression";
    e.model = levinondegenerateModel(3, 3);
    e.expectedDims = {1, 6, 10, 6, 1};
    e.expectedK = 1;
    out.push_back(std::move(e));
  }
  {
    auto c = std::make_shared<ContactAlgebra>(1, 1);
    RegistryEntry e;
    e.name = "so32";
    e.family = "regression";
    std::vector<std::pair<std::string, Element>> gens = {
        {"z^2", E_(*c, "z^2", 0)}, {"z*zb", E_(*c, "z*zb", 0)}, {"mu1[z]", c->mu(1, c->z(0))}};
    Element top(2);
    top.add(1, Monomial{}, Gq(1));
    gens.emplace_back("mu2[1]", top);
    e.model = contactModel(e.name, c, gens, {E_(*c, "z^2", 0)});
    e.model.maximality = "maximal (bounded evidence)";
    e.expectedDims = {1, 2, 4, 2, 1};
    e.expectedK = 2;
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<RegistryEntry> builtinModel(const std::string& name) {
  for (auto& e : builtinModels())
    if (e.name == name) return e;
  return std::nullopt;
}

ProlongationReport boundedProlongationCheck(const ModelCandidate& m, int D) {
  const auto& c = *m.c;
  ProlongationReport rep;
  rep.D = D;
  GradedSubspace u = universalU(c, 1, D);
  GradedSubspace ub = conjugate(c, u);
  std::map<int, SubspaceG> C;
  for (int p = -2; p <= 0; ++p) C[p] = m.ghat.at(c, p);
  std::map<int, std::vector<Element>> g;
  for (int p = -2; p <= D; ++p) g[p] = elementsOf(c, p, m.ghat.at(c, p));
  for (int d = 1; d <= D; ++d) {
    SubspaceG allowed = u.at(c, d).intersect(ub.at(c, d));
    auto it = m.core.m10.find(d);
    if (it != m.core.m10.end()) allowed = allowed.sum(it->second).sum(conjugate(c, d, it->second));
    C[d] = allowed;
  }
  // greatest graded space containing ghat compatible with brackets against ghat
  for (bool changed = true; changed;) {
    changed = false;
    for (int d = 1; d <= D; ++d) {
      std::vector<std::pair<Element, SubspaceG>> cons;
      for (int q = -1; q <= D - d; ++q)
        for (const auto& y : g[q]) cons.emplace_back(y, C[d + q]);
      for (const auto& y : g[-2]) cons.emplace_back(y, C[d - 2]);
      SubspaceG next = restrictByBrackets(c, d, C[d], cons);
      if (next.dim() != C[d].dim()) {
        C[d] = next;
        changed = true;
      }
    }
  }
  bool larger = false;
  for (const auto& [d, sub] : C) rep.candidate.parts[d] = sub;
  for (int d = 1; d <= D; ++d) {
    rep.modelDims.push_back(m.ghat.dim(d));
    rep.candidateDims.push_back(static_cast<int>(C[d].dim()));
    if (C[d].dim() > m.ghat.at(c, d).dim()) larger = true;
  }
  std::ostringstream s;
  if (!larger) {
    s << "no strict extension in degrees <= " << D;
  } else {
    ModelCandidate ext = m;
    for (int d = 1; d <= D; ++d) ext.ghat.parts[d] = C[d];
    auto r = verifyModel(ext, m.core);
    bool closed = closureViolations(c, ext.ghat, -2, D, false).empty();
    if (closed && r.axiom3 && r.axiom4) {
      rep.extensionFound = true;
      s << "strict extension found in degrees <= " << D;
    } else {
      s << "candidate space exceeds the model in degrees <= " << D << " but is not itself an extension";
    }
  }
  if (m.maximality == "unknown") s << "; maximality unknown beyond degree " << D;
  rep.statement = s.str();
  return rep;
}

}  // namespace crcore
