// Uniqueness search for models with the 3-nondegenerate core <z^2> + <z^3> (n = 1).
#include "crcore/models.hpp"

#include <array>
#include <sstream>

namespace crcore {

namespace {

// Polynomials in the symbols alpha, conj(alpha), beta, conj(beta).
using Exps = std::array<int, 4>;
const char* const kSym[4] = {"alpha", "alphab", "beta", "betab"};

struct Poly {
  std::map<Exps, Gq> t;

  static Poly constant(const Gq& c) {
    Poly p;
    if (!c.isZero()) p.t[Exps{}] = c;
    return p;
  }
  static Poly var(int k, const Gq& c = Gq(1)) {
    Poly p;
    Exps e{};
    e[static_cast<std::size_t>(k)] = 1;
    p.t[e] = c;
    return p;
  }
  bool isZero() const { return t.empty(); }
  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.t) {
      Gq& x = t[e];
      x += c;
      if (x.isZero()) t.erase(e);
    }
    return *this;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.t)
      for (const auto& [eb, cb] : b.t) {
        Exps e;
        for (std::size_t k = 0; k < 4; ++k) e[k] = ea[k] + eb[k];
        r += Poly{{{e, ca * cb}}};
      }
    return r;
  }
  friend Poly operator-(const Poly& a) { return Poly::constant(Gq(-1)) * a; }
  Gq eval(const std::array<Gq, 4>& v) const {
    Gq s(0);
    for (const auto& [e, c] : t) {
      Gq m = c;
      for (std::size_t k = 0; k < 4; ++k)
        for (int j = 0; j < e[k]; ++j) m *= v[k];
      s += m;
    }
    return s;
  }
  std::string str() const {
    if (t.empty()) return "0";
    std::string out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < 4; ++k)
        for (int j = 0; j < e[k]; ++j) mono += (mono.empty() ? "" : "*") + std::string(kSym[k]);
      std::string cs = toString(c);
      const bool compound = c.re != 0 && c.im != 0;
      std::string term;
      if (mono.empty())
        term = cs;
      else if (c == Gq(1))
        term = mono;
      else if (c == Gq(-1))
        term = "-" + mono;
      else
        term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }
};

// sum_e poly_e * element_e, all of one degree.
struct SymEl {
  int deg = 0;
  std::map<Exps, Element> parts;

  static SymEl of(const Element& x) {
    SymEl s;
    s.deg = x.degree();
    if (!x.isZero()) s.parts[Exps{}] = x;
    return s;
  }
  SymEl& add(const Poly& p, const Element& x) {
    for (const auto& [e, c] : p.t) {
      auto it = parts.find(e);
      if (it == parts.end())
        parts.emplace(e, c * x);
      else
        it->second += c * x;
    }
    return *this;
  }
  SymEl& add(const Poly& p, const SymEl& x) {
    for (const auto& [e, el] : x.parts) {
      Poly shifted;
      for (const auto& [f, c] : p.t) {
        Exps g;
        for (std::size_t k = 0; k < 4; ++k) g[k] = e[k] + f[k];
        shifted.t[g] = c;
      }
      add(shifted, el);
    }
    return *this;
  }
};

SymEl bracket(const ContactAlgebra& c, const SymEl& a, const SymEl& b) {
  SymEl r;
  r.deg = a.deg + b.deg;
  for (const auto& [ea, xa] : a.parts)
    for (const auto& [eb, xb] : b.parts) {
      Exps e;
      for (std::size_t k = 0; k < 4; ++k) e[k] = ea[k] + eb[k];
      r.add(Poly{{{e, Gq(1)}}}, c.bracket(xa, xb));
    }
  return r;
}

std::vector<Poly> coordsOf(const ContactAlgebra& c, const SymEl& s) {
  std::vector<Poly> out(static_cast<std::size_t>(c.dim(s.deg)));
  for (const auto& [e, x] : s.parts) {
    VecG v = c.coords(x);
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (!v(k).isZero()) out[static_cast<std::size_t>(k)] += Poly{{{e, v(k)}}};
  }
  return out;
}

Poly coeffAt(const ContactAlgebra& c, const SymEl& s, const Element& basisMono) {
  const auto& [layer, m] = std::pair{basisMono.terms().front().layer, basisMono.terms().front().mono};
  auto idx = c.basis(s.deg)->index.at({layer, m});
  return coordsOf(c, s)[static_cast<std::size_t>(idx)];
}

Element el(const ContactAlgebra& c, const std::string& t, int deg) { return parseElement(c, t, deg, 1); }

// Row space of polynomial equations, columns indexed by a shared monomial list.
SubspaceG rowSpace(const std::vector<Poly>& eqs, const std::vector<Exps>& cols) {
  std::vector<VecG> rows;
  for (const auto& p : eqs) {
    VecG v = VecG::Constant(static_cast<Eigen::Index>(cols.size()), Gq(0));
    for (const auto& [e, c] : p.t) {
      auto it = std::find(cols.begin(), cols.end(), e);
      v(it - cols.begin()) = c;
    }
    rows.push_back(v);
  }
  return SubspaceG::fromVectors(static_cast<Eigen::Index>(cols.size()), rows);
}

}  // namespace

Search3Result search3NondegModels(int maxDegree) {
  if (maxDegree < 2) throw std::invalid_argument("search_3nondeg: budget exceeded (needs degrees up to 2)");
  Search3Result res;
  auto cp = std::make_shared<ContactAlgebra>(1, 1);
  const auto& c = *cp;
  const Poly A = Poly::var(0), Ab = Poly::var(1), B = Poly::var(2), Bb = Poly::var(3);
  const Element z2 = el(c, "z^2", 0), zzb = el(c, "z*zb", 0), zb2 = el(c, "zb^2", 0);

  // Step 1. [b, bbar] in b_alpha  <=>  P(alpha) = 0
  {
    SymEl b = SymEl::of(z2), bb = SymEl::of(zb2);
    b.add(A, zzb);
    bb.add(Ab, zzb);
    SymEl br = bracket(c, b, bb);
    Poly P = coeffAt(c, br, zzb);
    P += -(A * coeffAt(c, br, z2));
    P += -(Ab * coeffAt(c, br, zb2));
    res.borelCondition = P.str() + " = 0";
    Exps aab{1, 1, 0, 0};
    res.borelConditionIsUnitCircle = P.t.size() == 2 && P.t.count(aab) && P.t.count(Exps{}) &&
                                     P.t.at(aab) == -P.t.at(Exps{});
    res.log.push_back("step 1: closure of b_alpha reduces to " + res.borelCondition);

    std::vector<Gq> grid;
    for (int a = -2; a <= 2; ++a)
      for (int bq = -2; bq <= 2; ++bq) grid.emplace_back(frac(a, 2), frac(bq, 2));
    for (auto [p, q, r] : std::vector<std::array<long, 3>>{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}})
      for (int sx : {1, -1})
        for (int sy : {1, -1}) grid.emplace_back(frac(sx * p, r), frac(sy * q, r));
    res.borelGridOk = true;
    for (const Gq& al : grid) {
      Element x = z2 + al * zzb, xb = zb2 + al.conj() * zzb;
      SubspaceG bsp = spanIn(c, 0, {c.E(), x, xb});
      const bool closed = bsp.contains(c.coords(c.bracket(x, xb)));
      const bool unit = al.norm2() == 1;
      const bool viaP = P.eval({al, al.conj(), Gq(0), Gq(0)}).isZero();
      if (closed != unit || closed != viaP) res.borelGridOk = false;
      ++res.gridPoints;
    }
    // T_theta with u = e^{-i theta/2} maps b_0 onto b_alpha, alpha = conj(u)^2.
    res.thetaReduction = true;
    for (auto [p, q, r] : std::vector<std::array<long, 3>>{{3, 4, 5}, {5, 12, 13}, {-8, 15, 17}}) {
      Gq u(frac(p, r), frac(q, r));
      auto g = Automorphism::phase(1, u);
      if (!autViolations(c, g).empty()) res.thetaReduction = false;
      Gq al = u.conj() * u.conj();
      SubspaceG b0img = spanIn(c, 0, {applyAutomorphism(c, g, c.E()), applyAutomorphism(c, g, z2 + zzb),
                                      applyAutomorphism(c, g, zb2 + zzb)});
      if (!(b0img == spanIn(c, 0, {c.E(), z2 + al * zzb, zb2 + al.conj() * zzb}))) res.thetaReduction = false;
    }
  }

  // Step 2. g~1 = { X in c^1 : [X, c^-1] in b }, b = b_0.
  const Element M = el(c, "z^2+z*zb", 0), Mb = c.conjugate(M);
  const Element N = el(c, "z^3+2*z^2*zb+z*zb^2-3*i*z-3*i*zb", 1), Nb = c.conjugate(N);
  const Element V = el(c, "z^2*zb+z*zb^2+1/2*i*z-1/2*i*zb", 1), W = el(c, "z+zb", 1);
  SubspaceG b0 = spanIn(c, 0, {c.E(), M, Mb});
  SubspaceG gt1 = restrictByBrackets(c, 1, SubspaceG::full(c.dim(1)), {{c.z(0), b0}, {c.zb(0), b0}});
  res.gtilde1Dim = static_cast<int>(gt1.dim());
  res.gtilde1Basis = gt1 == spanIn(c, 1, {N, Nb, V, W});
  res.log.push_back("step 2: dim g~1 = " + std::to_string(res.gtilde1Dim));

  // g^1 = <N_ab, Nbar_ab>, Nbar_ab = Nbar + alpha V + beta W, N_ab its conjugate.
  SymEl Nab = SymEl::of(N), Nbab = SymEl::of(Nb);
  Nab.add(Ab, V).add(Bb, W);
  Nbab.add(A, V).add(B, W);
  const Element z4 = el(c, "z^4", 2);
  Poly top = coeffAt(c, bracket(c, Nab, Nbab), z4);  // pi_{M^{2(10)}} has a single coordinate for n = 1
  res.betaConstraint = top.str() + " = 0";
  {
    // linear in alpha, beta: solve for beta / alpha
    Exps ea{1, 0, 0, 0}, eb{0, 0, 1, 0};
    bool linear = true;
    for (const auto& [e, cf] : top.t)
      if (e != ea && e != eb) linear = false;
    if (linear && top.t.count(eb) && top.t.count(ea)) {
      res.betaOverAlpha = -top.t.at(ea) * top.t.at(eb).inverse();
      res.betaConstraintMatches = res.betaOverAlpha == Gq(Rational(0), frac(5, 2));
    }
  }
  res.log.push_back("step 2: height-1 constraint " + res.betaConstraint);

  // Substitute beta = r alpha and impose [2M, Nbar_ab] in <N_ab, Nbar_ab>.
  const Gq r = res.betaOverAlpha;
  SymEl N1 = SymEl::of(N), Nb1 = SymEl::of(Nb);
  N1.add(Ab, V).add(Poly::var(1, r.conj()), W);
  Nb1.add(A, V).add(Poly::var(0, r), W);
  SymEl Y = bracket(c, SymEl::of(Gq(2) * M), Nb1);
  const Element z3 = el(c, "z^3", 1), zb3 = el(c, "zb^3", 1);
  Poly x = coeffAt(c, Y, z3), y = coeffAt(c, Y, zb3);
  SymEl R = Y;
  R.add(-x, N1);
  R.add(-y, Nb1);
  std::vector<Poly> eqs;
  for (auto& p : coordsOf(c, R))
    if (!p.isZero()) eqs.push_back(p);
  for (const auto& p : eqs) res.nonlinearSystem.push_back(p.str() + " = 0");

  std::vector<Poly> stated;
  {
    Poly e1 = Poly::var(0, Gq(2));
    e1 += Ab;
    e1 += A * Ab;
    Poly e2 = Poly::var(0, Gq(2));
    e2 += Poly::var(1, Gq(6));
    e2 += Poly::constant(Gq(6)) * A * Ab;
    Poly e3 = Poly::var(0, Gq(2));
    e3 += Poly::var(1, Gq(-4));
    e3 += Poly::constant(Gq(-4)) * A * Ab;
    stated = {e1, e2, e3};
  }
  std::vector<Exps> cols;
  for (const auto* list : {&eqs, &stated})
    for (const auto& p : *list)
      for (const auto& [e, cf] : p.t)
        if (std::find(cols.begin(), cols.end(), e) == cols.end()) cols.push_back(e);
  SubspaceG ours = rowSpace(eqs, cols);
  res.systemMatchesStatement = !eqs.empty() && ours == rowSpace(stated, cols);

  // Exact elimination: a reduced row reading "alpha = 0" forces alpha = conj(alpha) = 0.
  {
    const Exps ea{1, 0, 0, 0};
    const auto ia = std::find(cols.begin(), cols.end(), ea) - cols.begin();
    bool forced = false;
    for (Eigen::Index i = 0; i < ours.dim(); ++i) {
      VecG v = ours.vector(i);
      bool only = !v(ia).isZero();
      for (Eigen::Index k = 0; k < v.size(); ++k)
        if (k != ia && !v(k).isZero()) only = false;
      if (only) forced = true;
    }
    bool zeroSolves = true, oneSolves = true;
    for (const auto& p : eqs) {
      if (!p.eval({Gq(0), Gq(0), Gq(0), Gq(0)}).isZero()) zeroSolves = false;
      if (!p.eval({Gq(1), Gq(1), Gq(0), Gq(0)}).isZero()) oneSolves = false;
    }
    res.uniqueSolutionZero = forced && zeroSolves;
    res.inconsistentAtOne = !oneSolves;
  }
  res.log.push_back("step 2: " + std::to_string(eqs.size()) + " equations; unique solution alpha = beta = 0: " +
                    (res.uniqueSolutionZero ? "yes" : "no"));

  // Step 3. X in c^2 without extremal part and [X, T] in b; [X, z], [X, zb] in g^1 = <N, Nbar>.
  SubspaceG g1 = spanIn(c, 1, {N, Nb});
  {
    GradedSubspace u = universalU(c, 2, 2);
    SubspaceG mid = u.at(c, 2).intersect(conjugate(c, 2, u.at(c, 2)));
    SubspaceG fam = restrictByBrackets(c, 2, mid, {{c.T(), b0}});
    res.step3FamilyDim = static_cast<int>(fam.dim());
    auto xs = elementsOf(c, 2, fam);
    std::vector<VecG> colsv;
    for (const auto& X : xs) {
      VecG a = g1.reduce(c.coords(c.bracket(X, c.z(0))));
      VecG b = g1.reduce(c.coords(c.bracket(X, c.zb(0))));
      VecG v(a.size() + b.size());
      v << a, b;
      colsv.push_back(v);
    }
    MatG m(colsv.empty() ? 0 : colsv[0].size(), static_cast<Eigen::Index>(colsv.size()));
    for (std::size_t k = 0; k < colsv.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = colsv[k];
    MatG mt = m.transpose();
    auto piv = rrefInPlace<Gq>(mt);  // pivots: independent rows of m
    if (static_cast<Eigen::Index>(piv.size()) == m.cols()) {
      MatG sq(m.cols(), m.cols());
      for (std::size_t k = 0; k < piv.size(); ++k) sq.row(static_cast<Eigen::Index>(k)) = m.row(piv[k]);
      res.step3Determinant = determinant<Gq>(sq);
    }
    // the extremal part of c^2 is excluded by the zero core component in degree 2
    SubspaceG gt2 = restrictByBrackets(c, 2, mid, {{c.z(0), g1}, {c.zb(0), g1}});
    res.gtilde2Trivial = gt2.dim() == 0;
    res.log.push_back("step 3: family of dim " + std::to_string(res.step3FamilyDim) + ", determinant " +
                      toString(res.step3Determinant) + ", dim g~2 = " + std::to_string(gt2.dim()));
  }

  ModelCandidate m;
  m.name = "three-nondeg";
  m.kind = "contact";
  m.c = cp;
  m.ghat = fullRange(c, -2, -1);
  m.ghat.parts[0] = b0;
  m.ghat.parts[1] = g1;
  m.generators = {{"M", M}, {"N", N}};
  m.core = AbstractCore::fromGenerators(cp, {el(c, "z^2", 0), el(c, "z^3", 1)});
  m.maximality = "maximal (bounded evidence)";
  res.model = m;
  if (auto b = builtinModel("three-nondeg")) res.modelMatchesBuiltin = b->model.ghat == m.ghat;

  res.ok = res.borelConditionIsUnitCircle && res.borelGridOk && res.thetaReduction && res.gtilde1Dim == 4 &&
           res.gtilde1Basis && res.betaConstraintMatches && res.uniqueSolutionZero && res.inconsistentAtOne &&
           !res.step3Determinant.isZero() && res.gtilde2Trivial && res.modelMatchesBuiltin;
  return res;
}

}  // namespace crcore
