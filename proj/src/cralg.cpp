#include "crcore/cralg.hpp"

namespace crcore {

std::string toString(ChainStatus s) {
  switch (s) {
    case ChainStatus::Certified: return "certified";
    case ChainStatus::CertifiedUpToBudget: return "certified up to budget";
    case ChainStatus::Inconclusive: return "inconclusive at budget";
    case ChainStatus::NotFinitelyNondegenerate: return "not finitely nondegenerate";
  }
  return "";
}

std::vector<std::string> pairViolations(const CRAlgebraPair& pair) {
  const auto& c = *pair.c;
  std::vector<std::string> out;
  for (auto& v : closureViolations(c, pair.ghat, -2, pair.maxDegree, !pair.truncated)) out.push_back("g: " + v);
  for (auto& v : closureViolations(c, pair.q, -2, pair.maxDegree, !pair.truncated)) out.push_back("q: " + v);
  for (int p = -2; p <= pair.maxDegree; ++p) {
    if (!pair.ghat.at(c, p).contains(pair.q.at(c, p))) out.push_back("q not inside ghat in degree " + std::to_string(p));
    if (!(conjugate(c, p, pair.ghat.at(c, p)) == pair.ghat.at(c, p)))
      out.push_back("ghat not conj-stable in degree " + std::to_string(p));
  }
  return out;
}

GradedSubspace universalU(const ContactAlgebra& c, int lo, int hi) {
  GradedSubspace u;
  for (int p = lo; p <= hi; ++p) {
    auto b = c.basis(p);
    std::vector<VecG> vs;
    for (std::size_t k = 0; k < b->items.size(); ++k) {
      const auto& [layer, m] = b->items[k];
      auto [l, mm] = m.bidegree(c.n());
      if (layer == -1 && l == 0) continue;  // eigenvalue -i(p+2)
      VecG v = VecG::Constant(c.dim(p), Gq(0));
      v(static_cast<Eigen::Index>(k)) = Gq(1);
      vs.push_back(v);
    }
    u.parts[p] = SubspaceG::fromVectors(c.dim(p), vs);
  }
  return u;
}

CRAlgebraPair buildUniversal(ContactPtr c, int maxDegree) {
  CRAlgebraPair pair;
  pair.maxDegree = maxDegree;
  pair.truncated = true;
  pair.ghat = fullRange(*c, -2, maxDegree);
  pair.q = universalU(*c, -2, maxDegree);
  pair.c = std::move(c);
  return pair;
}

std::vector<int> FreemanChain::dims() const {
  std::vector<int> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

namespace {
// Degree-d part of { Z in prev : [Z, qbar^e] in prev^{d+e} + qbar^{d+e} for all e in the window }.
SubspaceG freemanStep(const CRAlgebraPair& pair, const GradedSubspace& prev, const GradedSubspace& qbar,
                      const std::vector<std::vector<Element>>& qbarEls, int d) {
  const auto& c = *pair.c;
  SubspaceG U = prev.at(c, d);
  if (U.dim() == 0) return U;
  auto us = elementsOf(c, d, U);
  const auto N = static_cast<Eigen::Index>(us.size());
  MatG acc(0, N);  // constraint rows, kept reduced
  std::vector<VecG> res(us.size());
  for (int e = -2; e <= pair.maxDegree; ++e) {
    const int t = d + e;
    if (t < -2 || t > pair.maxDegree) continue;
    const auto& ys = qbarEls[static_cast<std::size_t>(e + 2)];
    if (ys.empty()) continue;
    SubspaceG W = prev.at(c, t).sum(qbar.at(c, t));
    for (const auto& y : ys) {
      for (std::size_t a = 0; a < us.size(); ++a) res[a] = W.reduce(c.coords(c.bracket(us[a], y)));
      const Eigen::Index len = c.dim(t);
      for (Eigen::Index k = 0; k < len; ++k) {
        bool nz = false;
        for (std::size_t a = 0; a < us.size() && !nz; ++a) nz = !isZero(res[a](k));
        if (!nz) continue;
        acc.conservativeResize(acc.rows() + 1, N);
        for (std::size_t a = 0; a < us.size(); ++a) acc(acc.rows() - 1, static_cast<Eigen::Index>(a)) = res[a](k);
      }
      if (acc.rows() > 2 * N) rrefInPlace(acc);
    }
  }
  if (acc.rows() == 0) return U;
  MatG m = acc;
  MatG ker = kernel<Gq>(m);
  MatG gens = (U.basis().transpose() * ker).transpose();
  return SubspaceG::fromRows(gens);
}
}  // namespace

FreemanChain freemanSequence(const CRAlgebraPair& pair) {
  const auto& c = *pair.c;
  FreemanChain chain;
  GradedSubspace qbar = conjugate(c, pair.q);
  chain.qcapqbar = intersect(c, pair.q, qbar);
  std::vector<std::vector<Element>> qbarEls;
  for (int e = -2; e <= pair.maxDegree; ++e) qbarEls.push_back(elementsOf(c, e, qbar.at(c, e)));
  GradedSubspace cur;
  for (int p = -2; p <= pair.maxDegree; ++p) cur.parts[p] = pair.q.at(c, p);
  chain.terms.push_back(cur);
  const int budget = pair.maxDegree + 2;
  auto isBottom = [&](const GradedSubspace& g) {
    for (int p = -2; p <= pair.maxDegree; ++p)
      if (!(g.at(c, p) == chain.qcapqbar.at(c, p))) return false;
    return true;
  };
  if (isBottom(cur)) {
    chain.k = 0;
    chain.status = pair.truncated ? ChainStatus::CertifiedUpToBudget : ChainStatus::Certified;
    return chain;
  }
  for (int p = 0; p <= budget; ++p) {
    GradedSubspace next;
    for (int d = -2; d <= pair.maxDegree; ++d) next.parts[d] = freemanStep(pair, cur, qbar, qbarEls, d);
    chain.terms.push_back(next);
    if (isBottom(next)) {
      chain.k = p + 1;
      chain.status = pair.truncated ? ChainStatus::CertifiedUpToBudget : ChainStatus::Certified;
      return chain;
    }
    if (next == cur) {
      chain.status = ChainStatus::NotFinitelyNondegenerate;
      return chain;
    }
    cur = std::move(next);
  }
  chain.status = ChainStatus::Inconclusive;
  return chain;
}

TanakaChain tanakaSequence(const CRAlgebraPair& pair, const FreemanChain& chain) {
  const auto& c = *pair.c;
  TanakaChain out;
  GradedSubspace qbar = conjugate(c, pair.q);
  GradedSubspace g1 = sum(c, pair.q, qbar);
  out.terms.push_back(g1);
  GradedSubspace cur = g1;
  for (int step = 0; step < 2 * (pair.maxDegree + 4); ++step) {
    GradedSubspace next = cur;
    for (int p = -2; p <= pair.maxDegree; ++p)
      for (int q = -2; q <= pair.maxDegree; ++q) {
        if (p + q < -2 || p + q > pair.maxDegree) continue;
        if (g1.dim(p) == 0 || cur.dim(q) == 0) continue;
        next.parts[p + q] = next.at(c, p + q).sum(bracketSpan(c, p, g1.at(c, p), q, cur.at(c, q)));
      }
    if (next == cur) break;
    out.terms.push_back(next);
    cur = std::move(next);
  }
  out.mu = static_cast<int>(out.terms.size());
  if (out.terms.size() >= 2) out.dimM2 = out.terms[1].dim() - out.terms[0].dim();
  if (chain.terms.size() >= 2) {
    GradedSubspace q0 = chain.terms[1];
    out.dimM1 = g1.dim() - sum(c, q0, conjugate(c, q0)).dim();
  }
  return out;
}

CoreExtraction extractCore(const CRAlgebraPair& pair, const FreemanChain& chain) {
  const auto& c = *pair.c;
  CoreExtraction out;
  out.core.c = pair.c;
  if (chain.status == ChainStatus::NotFinitelyNondegenerate || chain.status == ChainStatus::Inconclusive) {
    out.error = toString(chain.status);
    return out;
  }
  for (int p = 0; p + 2 < static_cast<int>(chain.terms.size()); ++p) {
    const GradedSubspace& qp = chain.term(p);
    SubspaceG proj = mapSpan(c, p, qp.at(c, p), p, [&](const Element& x) { return c.project(x, Target::Extremal10); });
    const int expect = qp.dim() - chain.term(p + 1).dim();
    if (static_cast<int>(proj.dim()) != expect) {
      out.error = "m^{" + std::to_string(p) + "(10)}: projection has dim " + std::to_string(proj.dim()) +
                  " but q_p/q_{p+1} has dim " + std::to_string(expect);
      return out;
    }
    if (proj.dim() > 0) out.core.m10[p] = proj;
  }
  out.ok = true;
  return out;
}

}  // namespace crcore
