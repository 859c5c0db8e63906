#include "crcore/graded.hpp"

#include <algorithm>

namespace crcore {

SubspaceG GradedSubspace::at(const ContactAlgebra& c, int p) const {
  auto it = parts.find(p);
  if (it != parts.end()) return it->second;
  return SubspaceG(p < -2 ? 0 : c.dim(p));
}

int GradedSubspace::dim(int p) const {
  auto it = parts.find(p);
  return it == parts.end() ? 0 : static_cast<int>(it->second.dim());
}

int GradedSubspace::dim() const {
  int d = 0;
  for (const auto& [p, s] : parts) d += static_cast<int>(s.dim());
  return d;
}

int GradedSubspace::minDegree() const {
  for (const auto& [p, s] : parts)
    if (s.dim() > 0) return p;
  return 1 << 20;
}

int GradedSubspace::maxDegree() const {
  int m = -3;
  for (const auto& [p, s] : parts)
    if (s.dim() > 0) m = p;
  return m;
}

bool GradedSubspace::contains(const ContactAlgebra& c, const Element& X) const {
  if (X.isZero()) return true;
  return at(c, X.degree()).contains(c.coords(X));
}

bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
  std::vector<int> degs;
  for (const auto& [p, s] : a.parts) degs.push_back(p);
  for (const auto& [p, s] : b.parts) degs.push_back(p);
  for (int p : degs) {
    auto ia = a.parts.find(p), ib = b.parts.find(p);
    const bool za = ia == a.parts.end() || ia->second.dim() == 0;
    const bool zb = ib == b.parts.end() || ib->second.dim() == 0;
    if (za && zb) continue;
    if (za != zb || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::vector<Element> elementsOf(const ContactAlgebra& c, int p, const SubspaceG& U) {
  std::vector<Element> out;
  for (Eigen::Index i = 0; i < U.dim(); ++i) out.push_back(c.fromCoords(p, U.vector(i)));
  return out;
}

std::vector<Element> elementsOf(const ContactAlgebra& c, const GradedSubspace& U) {
  std::vector<Element> out;
  for (const auto& [p, s] : U.parts)
    for (auto& x : elementsOf(c, p, s)) out.push_back(std::move(x));
  return out;
}

SubspaceG spanIn(const ContactAlgebra& c, int p, const std::vector<Element>& xs) {
  std::vector<VecG> vs;
  for (const auto& x : xs) {
    if (x.isZero()) continue;
    if (x.degree() != p) throw std::invalid_argument("spanIn: degree mismatch");
    vs.push_back(c.coords(x));
  }
  return SubspaceG::fromVectors(c.dim(p), vs);
}

GradedSubspace gradedSpan(const ContactAlgebra& c, const std::vector<Element>& xs) {
  std::map<int, std::vector<Element>> by;
  for (const auto& x : xs)
    if (!x.isZero()) by[x.degree()].push_back(x);
  GradedSubspace g;
  for (const auto& [p, v] : by) g.parts[p] = spanIn(c, p, v);
  return g;
}

SubspaceG conjugate(const ContactAlgebra& c, int p, const SubspaceG& U) {
  return mapSpan(c, p, U, p, [&](const Element& x) { return c.conjugate(x); });
}

GradedSubspace conjugate(const ContactAlgebra& c, const GradedSubspace& U) {
  GradedSubspace g;
  for (const auto& [p, s] : U.parts) g.parts[p] = conjugate(c, p, s);
  return g;
}

GradedSubspace intersect(const ContactAlgebra& c, const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace g;
  for (const auto& [p, s] : a.parts)
    if (b.parts.count(p)) g.parts[p] = s.intersect(b.parts.at(p));
  (void)c;
  return g;
}

GradedSubspace sum(const ContactAlgebra& c, const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace g = a;
  for (const auto& [p, s] : b.parts) g.parts[p] = g.at(c, p).sum(s);
  return g;
}

SubspaceG bracketSpan(const ContactAlgebra& c, int p, const SubspaceG& U, int q, const SubspaceG& V) {
  std::vector<VecG> vs;
  if (p + q >= -2) {
    auto xs = elementsOf(c, p, U);
    auto ys = elementsOf(c, q, V);
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Element b = c.bracket(x, y);
        if (!b.isZero()) vs.push_back(c.coords(b));
      }
  }
  return SubspaceG::fromVectors(p + q >= -2 ? c.dim(p + q) : 0, vs);
}

SubspaceG restrictByBrackets(const ContactAlgebra& c, int d, const SubspaceG& U,
                             const std::vector<std::pair<Element, SubspaceG>>& constraints) {
  if (U.dim() == 0 || constraints.empty()) return U;
  auto us = elementsOf(c, d, U);
  std::vector<std::vector<Gq>> cols(us.size());
  for (const auto& [y, W] : constraints)
    for (std::size_t a = 0; a < us.size(); ++a) {
      VecG r = W.reduce(c.coords(c.bracket(us[a], y)));
      for (Eigen::Index k = 0; k < r.size(); ++k) cols[a].push_back(r(k));
    }
  const std::size_t rows = cols[0].size();
  if (rows == 0) return U;
  MatG m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(us.size()));
  for (std::size_t a = 0; a < us.size(); ++a)
    for (std::size_t k = 0; k < rows; ++k) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(a)) = cols[a][k];
  MatG ker = kernel<Gq>(m);
  return SubspaceG::fromRows(MatG((U.basis().transpose() * ker).transpose()));
}

SubspaceG extremal10Span(const ContactAlgebra& c, int p, const SubspaceG& U) {
  return mapSpan(c, p, U, p, [&](const Element& x) { return c.project(x, Target::Extremal10); });
}

GradedSubspace fullRange(const ContactAlgebra& c, int lo, int hi) {
  GradedSubspace g;
  for (int p = lo; p <= hi; ++p) g.parts[p] = SubspaceG::full(c.dim(p));
  return g;
}

std::vector<std::string> closureViolations(const ContactAlgebra& c, const GradedSubspace& U, int lo, int hi,
                                           bool strictTop) {
  std::vector<std::string> out;
  std::map<int, std::vector<Element>> els;
  for (int p = lo; p <= hi; ++p) els[p] = elementsOf(c, p, U.at(c, p));
  for (int p = lo; p <= hi; ++p)
    for (int q = p; q <= hi; ++q) {
      if (p + q < -2) continue;
      const bool above = p + q > hi;
      if (above && !strictTop) continue;
      SubspaceG target = above ? SubspaceG(c.dim(p + q)) : U.at(c, p + q);
      for (std::size_t a = 0; a < els[p].size(); ++a)
        for (std::size_t b = (p == q ? a : 0); b < els[q].size(); ++b) {
          Element z = c.bracket(els[p][a], els[q][b]);
          if (!z.isZero() && !target.contains(c.coords(z)))
            out.push_back("[" + c.toString(els[p][a]) + ", " + c.toString(els[q][b]) + "] = " + c.toString(z) +
                          " leaves degree " + std::to_string(p + q));
        }
    }
  return out;
}

}  // namespace crcore
