// Bracket of the contact algebra obtained by unfolding mu^p(X) e^{-2} = X and
// [mu^p(X), v] = mu^{p-1}([X, v]) + 1/2 pi_k(X) v, then rebuilding [X, Y] from its
// action on c^{-2} and c^{-1}. Uses only the Poisson bracket on k; independent of
// the closed-form coefficients.
#pragma once

#include "crcore/contact.hpp"

#include <map>
#include <tuple>

namespace oracle {

using namespace crcore;

class RecursiveBracket {
 public:
  explicit RecursiveBracket(const ContactAlgebra& c) : c_(c) {}

  /// [X, T].
  Element adT(const Element& X) const {
    std::vector<Term> ts;
    for (const auto& t : X.terms())
      if (t.layer >= 0) ts.push_back({t.layer - 1, t.mono, t.c});
    return Element(X.degree() - 2, std::move(ts));
  }

  /// [X, v] for v = the linear variable a.
  Element adV(const Element& X, int a) const {
    const Monomial v = c_.var(a);
    std::vector<Term> ts;
    for (const auto& t : X.terms()) {
      for (auto& [m, w] : c_.poisson(t.mono, v)) ts.push_back({t.layer, m, t.c * w});
      if (t.layer >= 0) ts.push_back({t.layer - 1, t.mono * v, t.c * Gq(frac(1, 2))});
    }
    return Element(X.degree() - 1, std::move(ts));
  }

  Element bracket(const Element& X, const Element& Y) {
    const int p = X.degree(), q = Y.degree();
    Element out(p + q);
    if (p + q < -2) return out;
    auto bx = c_.basis(p);
    auto by = c_.basis(q);
    for (const auto& tx : X.terms())
      for (const auto& ty : Y.terms()) {
        const int k = bx->index.at({tx.layer, tx.mono});
        const int l = by->index.at({ty.layer, ty.mono});
        out += (tx.c * ty.c) * basisBracket(p, k, q, l);
      }
    return out;
  }

  std::size_t memoSize() const { return memo_.size(); }

 private:
  const Element& basisBracket(int p, int k, int q, int l) {
    auto key = std::make_tuple(p, k, q, l);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Element r = compute(c_.basisElement(p, k), c_.basisElement(q, l));
    return memo_.emplace(key, std::move(r)).first->second;
  }

  Element compute(const Element& X, const Element& Y) {
    const int p = X.degree(), q = Y.degree();
    if (p == -2) return Gq(-1) * adT(Y);
    if (q == -2) return adT(X);
    if (p == -1) return Gq(-1) * adV(Y, linearIndex(X));
    if (q == -1) return adV(X, linearIndex(Y));
    Element De = bracket(X, adT(Y)) + bracket(adT(X), Y);
    std::vector<Element> Dv;
    for (int a = 0; a < c_.nvars(); ++a) Dv.push_back(bracket(X, adV(Y, a)) + bracket(adV(X, a), Y));
    return reconstruct(p + q, De, Dv);
  }

  int linearIndex(const Element& v) const {
    const auto& t = v.terms().front();
    for (int a = 0; a < c_.nvars(); ++a)
      if (t.mono.e[a] == 1) return a;
    return -1;
  }

  /// The unique Z in c^r with [Z, T] = De and [Z, v_a] = Dv[a].
  Element reconstruct(int r, const Element& De, const std::vector<Element>& Dv) const {
    Element Z = c_.mu(r, De);
    if (Z.isZero()) Z = Element(r);
    const int n = c_.n();
    // res_b = {f, v_b}; {f, zb_j} = d_{z_j} f B(z_j, zb_j), {f, z_j} = d_{zb_j} f B(zb_j, z_j)
    std::vector<Element> grad(static_cast<std::size_t>(c_.nvars()));
    for (int j = 0; j < n; ++j) {
      const Gq bzzb(0, frac(-c_.space().eps(j), 2));
      Element resZb = Dv[static_cast<std::size_t>(n + j)] - adV(Z, n + j);
      Element resZ = Dv[static_cast<std::size_t>(j)] - adV(Z, j);
      grad[static_cast<std::size_t>(j)] = bzzb.inverse() * resZb;
      grad[static_cast<std::size_t>(n + j)] = (-bzzb).inverse() * resZ;
    }
    std::vector<Term> f;
    for (int a = 0; a < c_.nvars(); ++a)
      for (const auto& t : grad[static_cast<std::size_t>(a)].terms()) {
        if (t.layer != -1) throw std::logic_error("reconstruct: residual outside k");
        f.push_back({-1, t.mono * c_.var(a), t.c * Gq(frac(1, r + 2))});
      }
    return Z + Element(r, std::move(f));
  }

  const ContactAlgebra& c_;
  std::map<std::tuple<int, int, int, int>, Element> memo_;
};

}  // namespace oracle
