// CR algebras (g, q) inside the complexified contact algebra: Freeman and Tanaka
// sequences, nondegeneracy order, the universal pair (c, u), core extraction.
#pragma once

#include "crcore/abscore.hpp"

#include <string>
#include <vector>

namespace crcore {

/// ghat is the complexification of the real form g (conj-stable); q is complex.
/// Components live in degrees [-2, maxDegree]. A truncated pair is a finite window of
/// an infinite-dimensional algebra; its answers are certified only up to the window.
struct CRAlgebraPair {
  ContactPtr c;
  int maxDegree = 0;
  bool truncated = false;
  GradedSubspace ghat;
  GradedSubspace q;
};

std::vector<std::string> pairViolations(const CRAlgebraPair& pair);

/// u^p = every ad J eigenspace of c^p except the minimal eigenvalue -i(p+2).
GradedSubspace universalU(const ContactAlgebra& c, int lo, int hi);
CRAlgebraPair buildUniversal(ContactPtr c, int maxDegree);

enum class ChainStatus { Certified, CertifiedUpToBudget, Inconclusive, NotFinitelyNondegenerate };
std::string toString(ChainStatus s);

struct FreemanChain {
  std::vector<GradedSubspace> terms;  // q_{-1}, q_0, q_1, ...
  GradedSubspace qcapqbar;
  int k = -1;  // q_{k-1} = q cap qbar; -1 if not reached
  ChainStatus status = ChainStatus::Inconclusive;
  std::vector<int> dims() const;
  const GradedSubspace& term(int p) const { return terms.at(static_cast<std::size_t>(p + 1)); }
};

/// q_p = { Z in q_{p-1} : [Z, qbar] in q_{p-1} + qbar }, brackets restricted to the window.
FreemanChain freemanSequence(const CRAlgebraPair& pair);

struct TanakaChain {
  std::vector<GradedSubspace> terms;  // ghat_{-1}, ghat_{-2}, ...
  int mu = 0;
  int dimM2 = 0;  // dim ghat_{-2} / ghat_{-1}
  int dimM1 = 0;  // real dim of Re((q + qbar)/(q_0 + qbar_0))
};
TanakaChain tanakaSequence(const CRAlgebraPair& pair, const FreemanChain& chain);

struct CoreExtraction {
  bool ok = false;
  std::string error;
  AbstractCore core;
};
/// m^{p(10)} realized as pi_{M^{p(10)}} of the degree-p part of q_p.
CoreExtraction extractCore(const CRAlgebraPair& pair, const FreemanChain& chain);

}  // namespace crcore
