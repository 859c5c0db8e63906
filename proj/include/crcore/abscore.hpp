// Abstract cores realized inside the universal core M: components m^{p(10)} of M^{p(10)} = S^{p+2,0}.
#pragma once

#include "crcore/graded.hpp"

#include <string>
#include <vector>

namespace crcore {

struct AbstractCore {
  ContactPtr c;
  std::map<int, SubspaceG> m10;  // p >= 0

  /// Largest p with m^{p(10)} != 0; -1 for the Heisenberg core.
  int height() const;
  int dim10(int p) const;
  /// Real dimension: 1 + 2n + 2 sum_p dim m^{p(10)}.
  int realDim() const;
  std::vector<Element> generators(int p) const;
  friend bool operator==(const AbstractCore& a, const AbstractCore& b);

  static AbstractCore heisenberg(ContactPtr c) { return AbstractCore{std::move(c), {}}; }
  /// Core generated by the given holomorphic elements; each must lie in some M^{p(10)}.
  static AbstractCore fromGenerators(ContactPtr c, const std::vector<Element>& gens);
};

struct CoreReport {
  bool valid = true;
  int height = -1;
  std::vector<std::string> violations;
};

/// Checks the core axioms: containment in M^{p(10)}, [m^{p(10)}, c^{-1(01)}] in m^{(p-1)(10)},
/// injectivity of the Levi maps L^{p+2}, and the nondegenerate Heisenberg negative part.
CoreReport validate(const AbstractCore& core);

/// dim m^{p(10)} <= binom(n+p+1, p+2) for every component.
bool dimensionBound(const AbstractCore& core);
bool dimensionBound(int n, const std::vector<int>& dims10);  // dims10[p] = dim m^{p(10)}
long dimensionBoundValue(int n, int p);

/// Rank of L^{p+2} on m^{p(10)}: the map X -> ([..[X, zb_{j1}], ..., zb_{j_{p+2}}])_j.
int leviRank(const AbstractCore& core, int p);

/// Element of Aut(c, J) given on c^{-1} by A (columns: images of z_1..z_n, zb_1..zb_n)
/// and on c^{-2} by multiplication with lambda.
struct Automorphism {
  MatG A;
  Gq lambda;
  static Automorphism identity(int n);
  /// z_j -> u z_j, zb_j -> conj(u) zb_j with |u| = 1.
  static Automorphism phase(int n, const Gq& u);
};

/// Empty when g lies in Aut(c, J); otherwise the failed conditions.
std::vector<std::string> autViolations(const ContactAlgebra& c, const Automorphism& g);
/// Canonical prolongation: layer i of degree p is acted on by lambda^{i-p} S^{p-2i}(A).
Element applyAutomorphism(const ContactAlgebra& c, const Automorphism& g, const Element& X);
AbstractCore applyAutomorphism(const Automorphism& g, const AbstractCore& core);

}  // namespace crcore
