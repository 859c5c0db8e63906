// Graded subspaces of the complexified contact algebra, one coordinate subspace per degree.
#pragma once

#include "crcore/contact.hpp"

#include <map>
#include <memory>
#include <vector>

namespace crcore {

using ContactPtr = std::shared_ptr<const ContactAlgebra>;

struct GradedSubspace {
  std::map<int, SubspaceG> parts;

  /// Component in degree p (the zero subspace when absent).
  SubspaceG at(const ContactAlgebra& c, int p) const;
  int dim(int p) const;
  int dim() const;
  int minDegree() const;
  int maxDegree() const;  // highest degree with a nonzero component, -3 if empty
  bool contains(const ContactAlgebra& c, const Element& X) const;
  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b);
};

std::vector<Element> elementsOf(const ContactAlgebra& c, int p, const SubspaceG& U);
std::vector<Element> elementsOf(const ContactAlgebra& c, const GradedSubspace& U);
SubspaceG spanIn(const ContactAlgebra& c, int p, const std::vector<Element>& xs);
/// Groups homogeneous elements by degree.
GradedSubspace gradedSpan(const ContactAlgebra& c, const std::vector<Element>& xs);
SubspaceG conjugate(const ContactAlgebra& c, int p, const SubspaceG& U);
GradedSubspace conjugate(const ContactAlgebra& c, const GradedSubspace& U);
GradedSubspace intersect(const ContactAlgebra& c, const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace sum(const ContactAlgebra& c, const GradedSubspace& a, const GradedSubspace& b);
/// Span of [U, V] in degree p + q.
SubspaceG bracketSpan(const ContactAlgebra& c, int p, const SubspaceG& U, int q, const SubspaceG& V);
/// Image of a subspace under an element-wise linear map.
template <typename F>
SubspaceG mapSpan(const ContactAlgebra& c, int p, const SubspaceG& U, int target, F&& f) {
  std::vector<VecG> vs;
  for (const auto& x : elementsOf(c, p, U)) vs.push_back(c.coords(f(x)));
  return SubspaceG::fromVectors(c.dim(target), vs);
}
/// { Y in U (degree d) : [Y, y] in W_y for every constraint (y, W_y) }.
SubspaceG restrictByBrackets(const ContactAlgebra& c, int d, const SubspaceG& U,
                             const std::vector<std::pair<Element, SubspaceG>>& constraints);
/// pi_{M^{p(10)}}(U).
SubspaceG extremal10Span(const ContactAlgebra& c, int p, const SubspaceG& U);
/// Every degree in [lo, hi] of c.
GradedSubspace fullRange(const ContactAlgebra& c, int lo, int hi);

/// Violations of bracket closure for degrees in [lo, hi]; brackets landing above hi must vanish
/// when strictTop is set, and are ignored otherwise.
std::vector<std::string> closureViolations(const ContactAlgebra& c, const GradedSubspace& U, int lo, int hi,
                                           bool strictTop);

}  // namespace crcore
