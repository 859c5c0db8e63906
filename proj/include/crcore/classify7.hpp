// Seven-dimensional cores of height 0 (n = 2): orbits of C^x K on P^2(C), K = SO(3) or SO+(2,1),
// acting on the line m^{0(10)} written in the basis (eps_1, eps_2, eps_3) of S^2 C^2.
#pragma once

#include "crcore/contact.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace crcore {

/// r = 2 for signature (2,0), r = 1 for (1,1). z holds eps-coordinates.
struct CoreLineRep {
  int r = 2;
  std::array<Gq, 3> z;
};

/// Reads a z1^2 + b z1 z2 + c z2^2 through the eps dictionary of the signature of c.
CoreLineRep coreLineFromElement(const ContactAlgebra& c, const Element& X);
Element elementFromCoreLine(const ContactAlgebra& c, const CoreLineRep& rep);

/// Quadratic form on R^3: identity for (2,0), diag(1,1,-1) for (1,1).
Rational formDiag(int r, int k);

struct OrbitInvariants {
  int r = 2;
  bool dependent = false;  // x, y linearly dependent over R
  Rational qq;             // |q(z)|^2 with q the complex bilinear form
  Rational h;              // q(z, zbar)
  std::optional<Rational> R;  // |q|^2 / h^2 when h != 0
  int causal = 0;      // dependent case: sign of the real direction's norm
  int planeType = 0;   // independent case: +1 definite, 0 degenerate, -1 indefinite
  int orientation = 0; // sign det[x, y, eps_3] where it is invariant, else 0
  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
  std::string toString() const;
};
OrbitInvariants orbitInvariants(const CoreLineRep& rep);

struct StabilizerAlgebra {
  int realDim = 2;      // 2 + dim of the K-part
  std::string tag;      // "C", "C+so2", "C+so(1,1)", "C+R", "C+(R⋉R)", ...
  std::vector<MatQ> kPart;  // basis of { A in k : A z in C z }
};
StabilizerAlgebra stabilizerAlgebra(const CoreLineRep& rep);

struct OrbitLabel {
  int r = 2;
  std::string family;     // "m_t", "mtilde_t", "m_pm", "m_<0", "m_null"
  int sign = 0;           // sign of t (or of the +- choice)
  std::optional<Rational> t;  // exact parameter when rational
  std::string parameter;  // "t = 1/2", "t^2 = 3/5", "((1-t^2)/(1+t^2))^2 = 1/3, t > 0", ...
  Rational key;           // invariant separating the members of a family
  std::string stabilizer;
  bool admissible = false;
  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    return a.r == b.r && a.family == b.family && a.sign == b.sign && a.key == b.key;
  }
};
OrbitLabel canonicalForm(const CoreLineRep& rep);

/// Action of e^{i theta}, (cos theta, sin theta) = (a, b), on the representatives
/// eps_1 + i(t1 eps_1 + t2 eps_2). Throws unless a^2 + b^2 = 1.
struct S1Result {
  bool defined = false;  // false on the excluded locus (vanishing denominator)
  Rational t1, t2;
};
S1Result s1Action(int r, const Rational& a, const Rational& b, const Rational& t1, const Rational& t2);
/// The closed forms exactly as displayed: t2sq is the right-hand side for (t2')^2 in
/// signature (2,0) and the square of the displayed t2' in signature (1,1).
struct S1Displayed {
  bool defined = false;
  Rational t1, t2sq;
};
S1Displayed s1ActionDisplayed(int r, const Rational& a, const Rational& b, const Rational& t1, const Rational& t2);

struct TableRow {
  int r = 2;
  std::string family, parameter, generator, stabilizer;
  bool admissible = false;
  bool verified = false;  // canonical form and stabilizer recomputed from the generator agree
  std::string note;
};
std::vector<TableRow> enumerateTable(int r);
std::string tableJson(const std::vector<TableRow>& rows);
std::string tableMarkdown(const std::vector<TableRow>& rows);

/// Elements of C^x K used for invariance checks: c * A with A an exact Cayley rotation/boost.
CoreLineRep actOn(const CoreLineRep& rep, const Gq& c, const MatQ& A);
/// Cayley transform (I - S)^{-1}(I + S) of S in k; nullopt if singular or off the identity component.
std::optional<MatQ> cayleyElement(int r, const Rational& s1, const Rational& s2, const Rational& s3);

}  // namespace crcore
