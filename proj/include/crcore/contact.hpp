// Graded contact algebra c = sum_{p >= -2} c^p over a 2n-dimensional symplectic space,
// complexified and written in holomorphic coordinates z_j, zb_j.
#pragma once

#include "crcore/exactla.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crcore {

constexpr int kMaxVars = 16;  // 2n <= 16

/// Exponent vector over z_1..z_n, zb_1..zb_n (in that order).
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int k = 0; k < kMaxVars; ++k) m.e[k] = static_cast<std::uint8_t>(e[k] + o.e[k]);
    return m;
  }
  /// (holomorphic count, antiholomorphic count) for n variables each.
  std::pair<int, int> bidegree(int n) const {
    int l = 0, m = 0;
    for (int k = 0; k < n; ++k) {
      l += e[k];
      m += e[n + k];
    }
    return {l, m};
  }
  auto operator<=>(const Monomial&) const = default;
};

/// Real symplectic data of c^{-1} in the complex-symplectic basis e_1..e_{2n}:
/// B(e_j, e_{j+n}) = 1, J e_j = -eps_j e_{j+n}, eps_j = +1 for j < r and -1 otherwise.
struct SymplecticSpace {
  int n = 1;
  int r = 1;  // signature (r, n - r) of the Hermitian form
  MatQ B, J;

  static SymplecticSpace make(int n, int r);
  int s() const { return n - r; }
  int eps(int j) const { return j < r ? 1 : -1; }
  /// Checks skewness, nondegeneracy, J^2 = -1, J symplectic, Hermitian signature (r, s).
  bool valid() const;
  /// Coordinates of z_j, zb_j in terms of a real vector v in the e-basis.
  VecG toHolomorphic(const Vec<Rational>& v) const;
};

struct Term {
  int layer;  // -1 for k^p = S^{p+2}; i >= 0 for the image of mu^{p|p-2i}
  Monomial mono;
  Gq c;
};

/// Homogeneous element of c^p (complexified).
class Element {
 public:
  Element() = default;
  explicit Element(int degree) : p_(degree) {}
  Element(int degree, std::vector<Term> terms);

  int degree() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  /// Adds c * (layer, mono); layer must match degree.
  void add(int layer, const Monomial& m, const Gq& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Gq& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Gq& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Gq(-1); }
  friend bool operator==(const Element& a, const Element& b);

  /// Sorted canonical order: layer ascending, monomial descending.
  static bool termLess(const Term& a, const Term& b);

 private:
  void normalize();
  int p_ = -2;
  std::vector<Term> terms_;
};

/// Coefficients alpha(p,i;q,j), beta(i,j) of the xi x xi bracket.
std::pair<Rational, Rational> closedFormCoeffs(int p, int i, int q, int j);

/// Projection targets, see Contact::project.
enum class Target { K, Xi, Layer, Bidegree, Extremal10, Extremal01 };

class ContactAlgebra {
 public:
  ContactAlgebra(int n, int r);
  explicit ContactAlgebra(const SymplecticSpace& sp) : ContactAlgebra(sp.n, sp.r) {}

  int n() const { return n_; }
  int r() const { return r_; }
  int nvars() const { return 2 * n_; }
  const SymplecticSpace& space() const { return space_; }

  // Distinguished elements.
  Element T() const;
  Element E() const;
  Element Jelem() const;  // the complex structure as an element of k^0
  Element z(int j) const;
  Element zb(int j) const;
  /// Bare polynomial in S^d placed in k^{d-2}.
  Element kelem(const std::map<Monomial, Gq>& poly) const;
  Monomial var(int a) const;

  Element bracket(const Element& X, const Element& Y) const;
  /// mu^p(X) for X in c^{p-2}; mu^{-1} = 0.
  Element mu(int p, const Element& X) const;
  Element conjugate(const Element& X) const;
  /// Projection onto k^p, xi^p, a layer, a bidegree (l, m), or M^{p(10)} / M^{p(01)}.
  Element project(const Element& X, Target t, int a = 0, int b = 0) const;
  /// Map (l - m) -> component; the eigenvalue of ad J on the component is i (l - m).
  std::map<int, Element> adJEigen(const Element& X) const;

  /// Poisson bracket of two polynomials (used by brackets within layers).
  std::vector<std::pair<Monomial, Gq>> poisson(const Monomial& f, const Monomial& h) const;

  // Coordinates.
  struct Basis {
    int p;
    std::vector<std::pair<int, Monomial>> items;  // (layer, monomial)
    std::map<std::pair<int, Monomial>, int> index;
  };
  std::shared_ptr<const Basis> basis(int p) const;
  int dim(int p) const { return static_cast<int>(basis(p)->items.size()); }
  Element basisElement(int p, int k) const;
  VecG coords(const Element& X) const;
  Element fromCoords(int p, const VecG& v) const;
  static std::vector<Monomial> monomials(int nvars, int d);

  // Text syntax.
  std::string toString(const Element& X) const;
  std::string varName(int a) const;

 private:
  int n_, r_;
  SymplecticSpace space_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const Basis>> bases_;
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col)),
        line(line_),
        column(col) {}
};

/// Parses the element syntax, including nested brackets "[X,Y]". Throws ParseError.
Element parseElement(const ContactAlgebra& c, const std::string& text, int line = 1);
/// Same, reading plain polynomials at the given degree: a monomial of degree d sits in layer (p - d)/2.
Element parseElement(const ContactAlgebra& c, const std::string& text, int degree, int line);

}  // namespace crcore
