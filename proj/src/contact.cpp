#include "crcore/contact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace crcore {

// ---------------------------------------------------------------- symplectic space

SymplecticSpace SymplecticSpace::make(int n, int r) {
  if (n < 1 || 2 * n > kMaxVars || r < 0 || r > n) throw std::invalid_argument("SymplecticSpace: bad (n, r)");
  SymplecticSpace sp;
  sp.n = n;
  sp.r = r;
  sp.B = zeros<Rational>(2 * n, 2 * n);
  sp.J = zeros<Rational>(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    sp.B(j, j + n) = 1;
    sp.B(j + n, j) = -1;
    // J e_j = -eps e_{j+n}, J e_{j+n} = eps e_j (columns are images)
    sp.J(j + n, j) = -sp.eps(j);
    sp.J(j, j + n) = sp.eps(j);
  }
  return sp;
}

namespace {
// Inertia of a real symmetric matrix by rational congruence.
std::pair<int, int> inertia(MatQ m) {
  const Eigen::Index n = m.rows();
  int pos = 0, neg = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && sgn(m(p, p)) == 0) ++p;
    if (p == n) {
      // all remaining diagonal zero: look for an off-diagonal entry and split it
      Eigen::Index a = -1, b = -1;
      for (Eigen::Index i = k; i < n && a < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (sgn(m(i, j)) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a < 0) break;
      m.row(a) += m.row(b);
      m.col(a) += m.col(b);
      p = a;
    }
    if (p != k) {
      m.row(p).swap(m.row(k));
      m.col(p).swap(m.col(k));
    }
    Rational d = m(k, k);
    (sgn(d) > 0 ? pos : neg)++;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      Rational f = m(i, k) / d;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
  }
  return {pos, neg};
}
}  // namespace

bool SymplecticSpace::valid() const {
  const int m = 2 * n;
  if (B.rows() != m || J.rows() != m) return false;
  if (B.transpose() != -B) return false;
  if (determinant<Rational>(B) == 0) return false;
  MatQ j2 = J * J;
  if (j2 != -identity<Rational>(m)) return false;
  if (J.transpose() * B * J != B) return false;
  // g(v, w) = B(Jv, w) is symmetric with inertia (2r, 2s)
  MatQ g = J.transpose() * B;
  if (g.transpose() != g) return false;
  auto [pos, neg] = inertia(g);
  return pos == 2 * r && neg == 2 * s();
}

VecG SymplecticSpace::toHolomorphic(const Vec<Rational>& v) const {
  // e_j = z_j + zb_j, e_{j+n} = -i eps_j (z_j - zb_j)
  VecG out(2 * n);
  for (int k = 0; k < 2 * n; ++k) out(k) = Gq(0);
  for (int j = 0; j < n; ++j) {
    out(j) += Gq(v(j));
    out(n + j) += Gq(v(j));
    Gq c = Gq(0, -eps(j)) * Gq(v(j + n));
    out(j) += c;
    out(n + j) -= c;
  }
  return out;
}

// ---------------------------------------------------------------- element

bool Element::termLess(const Term& a, const Term& b) {
  if (a.layer != b.layer) return a.layer < b.layer;
  return b.mono < a.mono;
}

Element::Element(int degree, std::vector<Term> terms) : p_(degree), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.layer < -1 || t.mono.degree() != p_ - 2 * t.layer)
      throw std::invalid_argument("Element: term inconsistent with degree");
  normalize();
}

void Element::normalize() {
  std::sort(terms_.begin(), terms_.end(), termLess);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().layer == t.layer && out.back().mono == t.mono)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.c.isZero(); });
  terms_ = std::move(out);
}

void Element::add(int layer, const Monomial& m, const Gq& c) {
  if (layer < -1 || m.degree() != p_ - 2 * layer) throw std::invalid_argument("Element::add: bad layer");
  Term t{layer, m, c};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, termLess);
  if (it != terms_.end() && it->layer == layer && it->mono == m) {
    it->c += c;
    if (it->c.isZero()) terms_.erase(it);
  } else if (!c.isZero()) {
    terms_.insert(it, t);
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.isZero()) return *this;
  if (isZero()) {
    p_ = o.p_;
    terms_ = o.terms_;
    return *this;
  }
  if (o.p_ != p_) throw std::invalid_argument("Element: degree mismatch in sum");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += Gq(-1) * o; }

Element& Element::operator*=(const Gq& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.isZero() && b.isZero()) return true;
  if (a.p_ != b.p_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto &x = a.terms_[k], &y = b.terms_[k];
    if (x.layer != y.layer || x.mono != y.mono || x.c != y.c) return false;
  }
  return true;
}

// ---------------------------------------------------------------- coefficients

namespace {
long binom(int a, int b) {
  if (b == 0) return 1;  // includes binom(-1, 0) = 1
  if (a < 0 || b < 0 || b > a) return 0;
  long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}
long sumTerm(int i, int j) {
  long s = 0;
  for (int k = 0; k <= j; ++k) s += binom(i + k - 1, k) * (j + 1 - k);
  return s;
}
}  // namespace

std::pair<Rational, Rational> closedFormCoeffs(int p, int i, int q, int j) {
  if (p < 0 || q < 0 || i < 0 || j < 0 || 2 * i > p || 2 * j > q)
    throw std::out_of_range("closedFormCoeffs: index out of range");
  long s1 = sumTerm(i, j), s2 = sumTerm(j, i);
  Rational alpha = frac((p - 2 * i - 2) * s1 - (q - 2 * j - 2) * s2, 2);
  return {alpha, Rational(s1 + s2)};
}

// ---------------------------------------------------------------- algebra

ContactAlgebra::ContactAlgebra(int n, int r) : n_(n), r_(r), space_(SymplecticSpace::make(n, r)) {}

Monomial ContactAlgebra::var(int a) const {
  Monomial m;
  m.e[a] = 1;
  return m;
}

Element ContactAlgebra::T() const { return Element(-2, {{-1, Monomial{}, Gq(1)}}); }
Element ContactAlgebra::E() const { return Element(0, {{0, Monomial{}, Gq(-2)}}); }
Element ContactAlgebra::z(int j) const { return Element(-1, {{-1, var(j), Gq(1)}}); }
Element ContactAlgebra::zb(int j) const { return Element(-1, {{-1, var(n_ + j), Gq(1)}}); }

Element ContactAlgebra::Jelem() const {
  Element out(0);
  for (int j = 0; j < n_; ++j) out.add(-1, var(j) * var(n_ + j), Gq(2 * space_.eps(j)));
  return out;
}

Element ContactAlgebra::kelem(const std::map<Monomial, Gq>& poly) const {
  std::vector<Term> ts;
  int d = -1;
  for (const auto& [m, c] : poly) {
    if (d >= 0 && m.degree() != d) throw std::invalid_argument("kelem: inhomogeneous polynomial");
    d = m.degree();
    ts.push_back({-1, m, c});
  }
  return Element(d < 0 ? -2 : d - 2, std::move(ts));
}

std::vector<std::pair<Monomial, Gq>> ContactAlgebra::poisson(const Monomial& f, const Monomial& h) const {
  std::vector<std::pair<Monomial, Gq>> out;
  for (int j = 0; j < n_; ++j) {
    const int a = j, b = n_ + j;
    // {f,h} = sum d_a f d_b h B_ab, B(z_j, zb_j) = -(i/2) eps_j = -B(zb_j, z_j)
    long w = static_cast<long>(f.e[a]) * h.e[b] - static_cast<long>(f.e[b]) * h.e[a];
    if (w == 0) continue;
    Monomial m = f * h;
    m.e[a] -= 1;
    m.e[b] -= 1;
    out.emplace_back(m, Gq(0, frac(-w * space_.eps(j), 2)));
  }
  return out;
}

Element ContactAlgebra::bracket(const Element& X, const Element& Y) const {
  const int p = X.degree(), q = Y.degree();
  std::vector<Term> acc;
  if (X.isZero() || Y.isZero()) return Element(p + q);
  if (p + q < -2) return Element(p + q);
  for (const auto& tx : X.terms()) {
    for (const auto& ty : Y.terms()) {
      const int i = tx.layer, j = ty.layer;
      Gq c = tx.c * ty.c;
      if (p == -2) {
        if (j >= 0) acc.push_back({j - 1, ty.mono, -c});
        continue;
      }
      if (q == -2) {
        if (i >= 0) acc.push_back({i - 1, tx.mono, c});
        continue;
      }
      Monomial fh = tx.mono * ty.mono;
      int layerP;  // layer receiving the Poisson part
      if (i == -1 && j == -1) {
        layerP = -1;
      } else if (i == -1) {
        if (p != 0) acc.push_back({j - 1, fh, c * Gq(frac(p, 2))});
        layerP = j;
      } else if (j == -1) {
        if (q != 0) acc.push_back({i - 1, fh, c * Gq(frac(-q, 2))});
        layerP = i;
      } else {
        auto [alpha, beta] = closedFormCoeffs(p, i, q, j);
        if (sgn(alpha) != 0) acc.push_back({i + j, fh, c * Gq(alpha)});
        layerP = i + j + 1;
        c *= Gq(beta);
      }
      for (auto& [m, w] : poisson(tx.mono, ty.mono)) acc.push_back({layerP, m, c * w});
    }
  }
  return Element(p + q, std::move(acc));
}

Element ContactAlgebra::mu(int p, const Element& X) const {
  if (p < -1) throw std::invalid_argument("mu: p must be >= -1");
  if (!X.isZero() && X.degree() != p - 2) throw std::invalid_argument("mu: degree mismatch");
  if (p == -1) return Element(-1);
  std::vector<Term> ts;
  for (const auto& t : X.terms()) ts.push_back({t.layer + 1, t.mono, t.c});
  return Element(p, std::move(ts));
}

Element ContactAlgebra::conjugate(const Element& X) const {
  std::vector<Term> ts;
  for (const auto& t : X.terms()) {
    Monomial m;
    for (int j = 0; j < n_; ++j) {
      m.e[j] = t.mono.e[n_ + j];
      m.e[n_ + j] = t.mono.e[j];
    }
    ts.push_back({t.layer, m, t.c.conj()});
  }
  return Element(X.degree(), std::move(ts));
}

Element ContactAlgebra::project(const Element& X, Target t, int a, int b) const {
  const int p = X.degree();
  if ((t == Target::Layer && (a < -1 || 2 * a > p)) ||
      (t == Target::Bidegree && (a < 0 || b < 0 || (p - a - b) % 2 != 0 || a + b > p + 2)))
    throw std::invalid_argument("project: invalid target for degree");
  std::vector<Term> ts;
  for (const auto& term : X.terms()) {
    auto [l, m] = term.mono.bidegree(n_);
    bool keep = false;
    switch (t) {
      case Target::K: keep = term.layer == -1; break;
      case Target::Xi: keep = term.layer >= 0; break;
      case Target::Layer: keep = term.layer == a; break;
      case Target::Bidegree: keep = l == a && m == b; break;
      case Target::Extremal10: keep = term.layer == -1 && m == 0; break;
      case Target::Extremal01: keep = term.layer == -1 && l == 0; break;
    }
    if (keep) ts.push_back(term);
  }
  return Element(p, std::move(ts));
}

std::map<int, Element> ContactAlgebra::adJEigen(const Element& X) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : X.terms()) {
    auto [l, m] = t.mono.bidegree(n_);
    parts[l - m].push_back(t);
  }
  std::map<int, Element> out;
  for (auto& [k, ts] : parts) out.emplace(k, Element(X.degree(), std::move(ts)));
  return out;
}

std::vector<Monomial> ContactAlgebra::monomials(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m;
  // recursive fill, graded lex with earlier variables first
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      m.e[var] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, left - k);
    }
    m.e[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::shared_ptr<const ContactAlgebra::Basis> ContactAlgebra::basis(int p) const {
  if (p < -2) throw std::invalid_argument("basis: degree below -2");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = bases_.find(p);
  if (it != bases_.end()) return it->second;
  auto b = std::make_shared<Basis>();
  b->p = p;
  for (int i = -1; 2 * i <= p; ++i)
    for (const auto& m : monomials(nvars(), p - 2 * i)) {
      b->index.emplace(std::make_pair(i, m), static_cast<int>(b->items.size()));
      b->items.emplace_back(i, m);
    }
  bases_.emplace(p, b);
  return b;
}

Element ContactAlgebra::basisElement(int p, int k) const {
  auto b = basis(p);
  const auto& [i, m] = b->items.at(static_cast<std::size_t>(k));
  return Element(p, {{i, m, Gq(1)}});
}

VecG ContactAlgebra::coords(const Element& X) const {
  auto b = basis(X.degree());
  VecG v(static_cast<Eigen::Index>(b->items.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Gq(0);
  for (const auto& t : X.terms()) v(b->index.at({t.layer, t.mono})) = t.c;
  return v;
}

Element ContactAlgebra::fromCoords(int p, const VecG& v) const {
  auto b = basis(p);
  if (v.size() != static_cast<Eigen::Index>(b->items.size())) throw std::invalid_argument("fromCoords: size mismatch");
  std::vector<Term> ts;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).isZero()) ts.push_back({b->items[static_cast<std::size_t>(k)].first, b->items[static_cast<std::size_t>(k)].second, v(k)});
  return Element(p, std::move(ts));
}

// ---------------------------------------------------------------- printing

std::string ContactAlgebra::varName(int a) const {
  const bool bar = a >= n_;
  const int j = bar ? a - n_ : a;
  std::string s = bar ? "zb" : "z";
  if (n_ > 1) s += std::to_string(j + 1);
  return s;
}

namespace {
std::string termString(const Gq& c, const std::string& ms, bool alone) {
  const bool mixed = !c.isReal() && sgn(c.re) != 0;
  if (ms.empty()) {
    std::string s = toString(c);
    return (mixed && !alone) ? "(" + s + ")" : s;
  }
  if (c == Gq(1)) return ms;
  if (c == Gq(-1)) return "-" + ms;
  if (mixed) return "(" + toString(c) + ")*" + ms;
  return toString(c) + "*" + ms;
}
std::string joinTerms(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty() && s[0] != '-') out += "+";
    out += s;
  }
  return out.empty() ? "0" : out;
}
}  // namespace

std::string ContactAlgebra::toString(const Element& X) const {
  if (X.isZero()) return "0";
  auto monoString = [&](const Monomial& m) {
    std::string s;
    for (int a = 0; a < nvars(); ++a) {
      if (m.e[a] == 0) continue;
      if (!s.empty()) s += "*";
      s += varName(a);
      if (m.e[a] > 1) s += "^" + std::to_string(m.e[a]);
    }
    return s;
  };
  std::vector<std::string> parts;
  const auto& ts = X.terms();
  std::size_t k = 0;
  while (k < ts.size()) {
    const int layer = ts[k].layer;
    std::size_t e = k;
    while (e < ts.size() && ts[e].layer == layer) ++e;
    if (layer == -1) {
      for (std::size_t t = k; t < e; ++t) {
        std::string ms = X.degree() == -2 ? "T" : monoString(ts[t].mono);
        parts.push_back(termString(ts[t].c, ms, ts.size() == 1));
      }
    } else {
      std::vector<std::string> inner;
      for (std::size_t t = k; t < e; ++t) inner.push_back(termString(ts[t].c, monoString(ts[t].mono), e - k == 1));
      parts.push_back("mu^" + std::to_string(X.degree()) + "[" + joinTerms(inner) + "]");
    }
    k = e;
  }
  return joinTerms(parts);
}

// ---------------------------------------------------------------- parsing

namespace {

struct Tok {
  enum Kind { Num, Ident, Sym, End } kind;
  std::string text;
  int col;
};

class Parser {
 public:
  Parser(const ContactAlgebra& c, const std::string& s, int line) : c_(c), line_(line) { lex(s); }

  struct Val {
    bool isEl = false;
    Element el;
    std::map<Monomial, Gq> poly;
  };

  Element parseTop(std::optional<int> hint) {
    Val v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return toElement(v, hint);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().col); }
  [[noreturn]] void failAt(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

  void lex(const std::string& s) {
    std::size_t k = 0;
    while (k < s.size()) {
      const char ch = s[k];
      const int col = static_cast<int>(k) + 1;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++k;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t e = k;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        if (e + 1 < s.size() && s[e] == '/' && std::isdigit(static_cast<unsigned char>(s[e + 1]))) {
          ++e;
          while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        }
        toks_.push_back({Tok::Num, s.substr(k, e - k), col});
        k = e;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t e = k;
        while (e < s.size() && std::isalnum(static_cast<unsigned char>(s[e]))) ++e;
        toks_.push_back({Tok::Ident, s.substr(k, e - k), col});
        k = e;
      } else if (std::string("+-*^()[],").find(ch) != std::string::npos) {
        toks_.push_back({Tok::Sym, std::string(1, ch), col});
        ++k;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", line_, col);
      }
    }
    toks_.push_back({Tok::End, "end of input", static_cast<int>(s.size()) + 1});
  }

  const Tok& peek() const { return toks_[pos_]; }
  bool isSym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  void expect(const char* s) {
    if (!isSym(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }

  static Val plain(const Monomial& m, const Gq& c) {
    Val v;
    v.poly[m] = c;
    return v;
  }
  static Val element(Element e) {
    Val v;
    v.isEl = true;
    v.el = std::move(e);
    return v;
  }

  Element toElement(const Val& v, std::optional<int> hint) const {
    if (v.isEl) {
      if (hint && !v.el.isZero() && v.el.degree() != *hint) failAt("element has degree " + std::to_string(v.el.degree()) + ", expected " + std::to_string(*hint), 1);
      return v.el;
    }
    int p;
    if (hint) {
      p = *hint;
    } else {
      int d = -1;
      for (const auto& [m, c] : v.poly)
        if (!c.isZero()) d = std::max(d, m.degree());
      p = d < 0 ? -2 : d - 2;
    }
    std::vector<Term> ts;
    for (const auto& [m, c] : v.poly) {
      if (c.isZero()) continue;
      const int diff = p - m.degree();
      if (diff % 2 != 0 || diff < -2) failAt("monomial degree incompatible with element degree " + std::to_string(p), 1);
      ts.push_back({diff / 2, m, c});
    }
    return Element(p, std::move(ts));
  }

  Val add(Val a, const Val& b, int sign, int col) {
    if (!a.isEl && !b.isEl) {
      for (const auto& [m, c] : b.poly) a.poly[m] += sign == 1 ? c : -c;
      return a;
    }
    try {
      Element x = a.isEl ? a.el : toElement(a, b.el.degree());
      Element y = b.isEl ? b.el : toElement(b, x.isZero() ? std::optional<int>() : x.degree());
      if (sign == 1)
        x += y;
      else
        x -= y;
      return element(x);
    } catch (const std::invalid_argument& e) {
      failAt(e.what(), col);
    }
  }

  Val mul(const Val& a, const Val& b, int col) {
    if (!a.isEl && !b.isEl) {
      Val out;
      for (const auto& [m1, c1] : a.poly)
        for (const auto& [m2, c2] : b.poly) {
          Monomial m = m1 * m2;
          if (m.degree() != m1.degree() + m2.degree()) failAt("exponent overflow", col);
          out.poly[m] += c1 * c2;
        }
      return out;
    }
    auto scalarOf = [&](const Val& v) -> std::optional<Gq> {
      if (v.isEl) return std::nullopt;
      Gq s;
      for (const auto& [m, c] : v.poly) {
        if (c.isZero()) continue;
        if (m.degree() != 0) return std::nullopt;
        s += c;
      }
      return s;
    };
    if (a.isEl && b.isEl) failAt("product of two contact elements", col);
    const Val& el = a.isEl ? a : b;
    auto s = scalarOf(a.isEl ? b : a);
    if (!s) failAt("only scalars may multiply a structured element", col);
    return element(*s * el.el);
  }

  Val expr() {
    int sign = 1;
    if (isSym("+") || isSym("-")) {
      sign = peek().text == "-" ? -1 : 1;
      ++pos_;
    }
    const int col = peek().col;
    Val acc = term();
    if (sign == -1) acc = mul(plain(Monomial{}, Gq(-1)), acc, col);
    while (isSym("+") || isSym("-")) {
      const int s = peek().text == "-" ? -1 : 1;
      const int c = peek().col;
      ++pos_;
      acc = add(acc, term(), s, c);
    }
    return acc;
  }

  Val term() {
    Val acc = power();
    while (isSym("*")) {
      const int col = peek().col;
      ++pos_;
      acc = mul(acc, power(), col);
    }
    return acc;
  }

  Val power() {
    const int col = peek().col;
    Val base = atom();
    if (!isSym("^")) return base;
    ++pos_;
    if (peek().kind != Tok::Num || peek().text.find('/') != std::string::npos) fail("expected integer exponent");
    const int k = std::stoi(peek().text);
    ++pos_;
    if (base.isEl) {
      if (k != 1) failAt("power of a structured element", col);
      return base;
    }
    Val out = plain(Monomial{}, Gq(1));
    for (int t = 0; t < k; ++t) out = mul(out, base, col);
    return out;
  }

  Val atom() {
    const Tok t = peek();
    if (t.kind == Tok::Num) {
      ++pos_;
      return plain(Monomial{}, Gq(parseRational(t.text)));
    }
    if (t.kind == Tok::Sym && t.text == "(") {
      ++pos_;
      Val v = expr();
      expect(")");
      return v;
    }
    if (t.kind == Tok::Sym && t.text == "[") {
      ++pos_;
      Element a = toElement(expr(), std::nullopt);
      expect(",");
      Element b = toElement(expr(), std::nullopt);
      expect("]");
      return element(c_.bracket(a, b));
    }
    if (t.kind != Tok::Ident) fail("unexpected '" + t.text + "'");
    ++pos_;
    if (t.text == "i") return plain(Monomial{}, Gq::I());
    if (t.text == "T") return element(c_.T());
    if (t.text == "E") return element(c_.E());
    if (t.text == "J") return element(c_.Jelem());
    if (t.text == "mu") {
      expect("^");
      bool neg = false;
      if (isSym("-")) {
        neg = true;
        ++pos_;
      }
      if (peek().kind != Tok::Num || peek().text.find('/') != std::string::npos) fail("expected integer after mu^");
      int p = std::stoi(peek().text) * (neg ? -1 : 1);
      ++pos_;
      expect("[");
      const int icol = peek().col;
      Val inner = expr();
      expect("]");
      if (p < 0) failAt("mu^p requires p >= 0", icol);
      if (inner.isEl) {
        try {
          return element(c_.mu(p, inner.el));
        } catch (const std::invalid_argument& e) {
          failAt(e.what(), icol);
        }
      }
      std::vector<Term> ts;
      for (const auto& [m, c] : inner.poly) {
        if (c.isZero()) continue;
        const int diff = p - m.degree();
        if (diff < 0 || diff % 2 != 0) failAt("mu^" + std::to_string(p) + " argument has incompatible degree", icol);
        ts.push_back({diff / 2, m, c});
      }
      return element(Element(p, std::move(ts)));
    }
    // variables
    std::string name = t.text;
    bool bar = false;
    std::string rest;
    if (name.rfind("zb", 0) == 0) {
      bar = true;
      rest = name.substr(2);
    } else if (name[0] == 'z') {
      rest = name.substr(1);
    } else {
      failAt("unknown identifier '" + name + "'", t.col);
    }
    int j = 1;
    if (!rest.empty()) {
      if (!std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        failAt("unknown identifier '" + name + "'", t.col);
      j = std::stoi(rest);
    }
    if (j < 1 || j > c_.n()) failAt("variable index out of range in '" + name + "'", t.col);
    return plain(c_.var(bar ? c_.n() + j - 1 : j - 1), Gq(1));
  }

  const ContactAlgebra& c_;
  int line_;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parseElement(const ContactAlgebra& c, const std::string& text, int line) {
  return Parser(c, text, line).parseTop(std::nullopt);
}

Element parseElement(const ContactAlgebra& c, const std::string& text, int degree, int line) {
  return Parser(c, text, line).parseTop(degree);
}

}  // namespace crcore
