#include "crcore/classify7.hpp"

#include <json.hpp>

#include <sstream>

namespace crcore {

namespace {

using V3 = std::array<Rational, 3>;

int sgnOf(const Rational& x) { return sgn(x) > 0 ? 1 : (sgn(x) < 0 ? -1 : 0); }

Rational form(int r, const V3& a, const V3& b) {
  Rational s = 0;
  for (int k = 0; k < 3; ++k) s += formDiag(r, k) * a[k] * b[k];
  return s;
}

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool isNull(const V3& v) { return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0; }

std::pair<V3, V3> reIm(const CoreLineRep& rep) {
  V3 x, y;
  for (int k = 0; k < 3; ++k) {
    x[k] = rep.z[k].re;
    y[k] = rep.z[k].im;
  }
  return {x, y};
}

std::optional<Rational> exactSqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

// Basis of k: so(3) rotations for (2,0); for (1,1) the boosts in the (1,3), (2,3) planes and the rotation L3.
std::array<MatQ, 3> kBasis(int r) {
  std::array<MatQ, 3> g;
  for (auto& m : g) m = zeros<Rational>(3, 3);
  if (r == 2) {
    g[0](1, 2) = -1, g[0](2, 1) = 1;
    g[1](0, 2) = 1, g[1](2, 0) = -1;
  } else {
    g[0](0, 2) = 1, g[0](2, 0) = 1;
    g[1](1, 2) = 1, g[1](2, 1) = 1;
  }
  g[2](0, 1) = -1, g[2](1, 0) = 1;
  return g;
}

Rational principalMinorSum(const MatQ& a) {
  Rational s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) s += a(i, i) * a(j, j) - a(i, j) * a(j, i);
  return s;
}

std::optional<MatQ> inverse3(const MatQ& m) {
  Rational det = determinant<Rational>(m);
  if (sgn(det) == 0) return std::nullopt;
  MatQ inv(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      inv(i, j) = (m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1)) / det;
    }
  return inv;
}

std::string tParameter(const Rational& R, int sign, std::optional<Rational>& t) {
  // ((1 - t^2)/(1 + t^2))^2 = R on t in [0, 1].
  auto s = exactSqrt(R);
  if (!s) {
    std::string out = "((1-t^2)/(1+t^2))^2 = " + toString(R);
    if (sign != 0) out += sign > 0 ? ", t > 0" : ", t < 0";
    return out;
  }
  Rational u = (1 - *s) / (1 + *s);
  if (auto r = exactSqrt(u)) {
    t = sign < 0 ? Rational(-*r) : *r;
    return "t = " + toString(*t);
  }
  std::string out = "t^2 = " + toString(u);
  if (sign != 0) out += sign > 0 ? ", t > 0" : ", t < 0";
  return out;
}

}  // namespace

Rational formDiag(int r, int k) { return (r == 1 && k == 2) ? Rational(-1) : Rational(1); }

CoreLineRep coreLineFromElement(const ContactAlgebra& c, const Element& X) {
  if (c.n() != 2) throw std::invalid_argument("core lines live in n = 2");
  if (X.degree() != 0) throw std::invalid_argument("core line generator must have degree 0");
  Gq a, b, d;
  for (const auto& t : X.terms()) {
    if (t.layer != -1 || t.mono.bidegree(2) != std::pair<int, int>{2, 0}) continue;
    if (t.mono.e[0] == 2) a += t.c;
    else if (t.mono.e[1] == 2) d += t.c;
    else b += t.c;
  }
  CoreLineRep rep;
  rep.r = c.r();
  const Gq i = Gq::I();
  if (c.r() == 2) {
    rep.z = {-(a + d), -(i * (a - d)), i * b};
  } else if (c.r() == 1) {
    rep.z = {a - d, i * (a + d), i * b};
  } else {
    throw std::invalid_argument("signature (0,2) is not normalized; use (2,0)");
  }
  return rep;
}

Element elementFromCoreLine(const ContactAlgebra& c, const CoreLineRep& rep) {
  if (c.n() != 2 || c.r() != rep.r) throw std::invalid_argument("signature mismatch");
  const Gq i = Gq::I(), half(Rational(1, 2));
  Gq a, b, d;
  if (rep.r == 2) {
    // eps1 = -(z1^2+z2^2)/2, eps2 = (i/2)(z1^2-z2^2), eps3 = -i z1 z2
    a = -half * rep.z[0] + half * i * rep.z[1];
    d = -half * rep.z[0] - half * i * rep.z[1];
    b = -i * rep.z[2];
  } else {
    // eps1 = (z1^2-z2^2)/2, eps2 = -(i/2)(z1^2+z2^2), eps3 = -i z1 z2
    a = half * rep.z[0] - half * i * rep.z[1];
    d = -half * rep.z[0] - half * i * rep.z[1];
    b = -i * rep.z[2];
  }
  Monomial m11, m12, m22;
  m11.e[0] = 2;
  m12.e[0] = 1, m12.e[1] = 1;
  m22.e[1] = 2;
  std::map<Monomial, Gq> poly;
  if (!a.isZero()) poly[m11] = a;
  if (!b.isZero()) poly[m12] = b;
  if (!d.isZero()) poly[m22] = d;
  return c.kelem(poly);
}

std::string OrbitInvariants::toString() const {
  std::ostringstream os;
  os << "sgn=" << (r == 2 ? "(2,0)" : "(1,1)") << " |q|^2=" << qq.get_str() << " h=" << h.get_str();
  if (R) os << " R=" << R->get_str();
  if (dependent) os << " dependent causal=" << causal;
  else os << " plane=" << planeType << " orientation=" << orientation;
  return os.str();
}

OrbitInvariants orbitInvariants(const CoreLineRep& rep) {
  auto [x, y] = reIm(rep);
  if (isNull(x) && isNull(y)) throw std::invalid_argument("zero vector has no line");
  const int r = rep.r;
  OrbitInvariants inv;
  inv.r = r;
  const Rational xx = form(r, x, x), yy = form(r, y, y), xy = form(r, x, y);
  const Rational qre = xx - yy, qim = 2 * xy;
  inv.qq = qre * qre + qim * qim;
  inv.h = xx + yy;
  if (sgn(inv.h) != 0) inv.R = Rational(inv.qq / (inv.h * inv.h));
  const V3 n = cross(x, y);
  inv.dependent = isNull(n);
  if (inv.dependent) {
    const V3& v = isNull(x) ? y : x;
    inv.causal = sgnOf(form(r, v, v));
  } else {
    inv.planeType = sgnOf(xx * yy - xy * xy);
    if (r == 1 && inv.planeType >= 0) inv.orientation = sgnOf(n[2]);
  }
  return inv;
}

StabilizerAlgebra stabilizerAlgebra(const CoreLineRep& rep) {
  auto [x, y] = reIm(rep);
  const auto g = kBasis(rep.r);
  // unknowns (a1, a2, a3, lr, li): A x = lr x - li y, A y = li x + lr y
  MatQ sys = zeros<Rational>(6, 5);
  for (int row = 0; row < 3; ++row) {
    for (int k = 0; k < 3; ++k) {
      Rational ax = 0, ay = 0;
      for (int j = 0; j < 3; ++j) {
        ax += g[k](row, j) * x[j];
        ay += g[k](row, j) * y[j];
      }
      sys(row, k) = ax;
      sys(row + 3, k) = ay;
    }
    sys(row, 3) = -x[row];
    sys(row, 4) = y[row];
    sys(row + 3, 3) = -y[row];
    sys(row + 3, 4) = -x[row];
  }
  MatQ ker = kernel<Rational>(sys);
  StabilizerAlgebra out;
  for (Eigen::Index col = 0; col < ker.cols(); ++col) {
    MatQ a = zeros<Rational>(3, 3);
    for (int k = 0; k < 3; ++k) a += ker(k, col) * g[k];
    out.kPart.push_back(a);
  }
  out.realDim = 2 + static_cast<int>(out.kPart.size());
  switch (out.kPart.size()) {
    case 0: out.tag = "C"; break;
    case 1: {
      const int kappa = sgnOf(principalMinorSum(out.kPart[0]));
      out.tag = kappa > 0 ? "C+so2" : (kappa < 0 ? "C+so(1,1)" : "C+R");
      break;
    }
    case 2: {
      MatQ br = out.kPart[0] * out.kPart[1] - out.kPart[1] * out.kPart[0];
      bool abelian = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) abelian = abelian && sgn(br(i, j)) == 0;
      out.tag = abelian ? "C+R^2" : "C+(R⋉R)";
      break;
    }
    default: out.tag = "C+k";
  }
  return out;
}

OrbitLabel canonicalForm(const CoreLineRep& rep) {
  const auto inv = orbitInvariants(rep);
  OrbitLabel l;
  l.r = rep.r;
  auto setT = [&](const Rational& t) {
    l.t = t;
    l.parameter = "t = " + toString(t);
  };
  if (rep.r == 2) {
    l.family = "m_t";
    l.key = inv.dependent ? Rational(1) : *inv.R;
    if (inv.dependent) setT(0);
    else l.parameter = tParameter(l.key, 0, l.t);
  } else if (inv.dependent) {
    if (inv.causal > 0) {
      l.family = "m_t";
      l.key = 1;
      setT(0);
    } else {
      l.family = inv.causal == 0 ? "m_null" : "m_<0";
      l.parameter = "-";
    }
  } else if (inv.planeType > 0) {
    l.family = "m_t";
    l.sign = inv.orientation;
    l.key = *inv.R;
    l.parameter = tParameter(l.key, l.sign, l.t);
  } else if (inv.planeType == 0) {
    l.family = "m_pm";
    l.sign = inv.orientation;
    l.parameter = l.sign > 0 ? "+" : "-";
  } else {
    l.family = "mtilde_t";
    l.sign = sgnOf(inv.h);
    if (l.sign == 0) {
      l.key = 0;
      setT(0);
    } else {
      l.key = 1 / (*inv.R - 1);  // t^2
      if (auto s = exactSqrt(l.key)) setT(l.sign > 0 ? *s : Rational(-*s));
      else l.parameter = "t^2 = " + toString(l.key) + (l.sign > 0 ? ", t > 0" : ", t < 0");
    }
  }
  const auto st = stabilizerAlgebra(rep);
  l.stabilizer = st.tag;
  l.admissible = !st.kPart.empty();
  return l;
}

S1Result s1Action(int r, const Rational& a, const Rational& b, const Rational& t1, const Rational& t2) {
  if (r != 1 && r != 2) throw std::invalid_argument("signature must be (2,0) or (1,1)");
  if (a * a + b * b != 1) throw std::invalid_argument("(a, b) is not on the unit circle");
  S1Result out;
  const Rational D = a * a + (t1 * t1 + t2 * t2) * b * b - 2 * a * b * t1;
  if (sgn(D) == 0) return out;
  out.defined = true;
  out.t1 = (t1 * (a * a - b * b) + (1 - t1 * t1 - t2 * t2) * a * b) / D;
  out.t2 = t2 / D;
  return out;
}

S1Displayed s1ActionDisplayed(int r, const Rational& a, const Rational& b, const Rational& t1, const Rational& t2) {
  if (r != 1 && r != 2) throw std::invalid_argument("signature must be (2,0) or (1,1)");
  if (a * a + b * b != 1) throw std::invalid_argument("(a, b) is not on the unit circle");
  S1Displayed out;
  const Rational sin2 = 2 * a * b, cos2 = a * a - b * b;
  if (r == 2) {
    const Rational D0 = (t1 * b - a) * (t1 * b - a) + (t2 * b) * (t2 * b);
    if (sgn(D0) == 0) return out;
    out.defined = true;
    out.t1 = (Rational(1, 2) * (1 - t1 * t1 - t2 * t2) * sin2 + t1 * cos2) / D0;
    const Rational u = 1 + t1 * t1;
    out.t2sq = (u * u * b * b + t2 * t2 * (t1 * b + a) * (t1 * b + a)) / D0;
  } else {
    const Rational D = a * a + (t1 * t1 + t2 * t2) * b * b - t1 * sin2;
    if (sgn(D) == 0) return out;
    out.defined = true;
    out.t1 = (t1 * cos2 + Rational(1, 2) * (1 - t1 * t1 - t2 * t2) * sin2) / D;
    const Rational t2p = t2 / D;
    out.t2sq = t2p * t2p;
  }
  return out;
}

CoreLineRep actOn(const CoreLineRep& rep, const Gq& c, const MatQ& A) {
  CoreLineRep out;
  out.r = rep.r;
  for (int i = 0; i < 3; ++i) {
    Gq s;
    for (int j = 0; j < 3; ++j) s += Gq(A(i, j)) * rep.z[j];
    out.z[i] = c * s;
  }
  return out;
}

std::optional<MatQ> cayleyElement(int r, const Rational& s1, const Rational& s2, const Rational& s3) {
  const auto g = kBasis(r);
  MatQ S = s1 * g[0] + s2 * g[1] + s3 * g[2];
  MatQ I = identity<Rational>(3);
  auto inv = inverse3(MatQ(I - S));
  if (!inv) return std::nullopt;
  MatQ A = *inv * MatQ(I + S);
  if (r == 1 && sgn(A(2, 2)) <= 0) return std::nullopt;
  return A;
}

namespace {

struct RowSpec {
  std::string family, parameter, printedTag, generatorText;
  bool admissible;
  std::map<std::pair<int, int>, Gq> coeffs;  // (e1 power, e2 power) -> coefficient at the sample point
  std::string expectFamily;
  std::optional<Rational> expectT;
  int expectSign;
  std::string note;
};

Element quadratic(const ContactAlgebra& c, const std::map<std::pair<int, int>, Gq>& co) {
  std::map<Monomial, Gq> poly;
  for (const auto& [pw, v] : co) {
    if (v.isZero()) continue;
    Monomial m;
    m.e[0] = static_cast<std::uint8_t>(pw.first);
    m.e[1] = static_cast<std::uint8_t>(pw.second);
    poly[m] = v;
  }
  return c.kelem(poly);
}

std::vector<RowSpec> specs(int r) {
  using C = std::map<std::pair<int, int>, Gq>;
  const Gq i = Gq::I();
  auto mt = [](const Rational& t, int r) -> C {
    // (2,0): (1+t) e1^2 + (1-t) e2^2; (1,1): (1+t) e1^2 + (t-1) e2^2
    return {{{2, 0}, Gq(1 + t)}, {{0, 2}, r == 2 ? Gq(1 - t) : Gq(t - 1)}};
  };
  std::vector<RowSpec> out;
  const Rational half(1, 2);
  if (r == 2) {
    const std::string g = "(1+t)*z1^2+(1-t)*z2^2";
    out.push_back({"m_t", "t = 0", "C+so2", g, true, mt(0, 2), "m_t", Rational(0), 0, ""});
    out.push_back({"m_t", "t = 1", "C+so2", g, true, mt(1, 2), "m_t", Rational(1), 0, ""});
    out.push_back({"m_t", "0 < t < 1", "C", g, false, mt(half, 2), "m_t", half, 0, "checked at t = 1/2"});
    return out;
  }
  const std::string g = "(1+t)*z1^2+(t-1)*z2^2";
  out.push_back({"m_t", "t = 1", "C+so2", g, true, mt(1, 1), "m_t", Rational(1), 1, ""});
  out.push_back({"m_t", "t = -1", "C+so2", g, true, mt(-1, 1), "m_t", Rational(-1), -1, ""});
  out.push_back({"m_t", "t = 0", "C+so(1,1)", g, true, mt(0, 1), "m_t", Rational(0), 0, ""});
  out.push_back({"m_t", "-1 < t < 1, t != 0", "C", g, false, mt(half, 1), "m_t", half, 1, "checked at t = 1/2"});
  auto mtil = [&](const Rational& t) -> C {
    // e1^2 - e2^2 + 2(t-1) e1 e2 + i((1+t) e1^2 - (1+t) e2^2 - 2 e1 e2)
    return {{{2, 0}, Gq(1, 1 + t)}, {{0, 2}, Gq(-1, -(1 + t))}, {{1, 1}, Gq(2 * (t - 1), -2)}};
  };
  out.push_back({"mtilde_t", "t in R", "C",
                 "z1^2-z2^2+2*(t-1)*z1*z2+i*((1+t)*z1^2-(1+t)*z2^2-2*z1*z2)", false, mtil(half), "mtilde_t", half, 1,
                 "checked at t = 1/2"});
  auto mpm = [&](int t) -> C {
    return {{{2, 0}, Gq(1 + t)}, {{0, 2}, Gq(t - 1)}, {{1, 1}, Gq(0, -2)}};
  };
  const std::string gpm = "(1+t)*z1^2+(t-1)*z2^2-2*i*z1*z2";
  out.push_back({"m_pm", "t = 1", "C", gpm, false, mpm(1), "m_pm", std::nullopt, 1, ""});
  out.push_back({"m_pm", "t = -1", "C", gpm, false, mpm(-1), "m_pm", std::nullopt, -1, ""});
  out.push_back({"m_<0", "-", "C+so2", "z1*z2", true, {{{1, 1}, Gq(1)}}, "m_<0", std::nullopt, 0, ""});
  out.push_back({"m_null", "-", "C+(R⋉R)", "z1^2-z2^2-2*i*z1*z2", true,
                 {{{2, 0}, Gq(1)}, {{0, 2}, Gq(-1)}, {{1, 1}, Gq(0, -2)}}, "m_null", std::nullopt, 0, ""});
  (void)i;
  return out;
}

}  // namespace

std::vector<TableRow> enumerateTable(int r) {
  if (r != 1 && r != 2) throw std::invalid_argument("signature must be (2,0) or (1,1)");
  ContactAlgebra c(2, r);
  std::vector<TableRow> rows;
  for (const auto& s : specs(r)) {
    TableRow row;
    row.r = r;
    row.family = s.family;
    row.parameter = s.parameter;
    row.stabilizer = s.printedTag;
    row.admissible = s.admissible;
    row.note = s.note;
    const Element X = quadratic(c, s.coeffs);
    const bool fixed = s.note.empty();
    row.generator = fixed ? c.toString(X) : s.generatorText;
    const auto l = canonicalForm(coreLineFromElement(c, X));
    row.verified = l.family == s.expectFamily && l.stabilizer == s.printedTag && l.admissible == s.admissible &&
                   (s.family == "m_t" && r == 2 ? true : l.sign == s.expectSign) && l.t == s.expectT;
    rows.push_back(row);
  }
  return rows;
}

std::string tableJson(const std::vector<TableRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"sgn", r.r == 2 ? "(2,0)" : "(1,1)"},
                 {"family", r.family},
                 {"parameter", r.parameter},
                 {"generator", r.generator},
                 {"stabilizer", r.stabilizer},
                 {"admissible", r.admissible},
                 {"verified", r.verified}});
  return j.dump(2);
}

std::string tableMarkdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| sgn | family | parameter | generator | stabilizer | admissible | verified |\n"
     << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << (r.r == 2 ? "(2,0)" : "(1,1)") << " | " << r.family << " | " << r.parameter << " | `" << r.generator
       << "` | " << r.stabilizer << " | " << (r.admissible ? "yes" : "no") << " | " << (r.verified ? "yes" : "no")
       << " |\n";
  return os.str();
}

}  // namespace crcore
