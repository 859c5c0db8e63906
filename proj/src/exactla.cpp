#include "crcore/exactla.hpp"

#include <cctype>

namespace crcore {

Gq Gq::inverse() const {
  Rational d = norm2();
  if (sgn(d) == 0) throw std::domain_error("Gq: division by zero");
  return Gq(re / d, -im / d);
}

Gq& Gq::operator*=(const Gq& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string toString(const Rational& q) { return q.get_str(); }

std::string toString(const Gq& x) {
  if (x.isZero()) return "0";
  std::string out;
  if (sgn(x.re) != 0) out = toString(x.re);
  if (sgn(x.im) != 0) {
    Rational a = abs(x.im);
    std::string mag = (a == 1) ? "i" : toString(a) + "*i";
    if (sgn(x.im) < 0)
      out += "-" + mag;
    else
      out += (out.empty() ? "" : "+") + mag;
  }
  return out;
}

Rational parseRational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  if (k == s.size()) throw std::invalid_argument("bad rational '" + s + "'");
  for (std::size_t j = k; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || j == k || j + 1 == s.size()) throw std::invalid_argument("bad rational '" + s + "'");
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {
// One signed summand: rational, "i", "q*i", "q i"-free forms.
Gq parseTerm(const std::string& t) {
  if (t.empty() || t == "+" || t == "-") throw std::invalid_argument("bad Gaussian rational term");
  if (t.back() != 'i') return Gq(parseRational(t));
  std::string m = t.substr(0, t.size() - 1);
  if (!m.empty() && m.back() == '*') m.pop_back();
  Rational c;
  if (m.empty() || m == "+")
    c = 1;
  else if (m == "-")
    c = -1;
  else
    c = parseRational(m);
  return Gq(0, c);
}
}  // namespace

Gq parseGq(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  Gq out;
  std::size_t start = 0;
  for (std::size_t j = 1; j <= s.size(); ++j) {
    if (j == s.size() || ((s[j] == '+' || s[j] == '-') && s[j - 1] != '/')) {
      out += parseTerm(s.substr(start, j - start));
      start = j;
    }
  }
  return out;
}

}  // namespace crcore
