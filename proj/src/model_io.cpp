#include "crcore/models.hpp"

#include <json.hpp>

#include <cmath>

namespace crcore {

using nlohmann::json;

namespace {

std::pair<int, int> lineCol(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parseDoc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = lineCol(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON", l, c);
  }
}

// Parses an expression embedded in the document, reporting errors at document coordinates.
Element parseAt(const ContactAlgebra& c, const std::string& doc, const std::string& expr, int degree) {
  try {
    return parseElement(c, expr, degree, 1);
  } catch (const ParseError& e) {
    const std::size_t at = doc.find("\"" + expr + "\"");
    auto [l, col] = lineCol(doc, at == std::string::npos ? 0 : at + 1);
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at "));
    throw ParseError(msg + " in \"" + expr + "\"", l, col + e.column - 1);
  }
}

std::pair<int, int> sgnOf(const json& j) {
  const int n = j.at("n").get<int>();
  int r = n;
  if (j.contains("sgn")) {
    r = j.at("sgn").at(0).get<int>();
    if (r + j.at("sgn").at(1).get<int>() != n) throw std::invalid_argument("sgn does not add up to n");
  }
  return {n, r};
}

AbstractCore coreOf(ContactPtr c, const std::string& doc, const json& j) {
  std::vector<Element> gens;
  for (const auto& g : j) gens.push_back(parseAt(*c, doc, g.at("expr").get<std::string>(), g.at("degree").get<int>()));
  return AbstractCore::fromGenerators(std::move(c), gens);
}

}  // namespace

MatrixPresentation matrixFromJson(const std::string& text) {
  json j = parseDoc(text);
  MatrixPresentation p;
  p.name = j.value("name", "matrix-model");
  std::tie(p.n, p.r) = sgnOf(j);
  for (const auto& b : j.at("basis")) {
    p.labels.push_back(b.at("label").get<std::string>());
    p.degrees.push_back(b.at("degree").get<int>());
    const auto entries = b.at("entries").get<std::vector<std::string>>();
    const auto k = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
    if (k * k != static_cast<Eigen::Index>(entries.size()))
      throw std::invalid_argument("entries of " + p.labels.back() + " do not form a square matrix");
    MatG m(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index cc = 0; cc < k; ++cc) m(r, cc) = parseGq(entries[static_cast<std::size_t>(r * k + cc)]);
    p.mats.push_back(m);
  }
  p.Elabel = j.value("E", "E");
  p.Jlabel = j.value("J", "J");
  for (const auto& [label, expr] : j.at("identification").items()) p.identification.emplace_back(label, expr.get<std::string>());
  return p;
}

ModelCandidate modelFromJson(const std::string& text) {
  json j = parseDoc(text);
  const std::string kind = j.value("kind", "contact");
  ModelCandidate m;
  if (kind == "matrix") {
    auto emb = prolongationEmbed(matrixFromJson(text));
    if (!emb.ok()) {
      std::string msg = "matrix presentation does not embed";
      for (const auto& e : emb.errors) msg += "; " + e;
      throw std::runtime_error(msg);
    }
    m = emb.model;
    if (j.contains("core")) {
      m.core = coreOf(m.c, text, j.at("core"));
    } else {
      auto pair = modelToCRAlgebra(m);
      auto ex = extractCore(pair, freemanSequence(pair));
      if (!ex.ok) throw std::runtime_error("core extraction failed: " + ex.error);
      m.core = ex.core;
    }
  } else if (kind == "contact") {
    auto [n, r] = sgnOf(j);
    auto c = std::make_shared<ContactAlgebra>(n, r);
    m.name = j.value("name", "contact-model");
    m.kind = "contact";
    m.c = c;
    std::vector<Element> all;
    if (j.value("include_negative", true)) {
      all.push_back(c->T());
      for (int k = 0; k < n; ++k) {
        all.push_back(c->z(k));
        all.push_back(c->zb(k));
      }
    }
    if (j.value("include_E", true)) all.push_back(c->E());
    const bool conj = j.value("include_conjugates", true);
    for (const auto& g : j.at("generators")) {
      Element x = parseAt(*c, text, g.at("expr").get<std::string>(), g.at("degree").get<int>());
      m.generators.emplace_back(g.value("name", ""), x);
      all.push_back(x);
      if (conj) all.push_back(c->conjugate(x));
    }
    m.ghat = gradedSpan(*c, all);
    m.core = j.contains("core") ? coreOf(c, text, j.at("core")) : AbstractCore::heisenberg(c);
  } else {
    throw std::invalid_argument("unknown model kind '" + kind + "'");
  }
  m.maximality = j.value("maximality", m.maximality);
  return m;
}

std::string modelToJson(const ModelCandidate& m) {
  const auto& c = *m.c;
  json j;
  j["kind"] = "contact";
  j["name"] = m.name;
  j["n"] = c.n();
  j["sgn"] = {c.r(), c.n() - c.r()};
  j["include_negative"] = true;
  j["include_E"] = true;
  j["include_conjugates"] = false;
  json gens = json::array();
  for (int p = 0; p <= m.top(); ++p)
    for (const auto& x : elementsOf(c, p, m.ghat.at(c, p))) gens.push_back({{"degree", p}, {"expr", c.toString(x)}});
  j["generators"] = gens;
  json core = json::array();
  for (int p = 0; p <= m.core.height(); ++p)
    for (const auto& x : m.core.generators(p)) core.push_back({{"degree", p}, {"expr", c.toString(x)}});
  j["core"] = core;
  if (!m.maximality.empty()) j["maximality"] = m.maximality;
  return j.dump(2);
}

}  // namespace crcore
