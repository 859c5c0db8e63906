// crcore: command-line front end for the contact-algebra engine, models and core tables.
#include "checks/acceptance_checks.hpp"
#include "crcore/classify7.hpp"
#include "crcore/cralg.hpp"
#include "crcore/models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace crcore;
using nlohmann::json;

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  std::string sgn;
  int maxDegree = 3;
  std::string format = "json";
  std::string out;
};

std::pair<int, int> signature(const Options& o, int n) {
  if (o.sgn.empty()) return {n, n};
  const auto comma = o.sgn.find(',');
  if (comma == std::string::npos) throw BadInput("--sgn expects r,s");
  int r = 0, s = 0;
  try {
    r = std::stoi(o.sgn.substr(0, comma));
    s = std::stoi(o.sgn.substr(comma + 1));
  } catch (const std::exception&) {
    throw BadInput("--sgn expects r,s");
  }
  if (r < 0 || s < 0 || r + s < 1) throw BadInput("invalid signature " + o.sgn);
  return {r + s, r};
}

ContactPtr context(const Options& o) {
  auto [n, r] = signature(o, o.n);
  return std::make_shared<ContactAlgebra>(n, r);
}

// Markdown is derived from the JSON report.
void markdown(std::ostream& os, const json& j, int depth = 0) {
  const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << indent << "- **" << k << "**: " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << indent << "- **" << k << "**:\n";
        markdown(os, v, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << indent << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << indent << "-\n";
        markdown(os, v, depth + 1);
      }
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

void emit(const Options& o, const json& j, const std::string& md = "") {
  std::ostringstream os;
  if (o.format == "markdown") {
    if (md.empty()) markdown(os, j);
    else os << md;
  } else {
    os << j.dump(2) << "\n";
  }
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw BadInput("cannot write " + o.out);
    f << os.str();
  }
}

std::string readFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw BadInput("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json coreJson(const ContactAlgebra& c, const AbstractCore& core) {
  json j = json::object();
  for (int p = 0; p <= core.height(); ++p) {
    json g = json::array();
    for (const auto& x : core.generators(p)) g.push_back(c.toString(x));
    j[std::to_string(p)] = g;
  }
  return j;
}

int cmdBracket(const Options& o, const std::string& expr) {
  auto c = context(o);
  Element x = parseElement(*c, expr);
  emit(o, {{"input", expr}, {"degree", x.degree()}, {"value", c->toString(x)}});
  return 0;
}

int cmdContactTable(const Options& o) {
  auto c = context(o);
  if (o.maxDegree < 2) throw BadInput("--max-degree must be at least 2");
  json basis = json::object(), table = json::array();
  std::vector<Element> all;
  for (int p = -2; p <= o.maxDegree; ++p) {
    json b = json::array();
    for (int k = 0; k < c->dim(p); ++k) {
      all.push_back(c->basisElement(p, k));
      b.push_back(c->toString(all.back()));
    }
    basis[std::to_string(p)] = b;
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (all[a].degree() + all[b].degree() > o.maxDegree) continue;
      Element v = c->bracket(all[a], all[b]);
      if (!v.isZero()) table.push_back({c->toString(all[a]), c->toString(all[b]), c->toString(v)});
    }
  emit(o, {{"n", c->n()},
           {"sgn", {c->r(), c->n() - c->r()}},
           {"max_degree", o.maxDegree},
           {"basis", basis},
           {"brackets", table}});
  return 0;
}

json freemanJson(const FreemanChain& ch) {
  return {{"dims", ch.dims()}, {"k", ch.k}, {"status", toString(ch.status)}};
}

int cmdUniversal(const Options& o) {
  auto c = context(o);
  if (o.maxDegree < 2) throw BadInput("--max-degree must be at least 2");
  auto pair = buildUniversal(c, o.maxDegree);
  auto chain = freemanSequence(pair);
  auto pred = predictedFreeman(pair, static_cast<int>(chain.terms.size()));
  bool matches = pred.size() == chain.terms.size();
  for (std::size_t i = 0; matches && i < pred.size(); ++i) matches = pred[i] == chain.terms[i];
  auto ex = extractCore(pair, chain);
  json u = json::object();
  for (int p = -2; p <= o.maxDegree; ++p) u[std::to_string(p)] = pair.q.dim(p);
  json core = json::object();
  for (const auto& [p, U] : ex.core.m10) core[std::to_string(p)] = U.dim();
  emit(o, {{"n", c->n()},
           {"sgn", {c->r(), c->n() - c->r()}},
           {"max_degree", o.maxDegree},
           {"u_dims", u},
           {"freeman", freemanJson(chain)},
           {"freeman_matches_formula", matches},
           {"core_ok", ex.ok},
           {"core_dims_10", core}});
  return matches && ex.ok ? 0 : 1;
}

int cmdClassify(const Options& o) {
  if (o.sgn.empty()) throw BadInput("classify needs --sgn 2,0 or --sgn 1,1");
  auto [n, r] = signature(o, 2);
  if (n != 2 || r == 0) throw BadInput("classify supports --sgn 2,0 and --sgn 1,1");
  const auto rows = enumerateTable(r);
  json j = json::parse(tableJson(rows));
  int admissible = 0;
  bool verified = true;
  for (const auto& row : rows) {
    admissible += row.admissible;
    verified = verified && row.verified;
  }
  json doc = {{"sgn", o.sgn}, {"rows", j}, {"admissible", admissible}, {"verified", verified}};
  emit(o, doc, tableMarkdown(rows) + "\nadmissible: " + std::to_string(admissible) + "\n");
  return verified ? 0 : 1;
}

int cmdVerifyModel(const Options& o, const std::string& target, int prolongDegree) {
  ModelCandidate m;
  std::optional<RegistryEntry> entry = builtinModel(target);
  if (entry) {
    m = entry->model;
  } else {
    m = modelFromJson(readFile(target));
  }
  const auto& c = *m.c;
  auto rep = verifyModel(m, m.core);
  auto pair = modelToCRAlgebra(m);
  auto chain = freemanSequence(pair);
  auto ex = extractCore(pair, chain);
  const bool coreMatches = ex.ok && ex.core == m.core;
  json j = {{"model", m.name},
            {"n", c.n()},
            {"sgn", {c.r(), c.n() - c.r()}},
            {"dim", m.ghat.dim()},
            {"graded_dims", m.gradedDims()},
            {"closed", rep.closed},
            {"conj_stable", rep.conjStable},
            {"axiom_i", rep.axiom1},
            {"axiom_ii", rep.axiom2},
            {"axiom_iii", rep.axiom3},
            {"axiom_iv", rep.axiom4},
            {"property_J", rep.propertyJ},
            {"failures", rep.failures},
            {"freeman", freemanJson(chain)},
            {"core", coreJson(c, m.core)},
            {"extracted_core_matches", coreMatches},
            {"pass", rep.pass() && coreMatches}};
  if (!m.maximality.empty()) j["maximality"] = m.maximality;
  if (entry) {
    j["expected_dims"] = entry->expectedDims;
    j["expected_k"] = entry->expectedK;
  }
  if (prolongDegree > 0) {
    auto pr = boundedProlongationCheck(m, prolongDegree);
    j["prolongation"] = {{"D", pr.D},
                         {"extension_found", pr.extensionFound},
                         {"model_dims", pr.modelDims},
                         {"candidate_dims", pr.candidateDims},
                         {"statement", pr.statement}};
  }
  emit(o, j);
  return rep.pass() && coreMatches ? 0 : 1;
}

int cmdSearch(const Options& o) {
  auto s = search3NondegModels(o.maxDegree);
  json j = {{"borel_condition", s.borelCondition},
            {"borel_condition_is_unit_circle", s.borelConditionIsUnitCircle},
            {"borel_grid_points", s.gridPoints},
            {"borel_grid_ok", s.borelGridOk},
            {"theta_reduction", s.thetaReduction},
            {"gtilde1_dim", s.gtilde1Dim},
            {"gtilde1_basis_N_Nbar_V_W", s.gtilde1Basis},
            {"beta_constraint", s.betaConstraint},
            {"beta_over_alpha", toString(s.betaOverAlpha)},
            {"nonlinear_system", s.nonlinearSystem},
            {"system_matches", s.systemMatchesStatement},
            {"unique_solution_zero", s.uniqueSolutionZero},
            {"inconsistent_at_alpha_1", s.inconsistentAtOne},
            {"step3_family_dim", s.step3FamilyDim},
            {"step3_determinant", toString(s.step3Determinant)},
            {"gtilde2_trivial", s.gtilde2Trivial},
            {"model", json::parse(modelToJson(s.model))},
            {"model_matches_builtin", s.modelMatchesBuiltin},
            {"ok", s.ok}};
  emit(o, j);
  return s.ok ? 0 : 1;
}

int cmdRegress(const Options& o) {
  json lines = json::array();
  bool all = true;
  std::string md;
  for (const auto& r : crchecks::runAll()) {
    lines.push_back({{"criterion", r.id}, {"pass", r.pass}, {"title", r.title}, {"details", r.details}});
    all = all && r.pass;
    md += crchecks::line(r) + "\n";
    for (const auto& d : r.details) md += "    " + d + "\n";
  }
  emit(o, {{"criteria", lines}, {"all_pass", all}}, md);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crcore: contact algebra, CR models and 7-dimensional core tables"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "complex dimension n of c^{-1}")->check(CLI::Range(1, 8));
    sub->add_option("--sgn", o.sgn, "signature r,s");
    sub->add_option("--max-degree", o.maxDegree, "top degree D")->check(CLI::Range(2, 12));
    sub->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--out", o.out, "write the report to PATH");
  };
  std::string expr, target;
  int prolong = 0;
  auto* br = app.add_subcommand("bracket", "evaluate an element expression such as \"[z,zb]\"");
  br->add_option("expr", expr)->required();
  auto* tab = app.add_subcommand("contact-table", "structure constants up to degree D");
  auto* uni = app.add_subcommand("universal", "universal pair (c,u): Freeman chain and core");
  auto* cls = app.add_subcommand("classify", "tables of 7-dimensional cores, --sgn 2,0 or 1,1");
  auto* ver = app.add_subcommand("verify-model", "verify a builtin model (by name) or a JSON document");
  ver->add_option("model", target)->required();
  ver->add_option("--prolong", prolong, "also run the bounded prolongation check up to this degree");
  auto* sea = app.add_subcommand("search-3nondeg", "uniqueness search for the 3-nondegenerate model");
  auto* reg = app.add_subcommand("regress", "run every acceptance check");
  for (auto* s : {br, tab, uni, cls, ver, sea, reg}) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*br) return cmdBracket(o, expr);
    if (*tab) return cmdContactTable(o);
    if (*uni) return cmdUniversal(o);
    if (*cls) return cmdClassify(o);
    if (*ver) return cmdVerifyModel(o, target, prolong);
    if (*sea) return cmdSearch(o);
    if (*reg) return cmdRegress(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "malformed document: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
