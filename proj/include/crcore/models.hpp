// Models of a core: graded subalgebras of c checked against the model axioms, matrix
// presentations embedded by prolongation, the builtin registry, and the uniqueness
// search for the 3-nondegenerate model.
#pragma once

#include "crcore/cralg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crcore {

struct MatrixPresentation {
  std::string name;
  int n = 2, r = 1;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<MatG> mats;
  std::string Elabel = "E", Jlabel = "J";
  /// Images of the negative-degree basis in c_-, in element syntax.
  std::vector<std::pair<std::string, std::string>> identification;

  int indexOf(const std::string& label) const;
};

struct ModelCandidate {
  std::string name;
  std::string kind;  // "matrix" or "contact"
  ContactPtr c;
  GradedSubspace ghat;  // complexification, degrees [-2, top]
  AbstractCore core;    // declared core
  std::vector<std::pair<std::string, Element>> generators;  // named, for reports
  std::string maximality;  // what the bounded search may claim
  int top() const { return ghat.maxDegree(); }
  std::vector<int> gradedDims() const;
};

struct EmbedResult {
  ModelCandidate model;
  std::vector<Element> images;  // per presentation basis element
  std::vector<std::string> errors;
  int pairsChecked = 0;
  bool bracketTableMatches = false;
  bool ok() const { return errors.empty() && bracketTableMatches; }
};
EmbedResult prolongationEmbed(const MatrixPresentation& pres);

struct ModelReport {
  bool closed = false, conjStable = false;
  bool axiom1 = false, axiom2 = false, axiom3 = false, axiom4 = false;
  bool propertyJ = false;
  std::vector<std::string> failures;
  bool pass() const { return closed && conjStable && axiom1 && axiom2 && axiom3 && axiom4; }
};
ModelReport verifyModel(const ModelCandidate& m, const AbstractCore& core);

/// q^p = ghat^p cap u^p.
CRAlgebraPair modelToCRAlgebra(const ModelCandidate& m);
/// Freeman terms predicted for a model: q_q = sum_{p >= q} q^p + sum_{0 <= p < q} (q^p cap qbar^p).
std::vector<GradedSubspace> predictedFreeman(const CRAlgebraPair& pair, int terms);

/// Complex stabilizer {A in V : [A, X] in C X, [conj A, X] in C X} for V in degree 0.
SubspaceG lineStabilizer(const ContactAlgebra& c, const SubspaceG& V, const Element& X);

struct RegistryEntry {
  std::string name;
  std::string family;  // "simple", "nonsemisimple", "3-nondegenerate", "regression"
  std::optional<MatrixPresentation> matrix;
  ModelCandidate model;
  std::vector<int> expectedDims;  // graded complex dims from the statement
  int expectedK = 0;
  bool expectPropertyJ = true;
};
std::vector<RegistryEntry> builtinModels();
std::optional<RegistryEntry> builtinModel(const std::string& name);

/// g^p = { Y in c^p : [Y, c^-1] in g^{p-1} } for 1 <= p <= D, starting from g^0.
GradedSubspace transitiveProlongation(const ContactAlgebra& c, const SubspaceG& g0, int D);
/// Levi-nondegenerate model at arbitrary (n, r): the grading of su(r+1, s+1).
ModelCandidate levinondegenerateModel(int n, int r);

// Document loading (JSON-compatible), see README for the schema.
ModelCandidate modelFromJson(const std::string& text);
MatrixPresentation matrixFromJson(const std::string& text);
std::string modelToJson(const ModelCandidate& m);

struct ProlongationReport {
  int D = 0;
  bool extensionFound = false;
  std::vector<int> modelDims, candidateDims;  // degrees 1..D
  GradedSubspace candidate;  // largest compatible space, degrees -2..D
  std::string statement;
};
/// Largest graded extension in degrees 1..D with the same nonpositive part, compatible with
/// the axioms (iii)/(iv) for the same core.
ProlongationReport boundedProlongationCheck(const ModelCandidate& m, int D);

struct Search3Result {
  bool ok = false;
  // step 1: Borel subalgebras b_alpha = <E, z^2 + alpha z zb, zb^2 + conj(alpha) z zb>
  std::string borelCondition;
  bool borelConditionIsUnitCircle = false;
  int gridPoints = 0;
  bool borelGridOk = false;
  bool thetaReduction = false;
  // step 2
  int gtilde1Dim = 0;
  bool gtilde1Basis = false;  // spanned by N, Nbar, V, W
  std::string betaConstraint;
  Gq betaOverAlpha;
  bool betaConstraintMatches = false;  // 2 beta = 5 i alpha
  std::vector<std::string> nonlinearSystem;
  bool systemMatchesStatement = false;
  bool uniqueSolutionZero = false;
  bool inconsistentAtOne = false;
  // step 3
  int step3FamilyDim = 0;
  Gq step3Determinant;
  bool gtilde2Trivial = false;
  ModelCandidate model;
  bool modelMatchesBuiltin = false;
  std::vector<std::string> log;
};
/// Requires maxDegree >= 2 (throws std::invalid_argument otherwise).
Search3Result search3NondegModels(int maxDegree);

}  // namespace crcore
