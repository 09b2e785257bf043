#pragma once

// JSON file formats for the command-line tool: instances, reports, matrices.

#include "hermex/extremal.hpp"
#include "hermex/instance.hpp"
#include "hermex/oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hermex::io {

using json = nlohmann::ordered_json;

/// An instance file after parsing. Exactly one of the two instances is
/// meaningful, picked by `exact`.
struct LoadedInstance {
  bool exact = true;
  Instance<Gaussian> ex;
  Instance<Complex> fl;
  Kind kind() const { return exact ? ex.kind : fl.kind; }
};

/// Throws InputError with a line/column (syntax) or field path (content).
LoadedInstance parse_instance(const std::string& text);
LoadedInstance read_instance_file(const std::string& path);

json to_json(const ExactMatrix& m);
json to_json(const FloatMatrix& m);
json to_json(const Instance<Gaussian>& in);
json to_json(const Instance<Complex>& in);

json to_json(const ExtremalSummary& s);
ExtremalSummary summary_from_json(const json& j, const std::string& where);

json to_json(const Condition& c);
Condition condition_from_json(const json& j, const std::string& where);

json to_json(const Decision& d);
Decision decision_from_json(const json& j, const std::string& where);

/// One objective of an analysis: its summary and decisions.
struct ObjectiveReport {
  std::string name;
  ExtremalSummary summary;
  std::vector<Decision> decisions;
};

/// What `analyze` writes. The top-level "summary" / "decisions" mirror the
/// first objective so single-objective consumers need not dig.
struct Report {
  std::string kind;
  std::string backend;  // exact | float
  double rank_tol = 0;
  double inertia_tol = 0;
  std::string status;  // ok | premise_violated
  std::string message;
  std::vector<ObjectiveReport> objectives;
  std::vector<Condition> premises;
};

json to_json(const Report& r);
Report report_from_json(const json& j);
Report read_report_file(const std::string& path);

/// Indented plain-text rendering of any report document; every number in the
/// JSON appears verbatim.
std::string render_text(const json& j);

}  // namespace hermex::io
