#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncdiff/lab/json.hpp"

namespace ncdiff::lab {

/// What a check expects to see.
enum class Expect {
  equality,          ///< two spaces or values coincide
  inclusion,         ///< one space lies in another
  dimension,         ///< a computed dimension matches
  holds,             ///< an identity holds on every basis instance
  witness_required,  ///< a counterexample must be found
  witness_or_negative,  ///< counterexample, or an exhaustive negative with the search logged
};
const char* to_string(Expect e);

/// Result of running one check body.
struct Outcome {
  bool met = false;
  /// "witness" and "negative" are recorded outcomes, not failures.
  std::string status;
  json data = json::object();

  static Outcome pass(json data = json::object()) { return {true, "pass", std::move(data)}; }
  static Outcome fail(json data = json::object()) { return {false, "fail", std::move(data)}; }
  static Outcome check(bool ok, json data = json::object()) { return {ok, ok ? "pass" : "fail", std::move(data)}; }
};

struct Check {
  std::string id;
  std::string operation;            ///< library operation the check exercises
  Expect expect = Expect::holds;
  std::vector<std::string> claims;  ///< claim ids from claims()
  std::function<Outcome()> body;
};

struct Scenario {
  std::string id;
  std::string summary;
  std::vector<std::string> inputs;  ///< algebra/module specs, informational
  std::vector<Check> checks;
};

struct CheckResult {
  std::string id;
  std::string operation;
  Expect expect = Expect::holds;
  std::vector<std::string> claims;
  Outcome outcome;
  std::string error;  ///< library error raised by the body, if any
};

struct Environment {
  std::string field = "q";
  std::size_t ce_degree = 4;
  std::size_t graded_ce_degree = 4;
  std::size_t universal_degree = 2;
  std::size_t jet_order = 2;
  std::size_t seed = 20240611;
  json to_json() const;
};

struct Report {
  std::string scenario;
  std::string summary;
  std::vector<std::string> inputs;
  Environment environment;
  std::vector<CheckResult> results;
  bool ok() const;
  json to_json() const;
};

/// Runs checks in declared order. SpecError propagates; any other library
/// error inside a body is recorded as an unmet check.
Report run_scenario(const Scenario& s, const Environment& env = {});

/// Reports of several scenarios as one document.
json suite_json(const std::vector<Report>& reports, const Environment& env);

/// Names accepted in Check::operation.
const std::vector<std::string>& operations();

}  // namespace ncdiff::lab
