#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superprob/event.hpp"
#include "superprob/outcome_space.hpp"
#include "superprob/partition.hpp"
#include "superprob/random_variable.hpp"
#include "superprob/serialize.hpp"

namespace superprob {

/// One operation invocation from a scenario file: the op name, an optional
/// id later steps may reference, and the remaining keys as named arguments.
struct ScenarioStep {
  std::string op;
  std::optional<std::string> id;
  ordered_json args;

  bool operator==(const ScenarioStep& other) const = default;
};

/// The parsed data model of a scenario file: a space, named events,
/// partitions and variables over it, and an ordered list of steps. Parsing
/// validates every name (including step references) up front.
struct Scenario {
  OutcomeSpace space;
  std::vector<std::pair<std::string, Event>> events;
  std::vector<std::pair<std::string, Partition>> partitions;
  std::vector<std::pair<std::string, RandomVariable>> variables;
  std::vector<ScenarioStep> steps;

  const Event& event(const std::string& name) const;
  const Partition& partition(const std::string& name) const;
  const RandomVariable& variable(const std::string& name) const;

  bool operator==(const Scenario& other) const;
};

Scenario parse_scenario(const ordered_json& j);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Inverse of parse_scenario: parse(scenario_json(s)) == s.
ordered_json scenario_json(const Scenario& scenario);

/// Ordered outputs of a scenario run, in structured and rendered form. The
/// structured form is deterministic: the same file yields identical bytes.
struct RunReport {
  ordered_json data;
  std::string text;
};

RunReport run_scenario(const Scenario& scenario);

/// The bases the QM/Sets demo and default ket tables are built over:
/// n = 1 the standard basis; n = 2 all three bases of Z_2^2, labelled
/// U = {H, T}, U' with {H'} = {H, T} and {T'} = {T}, and U'' with
/// {H''} = {H} and {T''} = {H, T}; n = 3 or 4 the standard basis plus the
/// first non-standard basis in canonical enumeration order.
std::vector<GF2Basis> demo_bases(std::size_t n);

/// Runs the QM/Sets tour for 1 <= n <= 4: basis counts, the full list of
/// unordered bases, a ket table over demo_bases(n), and (n = 2) the
/// superposition-vs-mixture distinguishability computation in the U' frame.
RunReport run_qmsets_demo(std::size_t n);

}  // namespace superprob
