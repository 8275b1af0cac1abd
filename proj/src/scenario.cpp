#include "superprob/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "superprob/density.hpp"
#include "superprob/errors.hpp"
#include "superprob/logical_entropy.hpp"
#include "superprob/measurement.hpp"

namespace superprob {

namespace {

// What a step argument may refer to, and what a step leaves behind for
// later steps to reference.
enum class Kind { scalar, boolean, vector, matrix, state, partition, report, outcomes };

struct ArgSpec {
  const char* name;
  enum class Type { event, partition, variable, state, state_list, number_list } type;
};

struct OpSpec {
  Kind result;
  std::vector<ArgSpec> args;
};

const std::map<std::string, OpSpec>& op_table() {
  using T = ArgSpec::Type;
  static const std::map<std::string, OpSpec> table = {
      {"event_probability", {Kind::scalar, {{"event", T::event}}}},
      {"conditional_probability", {Kind::scalar, {{"event", T::event}, {"given", T::event}}}},
      {"partition_of", {Kind::partition, {{"variable", T::variable}}}},
      {"restrict_partition",
       {Kind::partition, {{"partition", T::partition}, {"event", T::event}}}},
      {"ket_of_event", {Kind::vector, {{"event", T::event}}}},
      {"rho_delta", {Kind::state, {{"event", T::event}}}},
      {"rho_sigma", {Kind::state, {{"event", T::event}}}},
      {"rho_partition", {Kind::state, {{"partition", T::partition}}}},
      {"mix", {Kind::state, {{"weights", T::number_list}, {"states", T::state_list}}}},
      {"is_pure", {Kind::boolean, {{"state", T::state}}}},
      {"projection", {Kind::matrix, {{"event", T::event}}}},
      {"prob_given", {Kind::scalar, {{"event", T::event}, {"state", T::state}}}},
      {"project_superposition", {Kind::state, {{"event", T::event}, {"by", T::event}}}},
      {"luders", {Kind::state, {{"state", T::state}, {"partition", T::partition}}}},
      {"measure", {Kind::outcomes, {{"state", T::state}, {"variable", T::variable}}}},
      {"expectation", {Kind::scalar, {{"state", T::state}, {"variable", T::variable}}}},
      {"logical_entropy_distribution", {Kind::scalar, {{"q", T::number_list}}}},
      {"logical_entropy_partition", {Kind::scalar, {{"partition", T::partition}}}},
      {"logical_entropy_density", {Kind::scalar, {{"state", T::state}}}},
      {"entropy_report", {Kind::report, {{"state", T::state}, {"partition", T::partition}}}},
  };
  return table;
}

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(errc::parse_error, where + ": " + what);
}

const ordered_json& expect(const ordered_json& j, const char* key, ordered_json::value_t type,
                           const std::string& where) {
  if (!j.contains(key)) parse_fail(where, std::string("missing key '") + key + "'");
  const auto& value = j.at(key);
  if (value.type() != type &&
      !(type == ordered_json::value_t::number_float && value.is_number())) {
    parse_fail(where, std::string("key '") + key + "' has the wrong type");
  }
  return value;
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) parse_fail(where, "expected an array of labels");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& item : j) {
    if (!item.is_number()) parse_fail(where, "expected an array of numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

Event parse_event(const OutcomeSpace& space, const ordered_json& j, const std::string& where) {
  const auto labels = string_list(j, where);
  try {
    return Event::from_labels(space, labels);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.message());
  }
}

}  // namespace

const Event& Scenario::event(const std::string& name) const {
  for (const auto& [n, e] : events) {
    if (n == name) return e;
  }
  fail(errc::unresolved_name, "no event named '" + name + "'");
}

const Partition& Scenario::partition(const std::string& name) const {
  for (const auto& [n, p] : partitions) {
    if (n == name) return p;
  }
  fail(errc::unresolved_name, "no partition named '" + name + "'");
}

const RandomVariable& Scenario::variable(const std::string& name) const {
  for (const auto& [n, v] : variables) {
    if (n == name) return v;
  }
  fail(errc::unresolved_name, "no variable named '" + name + "'");
}

bool Scenario::operator==(const Scenario& other) const {
  auto values_equal = [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].first != b[i].first) return false;
      if (!(a[i].second == b[i].second)) return false;
    }
    return true;
  };
  return space == other.space && values_equal(events, other.events) &&
         values_equal(partitions, other.partitions) &&
         values_equal(variables, other.variables) && steps == other.steps;
}

Scenario parse_scenario(const ordered_json& j) {
  if (!j.is_object()) parse_fail("scenario", "top level must be an object");
  const auto& space_j = expect(j, "space", ordered_json::value_t::object, "scenario");
  const auto labels =
      string_list(expect(space_j, "labels", ordered_json::value_t::array, "space"), "space.labels");
  const auto probs =
      number_list(expect(space_j, "probs", ordered_json::value_t::array, "space"), "space.probs");

  static const std::set<std::string> known_keys = {"space", "events", "partitions", "variables",
                                                   "steps"};
  for (const auto& [key, value] : j.items()) {
    if (!known_keys.contains(key)) parse_fail("scenario", "unknown key '" + key + "'");
  }

  OutcomeSpace space(labels, probs);
  Scenario scenario{space, {}, {}, {}, {}};

  std::set<std::string> taken;  // one flat namespace for events/partitions/variables/step ids
  auto claim = [&taken](const std::string& name, const std::string& where) {
    if (name.empty()) parse_fail(where, "names must be non-empty");
    if (!taken.insert(name).second) {
      parse_fail(where, "name '" + name + "' is already defined");
    }
  };

  if (j.contains("events")) {
    const auto& events_j = expect(j, "events", ordered_json::value_t::object, "scenario");
    for (const auto& [name, value] : events_j.items()) {
      claim(name, "events");
      scenario.events.emplace_back(name, parse_event(space, value, "event '" + name + "'"));
    }
  }
  if (j.contains("partitions")) {
    const auto& parts_j = expect(j, "partitions", ordered_json::value_t::object, "scenario");
    for (const auto& [name, value] : parts_j.items()) {
      claim(name, "partitions");
      if (!value.is_array()) parse_fail("partition '" + name + "'", "expected an array of blocks");
      std::vector<Event> blocks;
      for (const auto& block : value) {
        blocks.push_back(parse_event(space, block, "partition '" + name + "'"));
      }
      try {
        scenario.partitions.emplace_back(name, Partition(space, std::move(blocks)));
      } catch (const Error& e) {
        throw Error(e.code(), "partition '" + name + "': " + e.message());
      }
    }
  }
  if (j.contains("variables")) {
    const auto& vars_j = expect(j, "variables", ordered_json::value_t::object, "scenario");
    for (const auto& [name, value] : vars_j.items()) {
      claim(name, "variables");
      if (!value.is_object()) {
        parse_fail("variable '" + name + "'", "expected an object of label -> value");
      }
      std::vector<double> values(space.size(), 0.0);
      std::vector<bool> seen(space.size(), false);
      for (const auto& [label, v] : value.items()) {
        if (!v.is_number()) parse_fail("variable '" + name + "'", "values must be numbers");
        const std::size_t idx = space.index_of(label);
        values[idx] = v.get<double>();
        seen[idx] = true;
      }
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (!seen[i]) {
          parse_fail("variable '" + name + "'", "no value for outcome '" + space.label(i) + "'");
        }
      }
      scenario.variables.emplace_back(name, RandomVariable(space, std::move(values)));
    }
  }

  // Steps: validate ops, argument shapes, and every reference now, tracking
  // what kind of output each id will hold.
  std::map<std::string, Kind> step_kinds;
  auto resolve = [&](const ArgSpec& arg, const ordered_json& value, const std::string& where) {
    using T = ArgSpec::Type;
    auto need_string = [&]() -> std::string {
      if (!value.is_string()) parse_fail(where, std::string("'") + arg.name + "' must be a name");
      return value.get<std::string>();
    };
    switch (arg.type) {
      case T::event: {
        const std::string name = need_string();
        scenario.event(name);  // throws unresolved_name
        break;
      }
      case T::variable: {
        scenario.variable(need_string());
        break;
      }
      case T::partition: {
        const std::string name = need_string();
        const auto it = step_kinds.find(name);
        if (it != step_kinds.end() && it->second == Kind::partition) break;
        scenario.partition(name);
        break;
      }
      case T::state: {
        const std::string name = need_string();
        const auto it = step_kinds.find(name);
        if (it == step_kinds.end() || it->second != Kind::state) {
          fail(errc::unresolved_name, where + ": no state named '" + name + "'");
        }
        break;
      }
      case T::state_list: {
        for (const auto& name : string_list(value, where)) {
          const auto it = step_kinds.find(name);
          if (it == step_kinds.end() || it->second != Kind::state) {
            fail(errc::unresolved_name, where + ": no state named '" + name + "'");
          }
        }
        break;
      }
      case T::number_list: {
        number_list(value, where);
        break;
      }
    }
  };

  if (j.contains("steps")) {
    const auto& steps_j = expect(j, "steps", ordered_json::value_t::array, "scenario");
    std::size_t index = 0;
    for (const auto& step_j : steps_j) {
      ++index;
      const std::string where = "step " + std::to_string(index);
      if (!step_j.is_object()) parse_fail(where, "steps must be objects");
      const std::string op =
          expect(step_j, "op", ordered_json::value_t::string, where).get<std::string>();
      const auto spec_it = op_table().find(op);
      if (spec_it == op_table().end()) parse_fail(where, "unknown op '" + op + "'");
      const OpSpec& spec = spec_it->second;

      ScenarioStep step;
      step.op = op;
      step.args = ordered_json::object();
      for (const auto& [key, value] : step_j.items()) {
        if (key == "op") continue;
        if (key == "id") {
          if (!value.is_string()) parse_fail(where, "'id' must be a string");
          step.id = value.get<std::string>();
          continue;
        }
        const auto arg = std::find_if(spec.args.begin(), spec.args.end(),
                                      [&](const ArgSpec& a) { return key == a.name; });
        if (arg == spec.args.end()) {
          parse_fail(where, "op '" + op + "' takes no argument '" + key + "'");
        }
        step.args[key] = value;
      }
      for (const auto& arg : spec.args) {
        if (!step.args.contains(arg.name)) {
          parse_fail(where, "op '" + op + "' needs argument '" + arg.name + "'");
        }
        resolve(arg, step.args.at(arg.name), where + " (" + op + ")");
      }
      if (step.id) {
        claim(*step.id, where);
        step_kinds[*step.id] = spec.result;
      }
      scenario.steps.push_back(std::move(step));
    }
  }
  return scenario;
}

Scenario parse_scenario_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
  return parse_scenario(j);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

ordered_json scenario_json(const Scenario& scenario) {
  ordered_json j;
  j["space"] = space_json(scenario.space);
  if (!scenario.events.empty()) {
    ordered_json events = ordered_json::object();
    for (const auto& [name, event] : scenario.events) events[name] = event_json(event);
    j["events"] = std::move(events);
  }
  if (!scenario.partitions.empty()) {
    ordered_json parts = ordered_json::object();
    for (const auto& [name, pi] : scenario.partitions) parts[name] = partition_json(pi);
    j["partitions"] = std::move(parts);
  }
  if (!scenario.variables.empty()) {
    ordered_json vars = ordered_json::object();
    for (const auto& [name, f] : scenario.variables) vars[name] = variable_json(f);
    j["variables"] = std::move(vars);
  }
  if (!scenario.steps.empty()) {
    ordered_json steps = ordered_json::array();
    for (const auto& step : scenario.steps) {
      ordered_json step_j;
      step_j["op"] = step.op;
      if (step.id) step_j["id"] = *step.id;
      for (const auto& [key, value] : step.args.items()) step_j[key] = value;
      steps.push_back(std::move(step_j));
    }
    j["steps"] = std::move(steps);
  }
  return j;
}

namespace {

/// Holds referenceable step outputs during a run.
struct Registry {
  const Scenario& scenario;
  std::map<std::string, DensityMatrix> states;
  std::map<std::string, Partition> step_partitions;

  const DensityMatrix& state(const ordered_json& name) const {
    return states.at(name.get<std::string>());
  }
  const Partition& partition(const ordered_json& name) const {
    const auto key = name.get<std::string>();
    const auto it = step_partitions.find(key);
    if (it != step_partitions.end()) return it->second;
    return scenario.partition(key);
  }
  const Event& event(const ordered_json& name) const {
    return scenario.event(name.get<std::string>());
  }
  const RandomVariable& variable(const ordered_json& name) const {
    return scenario.variable(name.get<std::string>());
  }
};

struct StepResult {
  ordered_json data;
  std::string text;
  std::optional<DensityMatrix> state;
  std::optional<Partition> partition;
};

StepResult execute_step(const ScenarioStep& step, Registry& reg) {
  const ordered_json& a = step.args;
  StepResult r;
  if (step.op == "event_probability") {
    const double p = event_probability(reg.event(a.at("event")));
    r.data = p;
    r.text = format_number(p);
  } else if (step.op == "conditional_probability") {
    const double p = conditional_probability(reg.event(a.at("event")), reg.event(a.at("given")));
    r.data = p;
    r.text = format_number(p);
  } else if (step.op == "partition_of") {
    r.partition = partition_of(reg.variable(a.at("variable")));
    r.data = partition_json(*r.partition);
    r.text = render_partition(*r.partition);
  } else if (step.op == "restrict_partition") {
    r.partition = restrict_partition(reg.partition(a.at("partition")), reg.event(a.at("event")));
    r.data = partition_json(*r.partition);
    r.text = render_partition(*r.partition);
  } else if (step.op == "ket_of_event") {
    const StateVector v = ket_of_event(reg.event(a.at("event")));
    r.data = vector_json(v.amplitudes());
    r.text = render_vector(v.amplitudes());
  } else if (step.op == "rho_delta") {
    r.state = rho_delta(reg.event(a.at("event")));
  } else if (step.op == "rho_sigma") {
    r.state = rho_sigma(reg.event(a.at("event")));
  } else if (step.op == "rho_partition") {
    r.state = rho_partition(reg.partition(a.at("partition")));
  } else if (step.op == "mix") {
    std::vector<double> weights;
    for (const auto& w : a.at("weights")) weights.push_back(w.get<double>());
    std::vector<DensityMatrix> parts;
    for (const auto& name : a.at("states")) parts.push_back(reg.state(name));
    r.state = mix(weights, parts);
  } else if (step.op == "is_pure") {
    const bool pure = is_pure(reg.state(a.at("state")));
    r.data = pure;
    r.text = pure ? "true" : "false";
  } else if (step.op == "projection") {
    const Eigen::MatrixXd p = projection(reg.event(a.at("event"))).matrix();
    r.data = matrix_json(p);
    r.text = render_matrix(p);
  } else if (step.op == "prob_given") {
    const double p = prob_given(reg.event(a.at("event")), reg.state(a.at("state")));
    r.data = p;
    r.text = format_number(p);
  } else if (step.op == "project_superposition") {
    const auto [prob, post] =
        project_superposition(reg.event(a.at("event")), reg.event(a.at("by")));
    r.data = ordered_json{{"probability", prob}, {"post_state", matrix_json(post.entries())}};
    r.text = "probability " + format_number(prob) + "\n" + render_matrix(post.entries());
    r.state = post;
  } else if (step.op == "luders") {
    r.state = luders(reg.state(a.at("state")), reg.partition(a.at("partition")));
  } else if (step.op == "measure") {
    const auto outcomes = measure(reg.state(a.at("state")), reg.variable(a.at("variable")));
    r.data = outcomes_json(outcomes);
    r.text = render_outcomes(outcomes);
  } else if (step.op == "expectation") {
    const double e = expectation(reg.state(a.at("state")), reg.variable(a.at("variable")));
    r.data = e;
    r.text = format_number(e);
  } else if (step.op == "logical_entropy_distribution") {
    std::vector<double> q;
    for (const auto& x : a.at("q")) q.push_back(x.get<double>());
    const double h = logical_entropy(std::span<const double>(q));
    r.data = h;
    r.text = format_number(h);
  } else if (step.op == "logical_entropy_partition") {
    const double h = logical_entropy(reg.partition(a.at("partition")));
    r.data = h;
    r.text = format_number(h);
  } else if (step.op == "logical_entropy_density") {
    const double h = logical_entropy(reg.state(a.at("state")));
    r.data = h;
    r.text = format_number(h);
  } else if (step.op == "entropy_report") {
    const EntropyReport report =
        measurement_entropy_report(reg.state(a.at("state")), reg.partition(a.at("partition")));
    r.data = entropy_report_json(report);
    r.text = render_entropy_report(report);
  } else {
    fail(errc::internal_inconsistency, "unhandled op '" + step.op + "'");  // parse rejects these
  }
  if (r.state && r.data.is_null()) {
    r.data = matrix_json(r.state->entries());
    r.text = render_matrix(r.state->entries());
  }
  return r;
}

}  // namespace

RunReport run_scenario(const Scenario& scenario) {
  Registry reg{scenario, {}, {}};
  RunReport report;
  report.data = ordered_json{{"space", space_json(scenario.space)},
                             {"steps", ordered_json::array()}};
  std::string text = "space: " + ordered_json(scenario.space.labels()).dump() + "\n";

  std::size_t index = 0;
  for (const auto& step : scenario.steps) {
    ++index;
    StepResult result;
    try {
      result = execute_step(step, reg);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "step " + std::to_string(index) + " (" + step.op + "): " + e.message());
    }
    if (step.id) {
      if (result.state) reg.states.emplace(*step.id, *result.state);
      if (result.partition) reg.step_partitions.emplace(*step.id, *result.partition);
    }
    ordered_json step_report;
    step_report["index"] = index;
    step_report["op"] = step.op;
    if (step.id) step_report["id"] = *step.id;
    step_report["args"] = step.args;
    step_report["result"] = result.data;
    report.data["steps"].push_back(std::move(step_report));

    text += "\n[" + std::to_string(index) + "] " + step.op;
    if (step.id) text += " -> " + *step.id;
    text += "\n";
    if (!result.text.empty()) {
      text += result.text;
      if (result.text.back() != '\n') text += "\n";
    }
  }
  report.text = std::move(text);
  return report;
}

}  // namespace superprob
