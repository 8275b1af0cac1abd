// superprob: finite probability with superposition events.
//
// Exit codes: 0 success, 1 validation error (arguments, file parsing, name
// resolution), 2 domain error while computing.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "superprob/density.hpp"
#include "superprob/errors.hpp"
#include "superprob/logical_entropy.hpp"
#include "superprob/measurement.hpp"
#include "superprob/scenario.hpp"

namespace sp = superprob;

namespace {

struct ValidationFailure {
  sp::Error error;
};
struct RuntimeFailure {
  sp::Error error;
};

template <class F>
auto validating(F&& f) {
  try {
    return f();
  } catch (const sp::Error& e) {
    throw ValidationFailure{e};
  }
}

template <class F>
auto computing(F&& f) {
  try {
    return f();
  } catch (const sp::Error& e) {
    throw RuntimeFailure{e};
  }
}

struct Options {
  std::string format = "text";
  double tolerance = 1e-9;

  bool structured() const { return format == "structured"; }
};

void emit(const Options& opts, const sp::ordered_json& data, const std::string& text) {
  if (opts.structured()) {
    std::cout << data.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

// State specifiers on the command line: sigma:EVENT, delta:EVENT, or
// partition:NAME, resolved against a scenario file's named objects.
struct StateSpec {
  enum class Kind { sigma, delta, partition } kind;
  std::string name;
};

StateSpec parse_state_spec(const sp::Scenario& scenario, const std::string& expr) {
  const auto colon = expr.find(':');
  if (colon == std::string::npos) {
    sp::fail(sp::errc::parse_error,
             "state must look like sigma:EVENT, delta:EVENT or partition:NAME, got '" + expr + "'");
  }
  const std::string head = expr.substr(0, colon);
  const std::string name = expr.substr(colon + 1);
  StateSpec spec;
  spec.name = name;
  if (head == "sigma") {
    spec.kind = StateSpec::Kind::sigma;
    scenario.event(name);
  } else if (head == "delta") {
    spec.kind = StateSpec::Kind::delta;
    scenario.event(name);
  } else if (head == "partition") {
    spec.kind = StateSpec::Kind::partition;
    scenario.partition(name);
  } else {
    sp::fail(sp::errc::parse_error, "unknown state constructor '" + head + "'");
  }
  return spec;
}

sp::DensityMatrix build_state(const sp::Scenario& scenario, const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::sigma:
      return sp::rho_sigma(scenario.event(spec.name));
    case StateSpec::Kind::delta:
      return sp::rho_delta(scenario.event(spec.name));
    case StateSpec::Kind::partition:
      return sp::rho_partition(scenario.partition(spec.name));
  }
  sp::fail(sp::errc::internal_inconsistency, "unreachable");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Basis specifier: comma-separated vectors as bit strings (coordinate 0
// first), each optionally labelled, e.g. "H'=11,T'=01" or "11,01".
sp::GF2Basis parse_basis_spec(const std::string& spec) {
  std::vector<sp::GF2Vector> vectors;
  std::vector<std::string> labels;
  for (const auto& part : split(spec, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      labels.push_back("v" + std::to_string(vectors.size() + 1));
      vectors.push_back(sp::GF2Vector::from_bit_string(part));
    } else {
      labels.push_back(part.substr(0, eq));
      vectors.push_back(sp::GF2Vector::from_bit_string(part.substr(eq + 1)));
    }
  }
  return sp::GF2Basis(std::move(vectors), std::move(labels));
}

// State specifier for qmsets: "BITS" for a pure ket, or weighted components
// "0.5*10+0.5*01", coordinates relative to the from-basis.
sp::QState parse_qstate_spec(const std::string& spec, const sp::GF2Basis& from) {
  std::vector<std::pair<double, sp::GF2Vector>> components;
  for (const auto& part : split(spec, '+')) {
    const auto star = part.find('*');
    if (star == std::string::npos) {
      components.emplace_back(1.0, sp::GF2Vector::from_bit_string(part));
    } else {
      double weight = 0.0;
      try {
        weight = std::stod(part.substr(0, star));
      } catch (const std::exception&) {
        sp::fail(sp::errc::parse_error, "bad component weight in '" + part + "'");
      }
      components.emplace_back(weight, sp::GF2Vector::from_bit_string(part.substr(star + 1)));
    }
  }
  return sp::QState::from_coords(from, components);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite probability with superposition events"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--tolerance", opts.tolerance,
                 "Tolerance for validation assertions (never affects computed values)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string file;
  std::string event_name;
  std::string given_name;
  std::string partition_name;
  std::string variable_name;
  std::string state_expr;
  std::string from_spec;
  std::string to_spec;
  std::string coords_bits;
  std::string qstate_spec;
  std::string target_labels;
  std::string bases_spec;
  std::size_t dim = 2;
  bool ordered = false;

  // space validate
  auto* space_cmd = app.add_subcommand("space", "Outcome space operations");
  auto* space_validate = space_cmd->add_subcommand("validate", "Validate a scenario file");
  space_validate->add_option("file", file, "Scenario file")->required();
  space_validate->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    sp::ordered_json data{{"valid", true},
                          {"space", sp::space_json(scenario.space)},
                          {"events", scenario.events.size()},
                          {"partitions", scenario.partitions.size()},
                          {"variables", scenario.variables.size()},
                          {"steps", scenario.steps.size()}};
    emit(opts, data,
         "ok: " + std::to_string(scenario.space.size()) + " outcomes, " +
             std::to_string(scenario.events.size()) + " events, " +
             std::to_string(scenario.partitions.size()) + " partitions, " +
             std::to_string(scenario.variables.size()) + " variables, " +
             std::to_string(scenario.steps.size()) + " steps\n");
  });

  // density delta|sigma|partition
  auto* density_cmd = app.add_subcommand("density", "Build density matrices");
  auto add_density_sub = [&](const char* name, const char* help, bool takes_partition) {
    auto* sub = density_cmd->add_subcommand(name, help);
    sub->add_option("--file", file, "Scenario file")->required();
    if (takes_partition) {
      sub->add_option("--partition", partition_name, "Partition name")->required();
    } else {
      sub->add_option("--event", event_name, "Event name")->required();
    }
    return sub;
  };
  auto emit_density = [&](const sp::DensityMatrix& rho) {
    computing([&] { rho.validate(opts.tolerance); });
    emit(opts, sp::matrix_json(rho.entries()), sp::render_matrix(rho.entries()));
  };
  add_density_sub("delta", "Classical event matrix rho(Delta S)", false)->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    validating([&] { return scenario.event(event_name); });
    emit_density(computing([&] { return sp::rho_delta(scenario.event(event_name)); }));
  });
  add_density_sub("sigma", "Superposition event matrix rho(Sigma S)", false)->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    validating([&] { return scenario.event(event_name); });
    emit_density(computing([&] { return sp::rho_sigma(scenario.event(event_name)); }));
  });
  add_density_sub("partition", "Partition mixture matrix rho(pi)", true)->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    validating([&] { return scenario.partition(partition_name); });
    emit_density(computing([&] { return sp::rho_partition(scenario.partition(partition_name)); }));
  });

  // measure prob|luders|expect
  auto* measure_cmd = app.add_subcommand("measure", "Trace-rule probabilities and transformations");
  auto* measure_prob = measure_cmd->add_subcommand("prob", "Pr(T|rho) = tr[P_T rho]");
  measure_prob->add_option("--file", file, "Scenario file")->required();
  measure_prob->add_option("--event", event_name, "Event to test")->required();
  measure_prob->add_option("--state", state_expr, "Conditioning state")->required();
  measure_prob->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    const StateSpec spec = validating([&] { return parse_state_spec(scenario, state_expr); });
    validating([&] { return scenario.event(event_name); });
    const double p = computing([&] {
      return sp::prob_given(scenario.event(event_name), build_state(scenario, spec));
    });
    emit(opts, sp::ordered_json(p), sp::format_number(p));
  });
  auto* measure_luders = measure_cmd->add_subcommand("luders", "Luders mixture operation");
  measure_luders->add_option("--file", file, "Scenario file")->required();
  measure_luders->add_option("--state", state_expr, "State to measure")->required();
  measure_luders->add_option("--partition", partition_name, "Measurement partition")->required();
  measure_luders->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    const StateSpec spec = validating([&] { return parse_state_spec(scenario, state_expr); });
    validating([&] { return scenario.partition(partition_name); });
    const sp::DensityMatrix after = computing([&] {
      return sp::luders(build_state(scenario, spec), scenario.partition(partition_name));
    });
    computing([&] { after.validate(opts.tolerance); });
    emit(opts, sp::matrix_json(after.entries()), sp::render_matrix(after.entries()));
  });
  auto* measure_expect = measure_cmd->add_subcommand("expect", "Expectation tr[O_f rho]");
  measure_expect->add_option("--file", file, "Scenario file")->required();
  measure_expect->add_option("--state", state_expr, "State")->required();
  measure_expect->add_option("--variable", variable_name, "Random variable")->required();
  measure_expect->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    const StateSpec spec = validating([&] { return parse_state_spec(scenario, state_expr); });
    validating([&] { return scenario.variable(variable_name); });
    const double e = computing([&] {
      return sp::expectation(build_state(scenario, spec), scenario.variable(variable_name));
    });
    emit(opts, sp::ordered_json(e), sp::format_number(e));
  });

  // entropy report
  auto* entropy_cmd = app.add_subcommand("entropy", "Logical entropy accounting");
  auto* entropy_report = entropy_cmd->add_subcommand("report", "Measurement entropy report");
  entropy_report->add_option("--file", file, "Scenario file")->required();
  entropy_report->add_option("--state", state_expr, "State before measurement")->required();
  entropy_report->add_option("--partition", partition_name, "Measurement partition")->required();
  entropy_report->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    const StateSpec spec = validating([&] { return parse_state_spec(scenario, state_expr); });
    validating([&] { return scenario.partition(partition_name); });
    const sp::EntropyReport report = computing([&] {
      return sp::measurement_entropy_report(build_state(scenario, spec),
                                            scenario.partition(partition_name));
    });
    emit(opts, sp::entropy_report_json(report), sp::render_entropy_report(report));
  });

  // qmsets count|enumerate|kettable|convert|measure|demo
  auto* qmsets_cmd = app.add_subcommand("qmsets", "The QM/Sets model over Z_2^n");
  auto* q_count = qmsets_cmd->add_subcommand("count", "Count bases by Gauss's formula");
  q_count->add_option("-n,--dimension", dim, "Dimension")->required()->check(CLI::Range(1, 16));
  q_count->add_flag("--ordered", ordered, "Count ordered bases");
  q_count->callback([&] {
    const auto count = computing([&] { return sp::count_bases(dim, ordered); });
    sp::ordered_json data{{"dimension", dim}, {"ordered", ordered}};
    if (count <= 9007199254740992ULL) {  // 2^53: exact as a JSON double
      data["count"] = static_cast<std::uint64_t>(count);
    } else {
      data["count"] = count.str();
    }
    emit(opts, data, count.str());
  });
  auto* q_enum = qmsets_cmd->add_subcommand("enumerate", "List all unordered bases");
  q_enum->add_option("-n,--dimension", dim, "Dimension")->required()->check(CLI::Range(1, 4));
  q_enum->callback([&] {
    const auto bases = computing([&] { return sp::enumerate_bases(dim); });
    sp::ordered_json list = sp::ordered_json::array();
    std::string text;
    for (const auto& basis : bases) {
      sp::ordered_json vectors = sp::ordered_json::array();
      std::string line = "{";
      for (std::size_t i = 0; i < basis.dim(); ++i) {
        vectors.push_back(basis.vectors()[i].bit_string());
        if (i) line += ", ";
        line += basis.vectors()[i].bit_string();
      }
      list.push_back(std::move(vectors));
      text += line + "}\n";
    }
    emit(opts, sp::ordered_json{{"dimension", dim}, {"count", bases.size()}, {"bases", list}},
         text + std::to_string(bases.size()) + " bases\n");
  });
  auto* q_table = qmsets_cmd->add_subcommand("kettable", "Ket table over bases");
  q_table->add_option("-n,--dimension", dim, "Use the demo bases for this dimension")
      ->check(CLI::Range(1, 4));
  q_table->add_option("--bases", bases_spec,
                      "Semicolon-separated basis specs, e.g. \"H=10,T=01;H'=11,T'=01\"");
  q_table->callback([&] {
    std::vector<sp::GF2Basis> bases;
    if (!bases_spec.empty()) {
      bases = validating([&] {
        std::vector<sp::GF2Basis> out;
        for (const auto& one : split(bases_spec, ';')) out.push_back(parse_basis_spec(one));
        for (const auto& basis : out) {
          if (basis.dim() != out.front().dim()) {
            sp::fail(sp::errc::dimension_mismatch, "bases must share one dimension");
          }
        }
        return out;
      });
    } else {
      bases = validating([&] { return sp::demo_bases(dim); });
    }
    const sp::KetTable table = computing([&] { return sp::ket_table(bases); });
    emit(opts, sp::ket_table_json(table), sp::render_ket_table(table));
  });
  auto* q_convert = qmsets_cmd->add_subcommand("convert", "Convert ket coordinates between bases");
  q_convert->add_option("--from", from_spec, "Source basis spec")->required();
  q_convert->add_option("--to", to_spec, "Target basis spec")->required();
  q_convert->add_option("--coords", coords_bits, "Coordinates in the source basis")->required();
  q_convert->callback([&] {
    const sp::GF2Basis from = validating([&] { return parse_basis_spec(from_spec); });
    const sp::GF2Basis to = validating([&] { return parse_basis_spec(to_spec); });
    const sp::GF2Vector coords =
        validating([&] { return sp::GF2Vector::from_bit_string(coords_bits); });
    const auto [c, converted] = computing([&] {
      const sp::GF2Matrix m = sp::conversion_matrix(from, to);
      return std::make_pair(m, sp::convert_ket(coords, m));
    });
    sp::ordered_json data{{"coords", converted.bit_string()},
                          {"labels", to.labels_of(converted)}};
    std::string text = converted.bit_string() + "  {";
    const auto labels = to.labels_of(converted);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) text += ",";
      text += labels[i];
    }
    emit(opts, data, text + "}\n");
  });
  auto* q_measure = qmsets_cmd->add_subcommand("measure", "Measure a state in another basis");
  q_measure->add_option("--from", from_spec, "Basis the state coordinates are written in")
      ->required();
  q_measure->add_option("--to", to_spec, "Basis to measure in")->required();
  q_measure->add_option("--state", qstate_spec, "Pure ket BITS or mixture w*BITS+w*BITS")
      ->required();
  q_measure->add_option("--target", target_labels, "Comma-separated labels of the to-basis")
      ->required();
  q_measure->callback([&] {
    const sp::GF2Basis from = validating([&] { return parse_basis_spec(from_spec); });
    const sp::GF2Basis to = validating([&] { return parse_basis_spec(to_spec); });
    const sp::QState state = validating([&] { return parse_qstate_spec(qstate_spec, from); });
    const auto targets = split(target_labels, ',');
    const double p = computing([&] { return sp::measure_in_basis(state, to, targets); });
    const sp::DensityMatrix rho = computing([&] { return sp::state_density_in_basis(state, to); });
    emit(opts,
         sp::ordered_json{{"probability", p}, {"density", sp::matrix_json(rho.entries())}},
         "Pr = " + sp::format_number(p) + "\n" + sp::render_matrix(rho.entries()));
  });
  auto* q_demo = qmsets_cmd->add_subcommand("demo", "Basis counts, ket table, distinguishability");
  q_demo->add_option("-n,--dimension", dim, "Dimension")->required()->check(CLI::Range(1, 4));
  q_demo->callback([&] {
    const sp::RunReport report = computing([&] { return sp::run_qmsets_demo(dim); });
    emit(opts, report.data, report.text);
  });

  // scenario run
  auto* scenario_cmd = app.add_subcommand("scenario", "Scenario files");
  auto* scenario_run = scenario_cmd->add_subcommand("run", "Run a scenario file");
  scenario_run->add_option("file", file, "Scenario file")->required();
  scenario_run->callback([&] {
    const sp::Scenario scenario = validating([&] { return sp::load_scenario(file); });
    const sp::RunReport report = computing([&] { return sp::run_scenario(scenario); });
    emit(opts, report.data, report.text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationFailure& f) {
    std::cerr << "error: " << f.error.what() << "\n";
    return 1;
  } catch (const RuntimeFailure& f) {
    std::cerr << "error: " << f.error.what() << "\n";
    return 2;
  }
  return 0;
}
