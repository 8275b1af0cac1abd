#include <doctest.h>

#include <string>

#include "superprob/errors.hpp"
#include "superprob/scenario.hpp"
#include "test_support.hpp"

using namespace superprob;
using testsup::code_of;

namespace {
const std::string kScenarioDir = SUPERPROB_SCENARIO_DIR;

const char* kMinimal = R"({
  "space": {"labels": ["a", "b"], "probs": [0.5, 0.5]}
})";

const char* kCoinish = R"({
  "space": {"labels": ["H", "T"], "probs": [0.5, 0.5]},
  "events": {"U": ["H", "T"], "heads": ["H"]},
  "partitions": {"sides": [["H"], ["T"]]},
  "variables": {"indicator": {"H": 1, "T": 0}},
  "steps": [
    {"op": "rho_sigma", "event": "U", "id": "rho"},
    {"op": "prob_given", "event": "heads", "state": "rho"}
  ]
})";
}  // namespace

TEST_CASE("empty steps produce an empty report") {
  const Scenario scenario = parse_scenario_text(kMinimal);
  CHECK(scenario.steps.empty());
  const RunReport report = run_scenario(scenario);
  CHECK(report.data.at("steps").empty());
}

TEST_CASE("parse and run a small scenario") {
  const Scenario scenario = parse_scenario_text(kCoinish);
  REQUIRE(scenario.steps.size() == 2);
  const RunReport report = run_scenario(scenario);
  CHECK(report.data.at("steps").size() == 2);
  CHECK(report.data.at("steps").at(1).at("result").get<double>() ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("round trip: parse -> serialize -> parse is identity on the model") {
  for (const std::string& path : {kScenarioDir + "/cards.json", kScenarioDir + "/coin.json"}) {
    const Scenario first = load_scenario(path);
    const Scenario second = parse_scenario_text(scenario_json(first).dump());
    CHECK(first == second);
  }
  const Scenario tiny = parse_scenario_text(kCoinish);
  CHECK(tiny == parse_scenario_text(scenario_json(tiny).dump()));
}

TEST_CASE("structured reports are byte-identical across runs") {
  const Scenario scenario = load_scenario(kScenarioDir + "/cards.json");
  const std::string a = run_scenario(scenario).data.dump(2);
  const std::string b = run_scenario(load_scenario(kScenarioDir + "/cards.json")).data.dump(2);
  CHECK(a == b);
}

TEST_CASE("bundled cards scenario carries the worked-example numbers") {
  const RunReport report = run_scenario(load_scenario(kScenarioDir + "/cards.json"));
  const auto& steps = report.data.at("steps");

  // step 2: Pr(black|S) = 2/3, step 5: tr[P rho] = 2/3
  CHECK(steps.at(1).at("result").get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(steps.at(4).at("result").get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // step 6: the Luders matrix
  const auto& luders_matrix = steps.at(5).at("result");
  CHECK(luders_matrix.at(0).at(0).get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(luders_matrix.at(0).at(3).get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(luders_matrix.at(0).at(1).get<double>() == 0.0);
  CHECK(luders_matrix.at(2).at(2).get<double>() == 0.0);

  // step 8: the entropy report
  const auto& entropy = steps.at(7).at("result");
  CHECK(entropy.at("created").get<double>() == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
  CHECK(entropy.at("zeroed_square_sum").get<double>() ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("bundled coin scenario: delta and sigma agree") {
  const RunReport report = run_scenario(load_scenario(kScenarioDir + "/coin.json"));
  const auto& steps = report.data.at("steps");
  CHECK(steps.at(2).at("result").get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(steps.at(3).at("result").get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("parse errors carry positions, unresolved names their own code") {
  CHECK(code_of([] { parse_scenario_text("{ not json"); }) == errc::parse_error);
  CHECK(code_of([] { parse_scenario_text(R"({"space": {"labels": ["a"]}})"); }) ==
        errc::parse_error);

  // referencing an unknown event
  CHECK(code_of([] {
    parse_scenario_text(R"({
      "space": {"labels": ["a"], "probs": [1.0]},
      "steps": [{"op": "rho_sigma", "event": "missing"}]
    })");
  }) == errc::unresolved_name);

  // referencing a state id that was never defined
  CHECK(code_of([] {
    parse_scenario_text(R"({
      "space": {"labels": ["a"], "probs": [1.0]},
      "steps": [{"op": "is_pure", "state": "nope"}]
    })");
  }) == errc::unresolved_name);

  // unknown op and unknown argument
  CHECK(code_of([] {
    parse_scenario_text(R"({
      "space": {"labels": ["a"], "probs": [1.0]},
      "steps": [{"op": "frobnicate"}]
    })");
  }) == errc::parse_error);
  CHECK(code_of([] {
    parse_scenario_text(R"({
      "space": {"labels": ["a"], "probs": [1.0]},
      "events": {"e": ["a"]},
      "steps": [{"op": "rho_sigma", "event": "e", "bogus": 1}]
    })");
  }) == errc::parse_error);

  // bad space data surfaces the library's validation codes
  CHECK(code_of([] {
    parse_scenario_text(R"({"space": {"labels": ["a", "b"], "probs": [0.3, 0.6]}})");
  }) == errc::normalization);
}

TEST_CASE("domain errors during a run carry the step identifier") {
  const char* conditioning = R"({
    "space": {"labels": ["a", "b"], "probs": [1.0, 0.0]},
    "events": {"null_event": ["b"]},
    "steps": [{"op": "rho_sigma", "event": "null_event"}]
  })";
  const Scenario scenario = parse_scenario_text(conditioning);
  try {
    run_scenario(scenario);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::conditioning_on_null);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("every scenario op executes") {
  const char* everything = R"({
    "space": {"labels": ["club", "diamond", "heart", "spade"],
              "probs": [0.25, 0.25, 0.25, 0.25]},
    "events": {"S": ["club", "diamond", "spade"], "black": ["club", "spade"]},
    "partitions": {"color": [["diamond", "heart"], ["club", "spade"]]},
    "variables": {"suit_color": {"club": 1, "diamond": 0, "heart": 0, "spade": 1}},
    "steps": [
      {"op": "event_probability", "event": "S"},
      {"op": "conditional_probability", "event": "black", "given": "S"},
      {"op": "partition_of", "variable": "suit_color", "id": "color2"},
      {"op": "restrict_partition", "partition": "color2", "event": "S", "id": "colorS"},
      {"op": "ket_of_event", "event": "S"},
      {"op": "rho_delta", "event": "S", "id": "d"},
      {"op": "rho_sigma", "event": "S", "id": "s"},
      {"op": "rho_partition", "partition": "colorS", "id": "p"},
      {"op": "mix", "weights": [0.5, 0.5], "states": ["d", "s"], "id": "m"},
      {"op": "is_pure", "state": "m"},
      {"op": "projection", "event": "black"},
      {"op": "prob_given", "event": "black", "state": "s"},
      {"op": "project_superposition", "event": "S", "by": "black", "id": "post"},
      {"op": "luders", "state": "s", "partition": "color", "id": "after"},
      {"op": "measure", "state": "s", "variable": "suit_color"},
      {"op": "expectation", "state": "s", "variable": "suit_color"},
      {"op": "logical_entropy_distribution", "q": [0.25, 0.25, 0.25, 0.25]},
      {"op": "logical_entropy_partition", "partition": "colorS"},
      {"op": "logical_entropy_density", "state": "after"},
      {"op": "entropy_report", "state": "s", "partition": "color"}
    ]
  })";
  const Scenario scenario = parse_scenario_text(everything);
  const RunReport report = run_scenario(scenario);
  const auto& steps = report.data.at("steps");
  REQUIRE(steps.size() == 20);

  CHECK(steps.at(4).at("result").size() == 4);  // the ket has one amplitude per outcome
  CHECK(steps.at(12).at("result").at("probability").get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(steps.at(15).at("result").get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(steps.at(16).at("result").get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(steps.at(17).at("result").get<double>() == doctest::Approx(4.0 / 9.0).epsilon(1e-12));

  // the derived-partition route and the mixture route agree with luders
  const auto& via_partition = steps.at(7).at("result");
  const auto& via_luders = steps.at(13).at("result");
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(via_partition.at(r).at(c).get<double>() ==
            doctest::Approx(via_luders.at(r).at(c).get<double>()).epsilon(1e-12));
    }
  }

  const Scenario reparsed = parse_scenario_text(scenario_json(scenario).dump());
  CHECK(scenario == reparsed);
}

TEST_CASE("qmsets demo report") {
  const RunReport two = run_qmsets_demo(2);
  CHECK(two.data.at("unordered_bases").get<int>() == 3);
  CHECK(two.data.at("bases").size() == 3);
  CHECK(two.data.at("ket_table").at("rows").size() == 3);
  CHECK(two.data.at("distinguishability").at("superposition_prob").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.data.at("distinguishability").at("mixture_prob").get<double>() ==
        doctest::Approx(0.25).epsilon(1e-12));

  const RunReport one = run_qmsets_demo(1);
  CHECK(one.data.at("unordered_bases").get<int>() == 1);
  CHECK(one.data.at("ket_table").at("rows").size() == 1);

  const RunReport three = run_qmsets_demo(3);
  CHECK(three.data.at("unordered_bases").get<int>() == 28);
  CHECK(three.data.at("bases").size() == 28);

  CHECK(code_of([] { run_qmsets_demo(5); }) == errc::cap_exceeded);
}
