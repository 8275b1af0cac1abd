#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "superprob/errors.hpp"
#include "superprob/event.hpp"
#include "superprob/outcome_space.hpp"
#include "superprob/partition.hpp"
#include "superprob/random_variable.hpp"
#include "test_support.hpp"

using namespace superprob;
using testsup::cards;
using testsup::code_of;
using testsup::coin;

TEST_CASE("outcome space construction") {
  const auto fair = coin();
  CHECK(fair.size() == 2);
  CHECK(fair.prob(0) == 0.5);

  const OutcomeSpace singleton({"a"}, {1.0});
  CHECK(singleton.size() == 1);

  CHECK(code_of([] { OutcomeSpace({"x", "y"}, {0.3, 0.6}); }) == errc::normalization);
  CHECK(code_of([] { OutcomeSpace({"x", "x"}, {0.5, 0.5}); }) == errc::duplicate_label);
  CHECK(code_of([] { OutcomeSpace({"x", "y"}, {1.5, -0.5}); }) == errc::negative_probability);
  CHECK(code_of([] { OutcomeSpace({"x"}, {0.5, 0.5}); }) == errc::dimension_mismatch);
  CHECK(code_of([] { OutcomeSpace({}, {}); }) == errc::out_of_range);

  // zero probabilities are allowed
  const OutcomeSpace with_zero({"a", "b"}, {1.0, 0.0});
  CHECK(with_zero.prob(1) == 0.0);
}

TEST_CASE("event construction and membership") {
  const auto space = cards();
  const Event s = Event::from_labels(space, std::vector<std::string>{"club", "diamond", "spade"});
  CHECK(s.cardinality() == 3);
  CHECK(s.contains(space.index_of("club")));
  CHECK(!s.contains(space.index_of("heart")));
  CHECK(s.members() == 0b1011);

  CHECK(code_of([&] { Event(space, 0); }) == errc::empty_event);
  CHECK(code_of([&] { Event(space, 1 << 4); }) == errc::out_of_range);
  CHECK(code_of([&] { Event::from_labels(space, std::vector<std::string>{"joker"}); }) ==
        errc::unknown_label);
}

TEST_CASE("event probability") {
  const auto space = cards();
  const Event s(space, 0b1011);  // club, diamond, spade
  CHECK(event_probability(s) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(event_probability(Event::full(space)) == doctest::Approx(1.0).epsilon(1e-12));

  const auto fair = coin();
  CHECK(event_probability(Event::from_labels(fair, std::vector<std::string>{"H"})) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("conditional probability") {
  const auto space = cards();
  const Event s(space, 0b1011);
  const Event black = Event::from_labels(space, std::vector<std::string>{"club", "spade"});
  CHECK(conditional_probability(black, s) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(conditional_probability(s, s) == doctest::Approx(1.0).epsilon(1e-12));

  const Event heart = Event::from_labels(space, std::vector<std::string>{"heart"});
  CHECK(conditional_probability(heart, s) == 0.0);

  const OutcomeSpace with_zero({"a", "b"}, {1.0, 0.0});
  const Event null_event = Event::from_labels(with_zero, std::vector<std::string>{"b"});
  CHECK(code_of([&] { conditional_probability(null_event, null_event); }) ==
        errc::conditioning_on_null);
}

TEST_CASE("space mismatch is rejected") {
  const Event a(cards(), 0b0011);
  const Event b(coin(), 0b01);
  CHECK(code_of([&] { conditional_probability(a, b); }) == errc::space_mismatch);
}

TEST_CASE("partition_of orders blocks by ascending value") {
  const auto space = cards();
  // suit-color variable: diamond/heart -> 0, club/spade -> 1
  const RandomVariable f(space, {1.0, 0.0, 0.0, 1.0});
  const Partition pi = partition_of(f);
  REQUIRE(pi.block_count() == 2);
  CHECK(pi.blocks()[0].members() == 0b0110);  // f = 0
  CHECK(pi.blocks()[1].members() == 0b1001);  // f = 1
  CHECK(pi.covers_space());

  const Partition constant = partition_of(RandomVariable::constant(space, 3.0));
  CHECK(constant.block_count() == 1);
  CHECK(constant.blocks()[0].is_full());

  const RandomVariable injective(space, {4.0, 2.0, 3.0, 1.0});
  const Partition discrete = partition_of(injective);
  CHECK(discrete.block_count() == 4);
  CHECK(discrete.blocks()[0].members() == 0b1000);  // value 1 at spade
  for (const auto& block : discrete.blocks()) CHECK(block.cardinality() == 1);
}

TEST_CASE("partition invariants") {
  const auto space = cards();
  const Event red = Event::from_labels(space, std::vector<std::string>{"diamond", "heart"});
  const Event black = Event::from_labels(space, std::vector<std::string>{"club", "spade"});
  CHECK(code_of([&] { Partition(space, {red, red}); }) == errc::invalid_partition);

  const Partition color(space, {red, black});
  const auto q = color.block_probabilities();
  CHECK(q[0] + q[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("restrict_partition") {
  const auto space = cards();
  const Event red = Event::from_labels(space, std::vector<std::string>{"diamond", "heart"});
  const Event black = Event::from_labels(space, std::vector<std::string>{"club", "spade"});
  const Partition color(space, {red, black});
  const Event s(space, 0b1011);

  const Partition restricted = restrict_partition(color, s);
  REQUIRE(restricted.block_count() == 2);
  CHECK(restricted.blocks()[0].members() == 0b0010);  // {diamond}
  CHECK(restricted.blocks()[1].members() == 0b1001);  // {club, spade}
  CHECK(restricted.carrier_mask() == s.members());
  CHECK(!restricted.covers_space());

  CHECK(restrict_partition(color, Event::full(space)) == color);

  const Partition fine = restrict_partition(Partition::discrete(space), s);
  CHECK(fine.block_count() == 3);
  for (const auto& block : fine.blocks()) CHECK(block.cardinality() == 1);
}

TEST_CASE("randomized: bitmask probability equals brute force, partitions sum to 1") {
  std::mt19937 gen(20413);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = oracle::random_space(gen, 8, true);
    const std::uint64_t mask = oracle::random_nonempty_mask(gen, space.size());
    const Event s(space, mask);
    CHECK(event_probability(s) == doctest::Approx(oracle::prob_mask(space, mask)).epsilon(1e-12));
    CHECK(event_probability(s) >= 0.0);
    CHECK(event_probability(s) <= 1.0 + 1e-12);

    const Partition pi = oracle::random_partition(gen, space);
    double total = 0.0;
    for (const auto& block : pi.blocks()) total += event_probability(block);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // conditional * Pr(S) recovers Pr(T cap S)
    const Event t(space, oracle::random_nonempty_mask(gen, space.size()));
    const Event cond = oracle::random_positive_event(gen, space);
    const double lhs = conditional_probability(t, cond) * event_probability(cond);
    CHECK(lhs == doctest::Approx(oracle::prob_mask(space, t.members() & cond.members()))
                     .epsilon(1e-12));
  }
}

TEST_CASE("randomized: restriction blocks are disjoint and union to S") {
  std::mt19937 gen(977);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = oracle::random_space(gen, 8, false);
    const Partition pi = oracle::random_partition(gen, space);
    const Event s = oracle::random_positive_event(gen, space);
    const Partition restricted = restrict_partition(pi, s);
    std::uint64_t seen = 0;
    for (const auto& block : restricted.blocks()) {
      CHECK((seen & block.members()) == 0);
      seen |= block.members();
    }
    CHECK(seen == s.members());
  }
}
