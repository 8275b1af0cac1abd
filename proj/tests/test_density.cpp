#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "superprob/density.hpp"
#include "superprob/errors.hpp"
#include "test_support.hpp"

using namespace superprob;
using testsup::cards;
using testsup::code_of;
using testsup::coin;
using testsup::from_rows;
using testsup::labelled;
using testsup::max_abs_diff;

TEST_CASE("ket_of_event amplitudes") {
  const auto fair = coin();
  const StateVector full = ket_of_event(Event::full(fair));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(full.amplitude(0) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(full.amplitude(1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));

  const auto space = cards();
  const StateVector single = ket_of_event(Event::singleton(space, 0));
  CHECK(single.amplitude(0) == 1.0);
  CHECK(single.amplitude(1) == 0.0);

  const StateVector red = ket_of_event(labelled(space, {"diamond", "heart"}));
  CHECK(red.amplitude(0) == 0.0);
  CHECK(red.amplitude(1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(red.amplitude(2) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(red.amplitude(3) == 0.0);

  const OutcomeSpace with_zero({"a", "b"}, {1.0, 0.0});
  CHECK(code_of([&] { ket_of_event(labelled(with_zero, {"b"})); }) == errc::conditioning_on_null);
}

TEST_CASE("rho_delta diagonals") {
  const auto fair = coin();
  const DensityMatrix rho = rho_delta(Event::full(fair));
  CHECK(max_abs_diff(rho.entries(), from_rows({{0.5, 0.0}, {0.0, 0.5}})) == 0.0);

  const auto space = cards();
  const DensityMatrix single = rho_delta(Event::singleton(space, 1));
  CHECK(single.entry(1, 1) == 1.0);
  CHECK(is_pure(single));
  CHECK(max_abs_diff(single.entries(), rho_sigma(Event::singleton(space, 1)).entries()) == 0.0);

  const DensityMatrix s3 = rho_delta(Event(space, 0b1011));
  const double third = 1.0 / 3.0;
  CHECK(max_abs_diff(s3.entries(), from_rows({{third, 0, 0, 0},
                                              {0, third, 0, 0},
                                              {0, 0, 0, 0},
                                              {0, 0, 0, third}})) <= 1e-15);
}

TEST_CASE("rho_sigma entries on the card space") {
  const auto space = cards();
  // B1 = {diamond, heart}: four entries of 1/2 on the red block
  const DensityMatrix b1 = rho_sigma(labelled(space, {"diamond", "heart"}));
  CHECK(max_abs_diff(b1.entries(), from_rows({{0, 0, 0, 0},
                                              {0, 0.5, 0.5, 0},
                                              {0, 0.5, 0.5, 0},
                                              {0, 0, 0, 0}})) <= 1e-12);
  CHECK(is_pure(b1));

  // S = {club, diamond, spade}: all entries 1/3 on the support
  const DensityMatrix s3 = rho_sigma(Event(space, 0b1011));
  const double third = 1.0 / 3.0;
  CHECK(max_abs_diff(s3.entries(), from_rows({{third, third, 0, third},
                                              {third, third, 0, third},
                                              {0, 0, 0, 0},
                                              {third, third, 0, third}})) <= 1e-12);
  CHECK(is_pure(s3));
  CHECK(s3.trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rho_partition endpoints and the half-half mixture") {
  const auto space = cards();
  CHECK(max_abs_diff(rho_partition(Partition::discrete(space)).entries(),
                     rho_delta(Event::full(space)).entries()) <= 1e-15);
  CHECK(max_abs_diff(rho_partition(Partition::indiscrete(space)).entries(),
                     rho_sigma(Event::full(space)).entries()) <= 1e-15);

  const Partition color(space, {labelled(space, {"diamond", "heart"}),
                                labelled(space, {"club", "spade"})});
  const DensityMatrix mixed = rho_partition(color);
  CHECK(max_abs_diff(mixed.entries(), from_rows({{0.25, 0, 0, 0.25},
                                                 {0, 0.25, 0.25, 0},
                                                 {0, 0.25, 0.25, 0},
                                                 {0.25, 0, 0, 0.25}})) <= 1e-12);
  CHECK(!is_pure(mixed));
}

TEST_CASE("mix") {
  const auto space = cards();
  const DensityMatrix b1 = rho_sigma(labelled(space, {"diamond", "heart"}));
  const DensityMatrix b2 = rho_sigma(labelled(space, {"club", "spade"}));
  const std::vector<double> half{0.5, 0.5};
  const std::vector<DensityMatrix> parts{b1, b2};
  const DensityMatrix mixed = mix(half, parts);
  CHECK(max_abs_diff(mixed.entries(), from_rows({{0.25, 0, 0, 0.25},
                                                 {0, 0.25, 0.25, 0},
                                                 {0, 0.25, 0.25, 0},
                                                 {0.25, 0, 0, 0.25}})) <= 1e-12);

  // (1, 0) mixing returns the first matrix
  const std::vector<double> degenerate{1.0, 0.0};
  CHECK(max_abs_diff(mix(degenerate, parts).entries(), b1.entries()) == 0.0);

  // half/half of the two coin singletons is rho(Delta U)
  const auto fair = coin();
  const std::vector<DensityMatrix> sides{rho_sigma(Event(fair, 0b01)),
                                         rho_sigma(Event(fair, 0b10))};
  CHECK(max_abs_diff(mix(half, sides).entries(), rho_delta(Event::full(fair)).entries()) <=
        1e-15);

  const std::vector<double> bad{0.5, 0.6};
  CHECK(code_of([&] { mix(bad, parts); }) == errc::normalization);
  const std::vector<DensityMatrix> other{b1, rho_sigma(Event(fair, 0b01))};
  CHECK(code_of([&] { mix(half, other); }) == errc::space_mismatch);
}

TEST_CASE("density matrix validation rejects bad input") {
  const auto fair = coin();
  CHECK(code_of([&] { DensityMatrix(fair, from_rows({{0.9, 0.0}, {0.0, 0.0}})); }) ==
        errc::invalid_matrix);  // trace
  CHECK(code_of([&] { DensityMatrix(fair, from_rows({{0.5, 0.4}, {0.1, 0.5}})); }) ==
        errc::invalid_matrix);  // asymmetric
  CHECK(code_of([&] { DensityMatrix(fair, from_rows({{1.5, 0.0}, {0.0, -0.5}})); }) ==
        errc::invalid_matrix);  // negative eigenvalue
  CHECK(code_of([&] { DensityMatrix(fair, from_rows({{1.0}})); }) == errc::dimension_mismatch);
}

TEST_CASE("is_pure separates superpositions from mixtures") {
  const auto space = cards();
  CHECK(is_pure(rho_sigma(labelled(space, {"diamond", "heart"}))));
  CHECK(is_pure(rho_delta(Event::singleton(space, 2))));
  const Partition color(space, {labelled(space, {"diamond", "heart"}),
                                labelled(space, {"club", "spade"})});
  CHECK(!is_pure(rho_partition(color)));
}

TEST_CASE("randomized: construction invariants") {
  std::mt19937 gen(55107);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = oracle::random_space(gen, 8, true);
    const Event s = oracle::random_positive_event(gen, space);

    const DensityMatrix sigma = rho_sigma(s);
    const DensityMatrix delta = rho_delta(s);

    // formula route equals the constructed route
    CHECK(max_abs_diff(sigma.entries(), oracle::sigma_matrix(space, s.members())) <= 1e-12);
    CHECK(max_abs_diff(delta.entries(), oracle::delta_matrix(space, s.members())) <= 1e-12);

    // identical diagonals, sigma idempotent, delta idempotent iff singleton support
    CHECK(max_abs_diff(Eigen::MatrixXd(sigma.entries().diagonal().asDiagonal()),
                       delta.entries()) <= 1e-15);
    CHECK(sigma.idempotency_defect() <= 1e-9);
    CHECK(is_pure(sigma));

    // trace of the square equals the entrywise square sum
    CHECK(sigma.purity() ==
          doctest::Approx(oracle::purity_by_product(sigma.entries())).epsilon(1e-9));
    CHECK(delta.purity() ==
          doctest::Approx(oracle::purity_by_product(delta.entries())).epsilon(1e-9));

    // partitions: valid density matrices with unit trace and PSD (ctor checks)
    const Partition pi = oracle::random_partition(gen, space);
    const DensityMatrix rho_pi = rho_partition(pi);
    CHECK(rho_pi.trace() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rho_pi.eigenvalues().minCoeff() >= -1e-9);
  }
}

TEST_CASE("rho_delta decomposes as the discrete-partition mixture on S") {
  std::mt19937 gen(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto space = oracle::random_space(gen, 6, false);
    const Event s = oracle::random_positive_event(gen, space);
    const double pr_s = event_probability(s);
    Eigen::MatrixXd acc =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(space.size()),
                              static_cast<Eigen::Index>(space.size()));
    for (std::size_t i : s.indices()) {
      acc += (space.prob(i) / pr_s) * rho_delta(Event::singleton(space, i)).entries();
    }
    CHECK(max_abs_diff(acc, rho_delta(s).entries()) <= 1e-12);
  }
}
