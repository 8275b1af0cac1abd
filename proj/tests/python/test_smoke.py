"""Smoke tests for the superprob python module."""

import json
import math
import os

import pytest

import superprob as sp

CARDS = ["club", "diamond", "heart", "spade"]


@pytest.fixture
def card_space():
    return sp.OutcomeSpace.uniform(CARDS)


def test_space_and_events(card_space):
    assert len(card_space) == 4
    assert card_space.index_of("heart") == 2
    s = sp.Event.from_labels(card_space, ["club", "diamond", "spade"])
    assert s.cardinality() == 3
    assert sp.event_probability(s) == pytest.approx(0.75, abs=1e-12)


def test_invalid_space_raises():
    with pytest.raises(sp.Error, match="normalization"):
        sp.OutcomeSpace(["x", "y"], [0.3, 0.6])
    with pytest.raises(sp.Error, match="duplicate_label"):
        sp.OutcomeSpace(["x", "x"], [0.5, 0.5])


def test_card_measurement_numbers(card_space):
    s = sp.Event.from_labels(card_space, ["club", "diamond", "spade"])
    black = sp.Event.from_labels(card_space, ["club", "spade"])
    rho = sp.rho_sigma(s)
    assert sp.is_pure(rho)
    assert rho.entries[0, 1] == pytest.approx(1 / 3, abs=1e-12)
    assert sp.prob_given(black, rho) == pytest.approx(2 / 3, abs=1e-12)

    color = sp.Partition(
        card_space,
        [
            sp.Event.from_labels(card_space, ["diamond", "heart"]),
            sp.Event.from_labels(card_space, ["club", "spade"]),
        ],
    )
    after = sp.luders(rho, color)
    assert after.entries[0, 3] == pytest.approx(1 / 3, abs=1e-12)
    assert after.entries[0, 1] == 0.0

    report = sp.measurement_entropy_report(rho, color)
    assert report.created == pytest.approx(4 / 9, abs=1e-9)
    assert report.zeroed_square_sum == pytest.approx(4 / 9, abs=1e-9)


def test_measure_outcomes(card_space):
    s = sp.Event.from_labels(card_space, ["club", "diamond", "spade"])
    f = sp.RandomVariable(card_space, [1.0, 0.0, 0.0, 1.0])
    outcomes = sp.measure(sp.rho_sigma(s), f)
    assert [o.value for o in outcomes] == [0.0, 1.0]
    assert outcomes[1].probability == pytest.approx(2 / 3, abs=1e-12)
    again = sp.measure(outcomes[1].post_state, f)
    assert len(again) == 1 and again[0].probability == pytest.approx(1.0, abs=1e-9)


def test_conditioning_on_null_raises():
    space = sp.OutcomeSpace(["a", "b"], [1.0, 0.0])
    with pytest.raises(sp.Error, match="conditioning_on_null"):
        sp.rho_sigma(sp.Event.from_labels(space, ["b"]))


def test_qmsets_counts_and_table():
    assert sp.count_bases(2) == 3
    assert sp.count_bases(3, ordered=True) == 168
    # exact big-integer result, far beyond double precision
    expected = 1
    for i in range(16):
        expected *= 2**16 - 2**i
    assert sp.count_bases(16, ordered=True) == expected

    bases = sp.enumerate_bases(3)
    assert len(bases) == 28

    u = sp.GF2Basis([sp.GF2Vector.from_bit_string("10"), sp.GF2Vector.from_bit_string("01")],
                    ["H", "T"])
    u_prime = sp.GF2Basis([sp.GF2Vector.from_bit_string("11"), sp.GF2Vector.from_bit_string("01")],
                          ["H'", "T'"])
    c = sp.conversion_matrix(u, u_prime)
    assert sp.convert_ket(sp.GF2Vector.from_bit_string("11"), c) == \
        sp.GF2Vector.from_bit_string("10")

    u_pp = sp.GF2Basis([sp.GF2Vector.from_bit_string("10"), sp.GF2Vector.from_bit_string("11")],
                       ["H''", "T''"])
    table = sp.ket_table([u, u_prime, u_pp])
    rows = table.rows_as_labels()
    assert rows[0] == [["H", "T"], ["H'"], ["T''"]]
    assert rows[1] == [["H"], ["H'", "T'"], ["H''"]]
    assert rows[2] == [["T"], ["T'"], ["H''", "T''"]]


def test_cross_basis_distinguishability():
    u = sp.GF2Basis([sp.GF2Vector.from_bit_string("10"), sp.GF2Vector.from_bit_string("01")],
                    ["H", "T"])
    u_prime = sp.GF2Basis([sp.GF2Vector.from_bit_string("11"), sp.GF2Vector.from_bit_string("01")],
                          ["H'", "T'"])
    superposition = sp.QState.pure(sp.Ket.from_coords(u, sp.GF2Vector.from_bit_string("11")))
    mixture = sp.QState.from_coords(u, [(0.5, "10"), (0.5, "01")])

    assert sp.measure_in_basis(superposition, u_prime, ["H'"]) == pytest.approx(1.0, abs=1e-12)
    assert sp.measure_in_basis(mixture, u_prime, ["H'"]) == pytest.approx(0.25, abs=1e-12)

    rho = sp.state_density_in_basis(mixture, u_prime)
    assert rho.entries[1, 1] == pytest.approx(0.75, abs=1e-12)


def test_logical_entropy():
    assert sp.logical_entropy_distribution([1 / 3, 2 / 3]) == pytest.approx(4 / 9, abs=1e-12)
    assert sp.logical_entropy_distribution([0.25] * 4) == pytest.approx(0.75, abs=1e-12)


def test_scenario_run_from_file():
    scenario_dir = os.environ.get("SUPERPROB_SCENARIO_DIR")
    if not scenario_dir:
        pytest.skip("SUPERPROB_SCENARIO_DIR not set")
    report = json.loads(sp.run_scenario_file(os.path.join(scenario_dir, "cards.json")))
    results = {step["op"]: step["result"] for step in report["steps"]}
    assert results["conditional_probability"] == pytest.approx(2 / 3, abs=1e-12)
    assert results["entropy_report"]["created"] == pytest.approx(4 / 9, abs=1e-9)


def test_state_vector_norm(card_space):
    ket = sp.ket_of_event(sp.Event.from_labels(card_space, ["diamond", "heart"]))
    assert ket.amplitudes[1] == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert sum(a * a for a in ket.amplitudes) == pytest.approx(1.0, abs=1e-12)
