"""Finite probability with superposition events.

Density-matrix representations of classical and superposition events,
trace-rule measurement probabilities, the Luders mixture operation,
logical-entropy accounting, and the QM/Sets model over Z_2^n.
"""

from superprob._core import (
    DensityMatrix,
    EntropyReport,
    Error,
    Event,
    GF2Basis,
    GF2Matrix,
    GF2Vector,
    Ket,
    KetTable,
    MeasurementOutcome,
    OutcomeSpace,
    Partition,
    Projection,
    QState,
    RandomVariable,
    StateVector,
    conditional_probability,
    conversion_matrix,
    convert_ket,
    count_bases,
    enumerate_bases,
    event_probability,
    expectation,
    is_basis,
    is_pure,
    ket_of_event,
    ket_table,
    ket_to_density,
    logical_entropy_density,
    logical_entropy_distribution,
    logical_entropy_partition,
    luders,
    measure,
    measure_in_basis,
    measurement_entropy_report,
    mix,
    observable_matrix,
    partition_of,
    prob_given,
    project_superposition,
    projection,
    restrict_partition,
    rho_delta,
    rho_partition,
    rho_sigma,
    run_qmsets_demo,
    run_scenario_file,
    run_scenario_text,
    state_density_in_basis,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
