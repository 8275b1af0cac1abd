#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "superprob/density.hpp"
#include "superprob/density_matrix.hpp"
#include "superprob/event.hpp"
#include "superprob/logical_entropy.hpp"
#include "superprob/measurement.hpp"
#include "superprob/partition.hpp"
#include "superprob/qmsets.hpp"
#include "superprob/random_variable.hpp"

namespace superprob {

using ordered_json = nlohmann::ordered_json;

/// Decimal rendering with 15 significant digits (numbers in structured
/// output are raw JSON doubles and round-trip exactly).
std::string format_number(double value);

// Structured (JSON) forms. Matrices are nested arrays, row-major, row and
// column order following the space's label order.
ordered_json matrix_json(const Eigen::MatrixXd& m);
ordered_json vector_json(const Eigen::VectorXd& v);
ordered_json space_json(const OutcomeSpace& space);
ordered_json event_json(const Event& event);
ordered_json partition_json(const Partition& pi);
ordered_json variable_json(const RandomVariable& f);
ordered_json entropy_report_json(const EntropyReport& report);
ordered_json outcomes_json(const std::vector<MeasurementOutcome>& outcomes);
ordered_json ket_table_json(const KetTable& table);
ordered_json basis_json(const GF2Basis& basis);

// Text renderings for the CLI's human-readable mode.
std::string render_matrix(const Eigen::MatrixXd& m);
std::string render_vector(const Eigen::VectorXd& v);
std::string render_entropy_report(const EntropyReport& report);
std::string render_outcomes(const std::vector<MeasurementOutcome>& outcomes);
std::string render_partition(const Partition& pi);
/// Aligned text table: one row per nonzero abstract vector, one column per
/// basis, cells as label subsets.
std::string render_ket_table(const KetTable& table);
std::string render_basis(const GF2Basis& basis);

}  // namespace superprob
