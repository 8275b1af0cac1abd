#include "superprob/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace superprob {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_json(const Eigen::VectorXd& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

ordered_json space_json(const OutcomeSpace& space) {
  return ordered_json{{"labels", space.labels()}, {"probs", space.probs()}};
}

ordered_json event_json(const Event& event) { return ordered_json(event.labels()); }

ordered_json partition_json(const Partition& pi) {
  ordered_json blocks = ordered_json::array();
  for (const auto& block : pi.blocks()) blocks.push_back(block.labels());
  return blocks;
}

ordered_json variable_json(const RandomVariable& f) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < f.space().size(); ++i) {
    out[f.space().label(i)] = f.value(i);
  }
  return out;
}

ordered_json entropy_report_json(const EntropyReport& report) {
  return ordered_json{{"before", report.before},
                      {"after", report.after},
                      {"created", report.created},
                      {"zeroed_square_sum", report.zeroed_square_sum}};
}

ordered_json outcomes_json(const std::vector<MeasurementOutcome>& outcomes) {
  ordered_json out = ordered_json::array();
  for (const auto& outcome : outcomes) {
    out.push_back(ordered_json{{"value", outcome.value},
                               {"probability", outcome.probability},
                               {"post_state", matrix_json(outcome.post_state.entries())}});
  }
  return out;
}

ordered_json basis_json(const GF2Basis& basis) {
  ordered_json vectors = ordered_json::array();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    vectors.push_back(ordered_json{{"label", basis.labels()[i]},
                                   {"coords", basis.vectors()[i].bit_string()}});
  }
  return vectors;
}

ordered_json ket_table_json(const KetTable& table) {
  ordered_json bases = ordered_json::array();
  for (const auto& basis : table.bases) bases.push_back(basis_json(basis));
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < table.kets.size(); ++r) {
    ordered_json cells = ordered_json::array();
    for (std::size_t b = 0; b < table.bases.size(); ++b) {
      cells.push_back(table.bases[b].labels_of(table.cells[r][b]));
    }
    rows.push_back(std::move(cells));
  }
  return ordered_json{{"bases", bases}, {"rows", rows}};
}

namespace {
std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string braced(const std::vector<std::string>& labels) {
  return "{" + join(labels, ",") + "}";
}
}  // namespace

std::string render_matrix(const Eigen::MatrixXd& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cells[r].push_back(format_number(m(r, c)));
      width = std::max(width, cells[r].back().size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    out += "[ ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      out.append(width - row[c].size() + (c + 1 < row.size() ? 2 : 0), ' ');
    }
    out += " ]\n";
  }
  return out;
}

std::string render_vector(const Eigen::VectorXd& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v(i));
  }
  return out + ")";
}

std::string render_entropy_report(const EntropyReport& report) {
  return "h(before) = " + format_number(report.before) +
         "\nh(after) = " + format_number(report.after) +
         "\ncreated = " + format_number(report.created) +
         "\nzeroed square sum = " + format_number(report.zeroed_square_sum) + "\n";
}

std::string render_outcomes(const std::vector<MeasurementOutcome>& outcomes) {
  std::string out;
  for (const auto& outcome : outcomes) {
    out += "value " + format_number(outcome.value) + "  probability " +
           format_number(outcome.probability) + "\n";
    out += render_matrix(outcome.post_state.entries());
  }
  return out;
}

std::string render_partition(const Partition& pi) {
  std::vector<std::string> blocks;
  for (const auto& block : pi.blocks()) blocks.push_back(braced(block.labels()));
  return "{" + join(blocks, ", ") + "}";
}

std::string render_basis(const GF2Basis& basis) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    parts.push_back(basis.labels()[i] + "=" + basis.vectors()[i].bit_string());
  }
  return join(parts, " ");
}

std::string render_ket_table(const KetTable& table) {
  const std::size_t ncols = table.bases.size();
  std::vector<std::string> headers;
  for (const auto& basis : table.bases) {
    headers.push_back(braced(basis.labels()) + "-basis");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < table.kets.size(); ++r) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < ncols; ++b) {
      row.push_back(braced(table.bases[b].labels_of(table.cells[r][b])));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(ncols);
  for (std::size_t b = 0; b < ncols; ++b) {
    widths[b] = headers[b].size();
    for (const auto& row : rows) widths[b] = std::max(widths[b], row[b].size());
  }
  auto emit_row = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t b = 0; b < ncols; ++b) {
      line += row[b];
      line.append(widths[b] - row[b].size(), ' ');
      if (b + 1 < ncols) line += " | ";
    }
    return line + "\n";
  };
  std::string out = emit_row(headers);
  for (const auto& row : rows) out += emit_row(row);
  return out;
}

}  // namespace superprob
