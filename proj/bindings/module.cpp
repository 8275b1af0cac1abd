#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superprob/density.hpp"
#include "superprob/errors.hpp"
#include "superprob/logical_entropy.hpp"
#include "superprob/measurement.hpp"
#include "superprob/qmsets.hpp"
#include "superprob/scenario.hpp"

namespace py = pybind11;
using namespace superprob;

namespace {

py::object big_int(const boost::multiprecision::cpp_int& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

std::vector<std::pair<double, GF2Vector>> component_list(
    const std::vector<std::pair<double, std::string>>& raw) {
  std::vector<std::pair<double, GF2Vector>> out;
  out.reserve(raw.size());
  for (const auto& [w, bits] : raw) out.emplace_back(w, GF2Vector::from_bit_string(bits));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite probability with superposition events: density matrices, "
            "projective measurement, the Luders mixture operation, logical "
            "entropy, and the QM/Sets model over Z_2^n.";

  // Library failures surface as superprob.Error; the message starts with
  // the error-code name (e.g. "space_mismatch: ...").
  py::register_exception<Error>(m, "Error");

  py::class_<OutcomeSpace>(m, "OutcomeSpace")
      .def(py::init<std::vector<std::string>, std::vector<double>>(), py::arg("labels"),
           py::arg("probs"))
      .def_static("uniform", &OutcomeSpace::uniform, py::arg("labels"))
      .def_property_readonly("labels", &OutcomeSpace::labels)
      .def_property_readonly("probs", &OutcomeSpace::probs)
      .def("__len__", &OutcomeSpace::size)
      .def("index_of", &OutcomeSpace::index_of, py::arg("label"))
      .def("__eq__", [](const OutcomeSpace& a, const OutcomeSpace& b) { return a == b; })
      .def("__repr__", [](const OutcomeSpace& s) {
        return "OutcomeSpace(" + std::to_string(s.size()) + " outcomes)";
      });

  py::class_<Event>(m, "Event")
      .def(py::init<OutcomeSpace, std::uint64_t>(), py::arg("space"), py::arg("members"))
      .def_static(
          "from_labels",
          [](const OutcomeSpace& space, const std::vector<std::string>& labels) {
            return Event::from_labels(space, labels);
          },
          py::arg("space"), py::arg("labels"))
      .def_static("full", &Event::full, py::arg("space"))
      .def_static("singleton", &Event::singleton, py::arg("space"), py::arg("index"))
      .def_property_readonly("space", &Event::space)
      .def_property_readonly("members", &Event::members)
      .def_property_readonly("labels", &Event::labels)
      .def("cardinality", &Event::cardinality)
      .def("contains", &Event::contains, py::arg("index"))
      .def("intersect",
           [](const Event& a, const Event& b) -> py::object {
             const auto r = a.intersect(b);
             return r ? py::cast(*r) : py::none();
           })
      .def("__eq__", [](const Event& a, const Event& b) { return a == b; });

  py::class_<Partition>(m, "Partition")
      .def(py::init<OutcomeSpace, std::vector<Event>>(), py::arg("space"), py::arg("blocks"))
      .def_static("discrete", &Partition::discrete, py::arg("space"))
      .def_static("indiscrete", &Partition::indiscrete, py::arg("space"))
      .def_property_readonly("blocks", &Partition::blocks)
      .def_property_readonly("space", &Partition::space)
      .def("block_probabilities", &Partition::block_probabilities)
      .def("covers_space", &Partition::covers_space)
      .def("__len__", &Partition::block_count);

  py::class_<RandomVariable>(m, "RandomVariable")
      .def(py::init<OutcomeSpace, std::vector<double>>(), py::arg("space"), py::arg("values"))
      .def_static("indicator", &RandomVariable::indicator, py::arg("event"))
      .def_static("constant", &RandomVariable::constant, py::arg("space"), py::arg("value"))
      .def_property_readonly("values", &RandomVariable::values)
      .def_property_readonly("space", &RandomVariable::space);

  m.def("event_probability", &event_probability, py::arg("s"));
  m.def("conditional_probability", &conditional_probability, py::arg("t"), py::arg("s"));
  m.def("partition_of", &partition_of, py::arg("f"));
  m.def("restrict_partition", &restrict_partition, py::arg("pi"), py::arg("s"));

  py::class_<StateVector>(m, "StateVector")
      .def_property_readonly("amplitudes", &StateVector::amplitudes)
      .def_property_readonly("space", &StateVector::space)
      .def("outer", &StateVector::outer);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<OutcomeSpace, Eigen::MatrixXd>(), py::arg("space"), py::arg("entries"))
      .def_property_readonly("entries", &DensityMatrix::entries)
      .def_property_readonly("space", &DensityMatrix::space)
      .def("trace", &DensityMatrix::trace)
      .def("purity", &DensityMatrix::purity)
      .def("eigenvalues", &DensityMatrix::eigenvalues)
      .def("validate", &DensityMatrix::validate, py::arg("tolerance"))
      .def("__repr__", [](const DensityMatrix& rho) {
        return "DensityMatrix(" + std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()) +
               ")";
      });

  m.def("ket_of_event", &ket_of_event, py::arg("s"));
  m.def("rho_delta", &rho_delta, py::arg("s"));
  m.def("rho_sigma", &rho_sigma, py::arg("s"));
  m.def("rho_partition", &rho_partition, py::arg("pi"));
  m.def(
      "mix",
      [](const std::vector<double>& weights, const std::vector<DensityMatrix>& parts) {
        return mix(weights, parts);
      },
      py::arg("weights"), py::arg("matrices"));
  m.def("is_pure", &is_pure, py::arg("rho"));

  py::class_<Projection>(m, "Projection")
      .def(py::init<Event>(), py::arg("event"))
      .def_property_readonly("event", &Projection::event)
      .def("matrix", &Projection::matrix);
  m.def("projection", &projection, py::arg("t"));
  m.def("prob_given", &prob_given, py::arg("t"), py::arg("rho"));
  m.def("project_superposition", &project_superposition, py::arg("s"), py::arg("t"));
  m.def("luders", &luders, py::arg("rho"), py::arg("pi"));

  py::class_<MeasurementOutcome>(m, "MeasurementOutcome")
      .def_readonly("value", &MeasurementOutcome::value)
      .def_readonly("probability", &MeasurementOutcome::probability)
      .def_readonly("post_state", &MeasurementOutcome::post_state)
      .def("__repr__", [](const MeasurementOutcome& o) {
        return "MeasurementOutcome(value=" + format_number(o.value) +
               ", probability=" + format_number(o.probability) + ")";
      });
  m.def("measure", &measure, py::arg("rho"), py::arg("f"));
  m.def("expectation", &expectation, py::arg("rho"), py::arg("f"));
  m.def("observable_matrix", &observable_matrix, py::arg("f"));

  m.def(
      "logical_entropy_distribution",
      [](const std::vector<double>& q) { return logical_entropy(std::span<const double>(q)); },
      py::arg("q"));
  m.def("logical_entropy_partition",
        [](const Partition& pi) { return logical_entropy(pi); }, py::arg("pi"));
  m.def("logical_entropy_density",
        [](const DensityMatrix& rho) { return logical_entropy(rho); }, py::arg("rho"));

  py::class_<EntropyReport>(m, "EntropyReport")
      .def_readonly("before", &EntropyReport::before)
      .def_readonly("after", &EntropyReport::after)
      .def_readonly("created", &EntropyReport::created)
      .def_readonly("zeroed_square_sum", &EntropyReport::zeroed_square_sum)
      .def("__repr__", [](const EntropyReport& r) {
        return "EntropyReport(before=" + format_number(r.before) +
               ", after=" + format_number(r.after) + ", created=" + format_number(r.created) +
               ", zeroed_square_sum=" + format_number(r.zeroed_square_sum) + ")";
      });
  m.def("measurement_entropy_report", &measurement_entropy_report, py::arg("rho_before"),
        py::arg("pi"));

  py::class_<GF2Vector>(m, "GF2Vector")
      .def(py::init<std::size_t, std::uint32_t>(), py::arg("dim"), py::arg("bits"))
      .def_static("from_bit_string", &GF2Vector::from_bit_string, py::arg("s"))
      .def_property_readonly("dim", &GF2Vector::dim)
      .def_property_readonly("bits", &GF2Vector::bits)
      .def("bit_string", &GF2Vector::bit_string)
      .def("__add__", [](const GF2Vector& a, const GF2Vector& b) { return a + b; })
      .def("__eq__", [](const GF2Vector& a, const GF2Vector& b) { return a == b; })
      .def("__repr__", [](const GF2Vector& v) { return "GF2Vector('" + v.bit_string() + "')"; });

  py::class_<GF2Matrix>(m, "GF2Matrix")
      .def_static("identity", &GF2Matrix::identity, py::arg("dim"))
      .def_property_readonly("dim", &GF2Matrix::dim)
      .def("at", &GF2Matrix::at, py::arg("row"), py::arg("col"))
      .def("rank", &GF2Matrix::rank)
      .def("inverse",
           [](const GF2Matrix& m_) -> py::object {
             const auto inv = m_.inverse();
             return inv ? py::cast(*inv) : py::none();
           })
      .def("__mul__", [](const GF2Matrix& a, const GF2Matrix& b) { return a * b; })
      .def("__mul__", [](const GF2Matrix& a, const GF2Vector& v) { return a * v; })
      .def("__eq__", [](const GF2Matrix& a, const GF2Matrix& b) { return a == b; })
      .def("__repr__", &GF2Matrix::to_string);

  py::class_<GF2Basis>(m, "GF2Basis")
      .def(py::init<std::vector<GF2Vector>, std::vector<std::string>>(), py::arg("vectors"),
           py::arg("labels"))
      .def(py::init<std::vector<GF2Vector>>(), py::arg("vectors"))
      .def_static("standard", &GF2Basis::standard, py::arg("dim"))
      .def_property_readonly("dim", &GF2Basis::dim)
      .def_property_readonly("vectors", &GF2Basis::vectors)
      .def_property_readonly("labels", &GF2Basis::labels)
      .def("frame", &GF2Basis::frame)
      .def("coords_of", &GF2Basis::coords_of, py::arg("standard"))
      .def("to_standard", &GF2Basis::to_standard, py::arg("coords"))
      .def("labels_of", &GF2Basis::labels_of, py::arg("coords"));

  m.def(
      "is_basis",
      [](const std::vector<GF2Vector>& vectors) { return is_basis(vectors); },
      py::arg("vectors"));
  m.def(
      "count_bases",
      [](std::size_t n, bool ordered) { return big_int(count_bases(n, ordered)); }, py::arg("n"),
      py::arg("ordered") = false);
  m.def("enumerate_bases", &enumerate_bases, py::arg("n"));
  m.def("conversion_matrix", &conversion_matrix, py::arg("from_basis"), py::arg("to_basis"));
  m.def("convert_ket", &convert_ket, py::arg("coords"), py::arg("c"));

  py::class_<Ket>(m, "Ket")
      .def(py::init<GF2Vector>(), py::arg("standard_coords"))
      .def_static("from_coords", &Ket::from_coords, py::arg("basis"), py::arg("coords"))
      .def_property_readonly("standard", &Ket::standard)
      .def("coords_in", &Ket::coords_in, py::arg("basis"));

  py::class_<KetTable>(m, "KetTable")
      .def_readonly("bases", &KetTable::bases)
      .def_readonly("kets", &KetTable::kets)
      .def_readonly("cells", &KetTable::cells)
      .def("render", [](const KetTable& t) { return render_ket_table(t); })
      .def("rows_as_labels", [](const KetTable& t) {
        std::vector<std::vector<std::vector<std::string>>> rows;
        for (std::size_t r = 0; r < t.kets.size(); ++r) {
          std::vector<std::vector<std::string>> row;
          for (std::size_t b = 0; b < t.bases.size(); ++b) {
            row.push_back(t.bases[b].labels_of(t.cells[r][b]));
          }
          rows.push_back(std::move(row));
        }
        return rows;
      });
  m.def(
      "ket_table",
      [](const std::vector<GF2Basis>& bases) { return ket_table(bases); }, py::arg("bases"));

  py::class_<QState>(m, "QState")
      .def(py::init<std::vector<std::pair<double, Ket>>>(), py::arg("components"))
      .def_static("pure", &QState::pure, py::arg("ket"))
      .def_static(
          "from_coords",
          [](const GF2Basis& basis, const std::vector<std::pair<double, std::string>>& comps) {
            const auto parsed = component_list(comps);
            return QState::from_coords(basis, parsed);
          },
          py::arg("basis"), py::arg("components"))
      .def_property_readonly("components", &QState::components)
      .def("is_pure", &QState::is_pure);

  m.def("ket_to_density", &ket_to_density, py::arg("basis"), py::arg("coords"));
  m.def("state_density_in_basis", &state_density_in_basis, py::arg("state"), py::arg("to"));
  m.def(
      "measure_in_basis",
      [](const QState& state, const GF2Basis& to, const std::vector<std::string>& target) {
        return measure_in_basis(state, to, target);
      },
      py::arg("state"), py::arg("to"), py::arg("target"));

  m.def(
      "run_scenario_file",
      [](const std::string& path, const std::string& format) {
        const Scenario scenario = load_scenario(path);
        const RunReport report = run_scenario(scenario);
        return format == "text" ? report.text : report.data.dump(2);
      },
      py::arg("path"), py::arg("format") = "structured",
      "Run a scenario file; returns the report as text or a JSON string.");
  m.def(
      "run_scenario_text",
      [](const std::string& text, const std::string& format) {
        const Scenario scenario = parse_scenario_text(text);
        const RunReport report = run_scenario(scenario);
        return format == "text" ? report.text : report.data.dump(2);
      },
      py::arg("text"), py::arg("format") = "structured",
      "Run a scenario given as a JSON string.");
  m.def(
      "run_qmsets_demo",
      [](std::size_t n, const std::string& format) {
        const RunReport report = run_qmsets_demo(n);
        return format == "text" ? report.text : report.data.dump(2);
      },
      py::arg("n"), py::arg("format") = "structured");

  m.attr("__version__") = "0.1.0";
}
