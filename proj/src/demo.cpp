#include "superprob/errors.hpp"
#include "superprob/measurement.hpp"
#include "superprob/scenario.hpp"

namespace superprob {

std::vector<GF2Basis> demo_bases(std::size_t n) {
  if (n < 1 || n > 4) fail(errc::cap_exceeded, "the QM/Sets demo is capped at n = 4");
  if (n == 1) {
    return {GF2Basis({GF2Vector(1, 1)}, {"u1"})};
  }
  if (n == 2) {
    const GF2Vector h(2, 0b01), t(2, 0b10), ht(2, 0b11);
    return {
        GF2Basis({h, t}, {"H", "T"}),
        GF2Basis({ht, t}, {"H'", "T'"}),
        GF2Basis({h, ht}, {"H''", "T''"}),
    };
  }
  const GF2Basis standard = GF2Basis::standard(n);
  for (const auto& basis : enumerate_bases(n)) {
    if (!basis.same_vectors(standard)) {
      return {standard, basis};
    }
  }
  fail(errc::internal_inconsistency, "no non-standard basis found");
}

RunReport run_qmsets_demo(std::size_t n) {
  if (n < 1 || n > 4) fail(errc::cap_exceeded, "the QM/Sets demo is capped at n = 4");
  RunReport report;
  std::string text;

  const auto ordered = count_bases(n, true);
  const auto unordered = count_bases(n, false);
  report.data["dimension"] = n;
  report.data["ordered_bases"] = static_cast<std::uint64_t>(ordered);
  report.data["unordered_bases"] = static_cast<std::uint64_t>(unordered);
  text += "Z_2^" + std::to_string(n) + ": " + unordered.str() + " unordered bases (" +
          ordered.str() + " ordered)\n\n";

  const auto bases = enumerate_bases(n);
  ordered_json bases_j = ordered_json::array();
  text += "bases (vectors in standard coordinates):\n";
  for (const auto& basis : bases) {
    ordered_json vectors = ordered_json::array();
    std::string line = "  {";
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      vectors.push_back(basis.vectors()[i].bit_string());
      if (i) line += ", ";
      line += basis.vectors()[i].bit_string();
    }
    bases_j.push_back(std::move(vectors));
    text += line + "}\n";
  }
  report.data["bases"] = std::move(bases_j);

  const KetTable table = ket_table(demo_bases(n));
  report.data["ket_table"] = ket_table_json(table);
  text += "\nket table:\n" + render_ket_table(table);

  if (n == 2) {
    // The superposition {H,T} and the half-half mixture of {H} and {T}
    // agree in the U frame but measure 1 vs 1/4 for {H'} in the U' frame.
    const auto all = demo_bases(2);
    const GF2Basis& u = all[0];
    const GF2Basis& u_prime = all[1];
    const QState superposition = QState::pure(Ket::from_coords(u, GF2Vector(2, 0b11)));
    const std::vector<std::pair<double, GF2Vector>> halves = {
        {0.5, GF2Vector(2, 0b01)},  // {H}
        {0.5, GF2Vector(2, 0b10)},  // {T}
    };
    const QState mixture = QState::from_coords(u, halves);
    const std::vector<std::string> target = {"H'"};
    const double p_superposition = measure_in_basis(superposition, u_prime, target);
    const double p_mixture = measure_in_basis(mixture, u_prime, target);
    const DensityMatrix rho_superposition = state_density_in_basis(superposition, u_prime);
    const DensityMatrix rho_mixture = state_density_in_basis(mixture, u_prime);

    report.data["distinguishability"] =
        ordered_json{{"frame", "U'"},
                     {"target", target},
                     {"superposition_prob", p_superposition},
                     {"mixture_prob", p_mixture},
                     {"superposition_density", matrix_json(rho_superposition.entries())},
                     {"mixture_density", matrix_json(rho_mixture.entries())}};
    text += "\nmeasuring {H'} in the U' frame:\n";
    text += "  superposition {H,T}:    Pr = " + format_number(p_superposition) + "\n";
    text += "  half {H} half {T} mix:  Pr = " + format_number(p_mixture) + "\n";
    text += "mixture density in U':\n" + render_matrix(rho_mixture.entries());
  }

  report.text = std::move(text);
  return report;
}

}  // namespace superprob
