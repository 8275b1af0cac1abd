#include "superprob/measurement.hpp"

#include <algorithm>

#include "superprob/errors.hpp"
#include "superprob/tolerances.hpp"

namespace superprob {

Projection::Projection(Event event) : event_(std::move(event)) {}

Projection projection(const Event& t) { return Projection(t); }

Eigen::MatrixXd Projection::matrix() const {
  const auto n = static_cast<Eigen::Index>(space().size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i : event_.indices()) {
    const auto ii = static_cast<Eigen::Index>(i);
    p(ii, ii) = 1.0;
  }
  return p;
}

Eigen::MatrixXd Projection::conjugate(const Eigen::MatrixXd& x) const {
  const Eigen::MatrixXd p = matrix();
  return p * x * p;
}

double prob_given(const Event& t, const DensityMatrix& rho) {
  require_same_space(t.space(), rho.space(), "prob_given");
  const double p = (Projection(t).matrix() * rho.entries()).trace();
  return std::clamp(p, 0.0, 1.0);
}

std::pair<double, DensityMatrix> project_superposition(const Event& s, const Event& t) {
  require_same_space(s.space(), t.space(), "project_superposition");
  const double pr_s = event_probability(s);
  if (pr_s <= 0.0) {
    fail(errc::conditioning_on_null, "project_superposition: Pr(S) = 0");
  }
  const auto both = t.intersect(s);
  if (!both) {
    fail(errc::null_intersection, "project_superposition: T and S are disjoint");
  }
  const double pr_both = event_probability(*both);
  if (pr_both <= 0.0) {
    fail(errc::conditioning_on_null, "project_superposition: Pr(T cap S) = 0");
  }
  return {pr_both / pr_s, rho_sigma(*both)};
}

DensityMatrix luders(const DensityMatrix& rho, const Partition& pi) {
  require_same_space(rho.space(), pi.space(), "luders");
  if (!pi.covers_space()) {
    fail(errc::invalid_partition, "luders: partition must cover the whole space");
  }
  const auto n = static_cast<Eigen::Index>(rho.dim());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (const auto& block : pi.blocks()) {
    acc += Projection(block).conjugate(rho.entries());
  }
  return DensityMatrix(rho.space(), std::move(acc));
}

std::vector<MeasurementOutcome> measure(const DensityMatrix& rho, const RandomVariable& f) {
  require_same_space(rho.space(), f.space(), "measure");
  const Partition pi = partition_of(f);  // blocks ascend with the value
  std::vector<MeasurementOutcome> outcomes;
  for (std::size_t j = 0; j < pi.block_count(); ++j) {
    const Event& block = pi.blocks()[j];
    const Eigen::MatrixXd projected = Projection(block).conjugate(rho.entries());
    const double prob = projected.trace();
    if (prob <= tol::outcome_floor) continue;
    outcomes.push_back(MeasurementOutcome{
        f.value(block.indices().front()),
        prob,
        DensityMatrix(rho.space(), projected / prob),
    });
  }
  return outcomes;
}

Eigen::MatrixXd observable_matrix(const RandomVariable& f) {
  const auto n = static_cast<Eigen::Index>(f.space().size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = f.value(static_cast<std::size_t>(i));
  }
  return m;
}

double expectation(const DensityMatrix& rho, const RandomVariable& f) {
  require_same_space(rho.space(), f.space(), "expectation");
  return (observable_matrix(f) * rho.entries()).trace();
}

}  // namespace superprob
