#pragma once

#include <doctest.h>

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "superprob/errors.hpp"
#include "superprob/event.hpp"
#include "superprob/outcome_space.hpp"

namespace testsup {

inline superprob::OutcomeSpace cards() {
  return superprob::OutcomeSpace::uniform({"club", "diamond", "heart", "spade"});
}

inline superprob::OutcomeSpace coin() { return superprob::OutcomeSpace({"H", "T"}, {0.5, 0.5}); }

inline superprob::errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const superprob::Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return superprob::errc::parse_error;
}

inline superprob::Event labelled(const superprob::OutcomeSpace& space,
                                 std::vector<std::string> labels) {
  return superprob::Event::from_labels(space, labels);
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Eigen::MatrixXd from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return m;
}

}  // namespace testsup
