#pragma once

namespace superprob::tol {

/// Probabilities and convex weights must normalize to 1 within this bound.
inline constexpr double probability = 1e-12;

/// Matrix-level checks (symmetry, trace, eigenvalues, purity) use this bound.
inline constexpr double matrix = 1e-9;

/// Measurement outcomes with probability at or below this are dropped.
inline constexpr double outcome_floor = 1e-12;

}  // namespace superprob::tol
