#pragma once

#include <cstdint>

namespace ept {

/// Positive-semidefiniteness gate: a weighted coefficient matrix passes if
/// lambda_min >= -kPsdTolerance * max(1, lambda_max).
inline constexpr double kPsdTolerance = 1e-9;

/// Residual gate for identities that hold exactly in real arithmetic
/// (additivity, reconstruction round trips, the quadratic identity, ...).
inline constexpr double kIdentityTolerance = 1e-12;

/// A context is regular for a state when the measure of its universe
/// exceeds kRegularityTolerance times the weighted trace of the state.
/// Relative to the trace so the verdict is invariant under rescaling.
inline constexpr double kRegularityTolerance = 1e-9;

/// Gate for stochasticity checks: column sums, nonnegativity of entries,
/// and distribution normalization.
inline constexpr double kStochasticTolerance = 1e-9;

/// Default seed for every reproducible sampling routine in the library.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed0e9720250915ULL;

}  // namespace ept
