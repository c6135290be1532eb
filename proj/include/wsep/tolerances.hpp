#pragma once

namespace wsep::tol {

// Internal identity checks (tensor rotation, angle-form agreement, ...).
inline constexpr double kConsistency = 1e-12;
// Swap decomposition residual, max entry.
inline constexpr double kSwapIdentity = 1e-12;
// Quadrature reconstruction vs direct construction, max entry.
inline constexpr double kReconstruction = 1e-10;
// Pairing identity residual.
inline constexpr double kPairing = 1e-10;
// Feasibility floor: a witness is accepted when every local eigenvalue is
// at least this (boundary witnesses sit exactly at zero).
inline constexpr double kEigFloor = -1e-10;
// eta_k enters inverted, so it must stay away from zero.
inline constexpr double kEtaMin = 1e-8;
// Bisection bracket width for the maximal flip parameter.
inline constexpr double kFmaxBracket = 1e-4;

}  // namespace wsep::tol
