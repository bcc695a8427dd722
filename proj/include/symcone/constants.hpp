#pragma once

namespace symcone {

// Numerical tolerances, shared across the library. Relative forms scale by
// max(1, ||x||) at the use site.
inline constexpr double kEpsSymmetry = 1e-10;   // operator symmetry residuals
inline constexpr double kEpsInverse = 1e-10;    // |eigenvalue| cutoff for inversion
inline constexpr double kEpsCone = 1e-9;        // cone membership band
inline constexpr double kEpsGroup = 1e-8;       // eigenvalue grouping / spectrum queries
inline constexpr double kEpsIdempotent = 1e-8;  // ||e∘e - e|| acceptance for idempotents
inline constexpr double kEpsSubspace = 1e-8;    // Peirce-subspace membership
inline constexpr double kEpsAction = 1e-7;      // compactified action agreement
inline constexpr double kEpsRoundtrip = 1e-7;   // represent/embed round trips

inline constexpr double kGramSchmidtDropTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 64;
inline constexpr int kMaxSampleRetries = 100;
inline constexpr double kConditionGuard = 1e8;   // resample above this
inline constexpr double kInteriorShift = 1e-3;   // square + shift interior sampler

}  // namespace symcone
