#pragma once

// Every numeric threshold used by the library lives here. Nothing else may
// hard-code a tolerance.

namespace abdisk::tol {

// Gamma/digamma/2F1 poles: arguments this close to a nonpositive integer are
// treated as sitting on the pole.
// Proximity at which ln_gamma/digamma refuse a nonpositive-integer argument.
inline constexpr double gamma_pole = 1e-12;
// Proximity at which series/connection dispatch treats a parameter as the
// integer case, and at which spectral operations flag a bound-state pole.
inline constexpr double pole_proximity = 1e-9;

// Relative termination threshold and term cap for hypergeometric series.
inline constexpr double series_eps = 1e-15;
inline constexpr int series_max_terms = 200000;

// Mobius group elements must satisfy |alpha|^2 - |beta|^2 = 1 to this
// absolute tolerance.
inline constexpr double group_constraint = 1e-12;

// Points must satisfy |z| < 1 - disk_margin.
inline constexpr double disk_margin = 1e-12;

// Angular separations within seam_eps of +-pi (mod 2pi) are rejected: the
// closed-form Green function changes branch there.
inline constexpr double seam_eps = 1e-8;

// Horocyclic waves are singular on horizontal branch cuts in the theta
// plane; evaluation closer than this to the cut set is rejected.
inline constexpr double branch_cut_eps = 1e-10;

// Defaults for adaptive quadrature.
inline constexpr double quad_rel_default = 1e-9;
inline constexpr double quad_abs_floor = 1e-15;
inline constexpr int quad_max_level = 12;

// Angular mode sums: initial half-width, growth cap, default target.
inline constexpr int modesum_start = 32;
inline constexpr int modesum_cap = 16384;
inline constexpr double modesum_rel_default = 1e-8;

// Step for the finite-difference oracles used by self-checks.
inline constexpr double fd_step = 1e-4;

// Half-width of the band around the continuum edge, relative to the
// dimensionless edge combination 1 + 4 b^2, inside which an energy counts
// as exactly on the edge. Covers the rounding noise of recomputing the
// excess E R^2 - 1 - 4 b^2 from an edge value produced elsewhere.
inline constexpr double edge_band = 1e-14;

// Radial disk integral of the coincident vortex correction: margins trimmed
// from the endpoints, where the kernel leaves double range. The dropped
// tails are O(eps |ln eps|) at coincidence and O(eps^{2 Re chi - 1}) at the
// rim, both far below quadrature tolerance.
inline constexpr double trace_trim_coincidence = 1e-9;
inline constexpr double trace_trim_rim = 1e-6;

// Quantum numbers this close to their admissibility boundary are rejected
// rather than rounded.
inline constexpr double level_margin = 1e-12;

}  // namespace abdisk::tol
