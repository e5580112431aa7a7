#pragma once

#include <vector>

#include "abdisk/geometry.hpp"

namespace abdisk {

enum class LevelFamily { free_landau, vortex_plus, vortex_minus };

// A discrete energy level. allowed_l is [l_min, l_max] unless l_infinite is
// set, in which case the set is semi-infinite: l <= l_max for b > 0 and
// l >= l_min for b < 0 (free-Landau levels are infinitely degenerate).
// weight carries the DoS mass: per unit area (2/(pi R^2))(|b| - n - 1/2)
// for free-Landau levels, the plain degeneracy count n + 1 for vortex ones.
struct EnergyLevel {
    double value = 0.0;
    int n = 0;
    LevelFamily family = LevelFamily::free_landau;
    int l_min = 0;
    int l_max = 0;
    bool l_infinite = false;
    double weight = 0.0;
};

// Bottom of the continuous spectrum, (1 + 4 b^2)/R^2.
double continuum_edge(const PhysicalConfig& cfg);

// Levels unaffected by the vortex: E_n = [1 + 4b^2 - 4(|b| - n - 1/2)^2]/R^2
// for n < |b| - 1/2 (strict; empty for |b| < 1/2).
std::vector<EnergyLevel> landau_levels(const PhysicalConfig& cfg);

// Vortex-shifted levels. For b > 0: E_n = [1 + 4b^2 - 4(b - n - (1+nu)
// - 1/2)^2]/R^2 with n < b - (nu+1) - 1/2 and l in [1, n+1]. For b < 0:
// E_n = [1 + 4b^2 - 4(|b| - n + nu - 1/2)^2]/R^2 with n < |b| + nu - 1/2
// and l in [-n, 0]. Degeneracy n + 1.
std::vector<EnergyLevel> vortex_levels(const PhysicalConfig& cfg);

// Unnormalized bound-state wave function t^{.}(1-t)^{.} P^{(.,.)}(2t-1)
// e^{il phi}. The polynomial degree depends on the channel: n for the
// free-Landau family, n+1-l for vortex-plus, n+l for vortex-minus, so that
// every allowed l of a level solves the radial equation at the same energy.
// Throws a quantum-number error for inadmissible (n, l, family).
Complex eigenfunction(int n, int l, const DiskPoint& z, LevelFamily family,
                      const PhysicalConfig& cfg);

// Radial factor of eigenfunction at t = r^2 (no e^{il phi}); exposed for
// quadrature-based norm and orthogonality checks.
double eigenfunction_radial(int n, int l, double t, LevelFamily family,
                            const PhysicalConfig& cfg);

}  // namespace abdisk
