#pragma once

#include "abdisk/geometry.hpp"

namespace abdisk {

// Spectral parameter: the resolvent argument k2 together with the derived
// index chi = (1 + sqrt(1 + 4 b^2 - k2 R^2))/2 (principal square root, so
// Re chi > 1/2 away from the continuum and chi -> 1/2 - i lambda as k2
// approaches the continuum from above).
struct SpectralParameter {
    Complex k2;
    Complex chi;
};

// Builds the spectral parameter. k2 must avoid the closed positive real
// axis [0, inf), where the resolvent is not defined in this form.
SpectralParameter chi_of(const PhysicalConfig& cfg, Complex k2);

// Radial wave regular at t = 1, evaluated for real angular momentum l.
// Two equivalent hypergeometric representations exist, with prefactors
// t^{l/2} and t^{-l/2}; w1 picks the one whose series carries no growing
// alternation for the given sign of l. Both can be requested explicitly
// through w1_representation (which = +1 ascending t^{l/2}, -1 descending).
Complex w1(double t, double l, const PhysicalConfig& cfg, const SpectralParameter& sp);
Complex w1_representation(double t, double l, int which, const PhysicalConfig& cfg,
                          const SpectralParameter& sp);
Complex w1_deriv(double t, double l, const PhysicalConfig& cfg, const SpectralParameter& sp);

// Radial wave regular at t = 0. sign = +1 is valid for l > -1, sign = -1
// for l < 1; outside these ranges the function is not square integrable
// near t = 0 and the call is a domain error.
Complex w2(double t, double l, int sign, const PhysicalConfig& cfg,
           const SpectralParameter& sp);
Complex w2_deriv(double t, double l, int sign, const PhysicalConfig& cfg,
                 const SpectralParameter& sp);

// C^{sign} = Gamma(chi +- b) Gamma(chi -+ b +- l) / (Gamma(2 chi)
// Gamma(1 +- l)). The Wronskian identity is t W(w1, w2) = 1/C, so a pole
// of C (a gamma argument within pole_proximity of a nonpositive integer)
// means k2 sits on a bound state of the channel; this throws.
Complex wronskian_constant(double l, int sign, const PhysicalConfig& cfg,
                           const SpectralParameter& sp);

// Kernel of the radial resolvent: (C/2) w2(min) w1(max), with sign = +1
// for l >= 0 and -1 for l < 0. Defined for t, tp in (0, 1).
Complex radial_green(double t, double tp, double l, const PhysicalConfig& cfg,
                     const SpectralParameter& sp);

}  // namespace abdisk
