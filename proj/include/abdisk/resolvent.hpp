#pragma once

#include "abdisk/quadrature.hpp"
#include "abdisk/radial.hpp"

namespace abdisk {

// Full Green function of the vortex Hamiltonian, in two independent forms:
// an angular mode sum over radial kernels (the oracle) and the closed form
// phase * g0 + delta, where g0 is the vortex-free kernel and delta is a
// one-dimensional integral that vanishes at nu = 0.

// Closed-form value split into its parts. branch selects the 2 pi window of
// dphi = phi - phi': -1 for (-2 pi, -pi), 0 for (-pi, pi), +1 for (pi, 2 pi);
// total = e^{-i nu (dphi - 2 pi branch)} g0 + delta. dphi = +-pi itself is a
// seam of the decomposition and is rejected.
struct GreenDecomposition {
    Complex g0;
    Complex delta;
    int branch;
    Complex total;
};

// Horocyclic wave (1-|z|^2)^{chi_pm} / ((1+z e^{-theta})^{chi_pm - b}
// (1+zbar e^{theta})^{chi_pm + b}) with chi_+ = chi, chi_- = 1 - chi; hat
// replaces b by -b. Branch points sit at theta = +-ln r + i(phi + pi + 2 pi n)
// with cuts running horizontally away from the strip between them; the sheet
// is fixed so both denominator factors have zero argument on the line
// Im theta = phi. theta within branch_cut_eps of a cut is rejected.
Complex horocyclic(const DiskPoint& z, Complex theta, int sign, bool hat,
                   const PhysicalConfig& cfg, const SpectralParameter& sp);

// Radial profile of the vortex-free kernel as a function of the point-pair
// invariant u: (1/4 pi) Gamma(chi+b) Gamma(chi-b) / Gamma(2 chi) *
// (1-u)^chi 2F1(chi+b, chi-b; 2 chi; 1-u). Defined for u in (0, 1); the
// u -> 0 coincidence limit diverges logarithmically.
Complex zeta_fn(double u, const PhysicalConfig& cfg, const SpectralParameter& sp);

// Vortex-free kernel ((1 - z zp_bar)/(1 - zbar zp))^b zeta(u(z, zp)).
// Coincident points are a domain error.
Complex g0_closed(const DiskPoint& z, const DiskPoint& zp,
                  const PhysicalConfig& cfg, const SpectralParameter& sp);

// Vortex correction delta as a double-exponential quadrature over the real
// theta line. Requires Re k2 < 0 (the representation's half-plane of
// validity) and dphi away from the +-pi seam, where the integrand has a pole
// on the contour. Finite for coincident points; identically 0 at nu = 0.
Complex delta_integral(const DiskPoint& z, const DiskPoint& zp,
                       const PhysicalConfig& cfg, const SpectralParameter& sp,
                       const quadrature::QuadratureSpec& quad = {});

// Assembles the closed form. Preconditions as delta_integral, except that at
// nu = 0 the delta term (and its Re k2 < 0 requirement) drops out exactly.
GreenDecomposition green_closed(const DiskPoint& z, const DiskPoint& zp,
                                const PhysicalConfig& cfg, const SpectralParameter& sp,
                                const quadrature::QuadratureSpec& quad = {});

// Brute-force oracle (1/2 pi) sum_l G_{k, l+nu}(t, t') e^{i l dphi}. Channels
// are added in blocks of doubling half-width starting at modesum_start until
// the geometric tail bound (ratio q = min(r,r')/max(r,r') per unit l) falls
// below rel * max(1, |sum|); r = r' has no such bound and fails at the cap
// with the partial estimate in the message. Requires Re k2 < 0 and both
// points off the vortex.
Complex green_mode_sum(const DiskPoint& z, const DiskPoint& zp,
                       const PhysicalConfig& cfg, const SpectralParameter& sp,
                       double rel = tol::modesum_rel_default);

// delta at coincident points as a function of t = r^2 alone. Requires
// t in (0, 1) and Re k2 < 0.
Complex delta_coincident(double t, const PhysicalConfig& cfg, const SpectralParameter& sp,
                         const quadrature::QuadratureSpec& quad = {});

// Quadrature of the contour representation of the wave regular at t = 1:
// the horocyclic integral over the segment joining the branch points
// +-ln r + i(phi + pi), reduced to an Euler-type integral on [0, 1] and
// evaluated by the double-exponential rule (the endpoint exponents are
// complex, which polynomial rules do not absorb). Equals
// Gamma(chi+b) Gamma(chi-b) / Gamma(2 chi) * e^{i l (phi + pi)} * w1(t, l).
Complex radial_wave_contour_check(const DiskPoint& z, double l,
                                  const PhysicalConfig& cfg, const SpectralParameter& sp,
                                  const quadrature::QuadratureSpec& quad = {});

}  // namespace abdisk
