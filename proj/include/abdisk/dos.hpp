#pragma once

#include <utility>
#include <vector>

#include "abdisk/geometry.hpp"
#include "abdisk/quadrature.hpp"
#include "abdisk/radial.hpp"
#include "abdisk/spectrum.hpp"

namespace abdisk {

// Densities of states. The vortex-free density (per unit area) has a
// continuum part above the spectral edge and delta terms at the Landau
// levels. Switching on the vortex adds a correction whose integral over the
// whole disk is known in closed digamma form; on the real energy axis it
// splits into symbolic delta terms and a continuum density. Two independent
// quadrature representations of the disk integral serve as oracles for the
// closed form.

// Continuum parametrization E = (1 + 4 b^2 + 4 lambda^2) / R^2. Returns
// lambda >= 0; E below the edge is a domain error.
double lambda_param(double E, const PhysicalConfig& cfg);

// Vortex-free continuum density per unit area,
// (1/4 pi) sinh(2 pi lambda) / (cosh(2 pi lambda) + cos(2 pi b)) above the
// edge and 0 below. The denominator is evaluated as
// 2 sinh^2(pi lambda) + 2 cos^2(pi b), which is cancellation-free for
// half-integer b, where the value grows like coth(pi lambda) / 4 pi towards
// the edge; exactly at the edge that case is an edge error.
double rho0_continuous(double E, const PhysicalConfig& cfg);

// One symbolic term weight * delta(E - energy). Any numeric broadening is a
// caller-side rendering choice.
struct DiscreteDosTerm {
    double energy;
    double weight;
    LevelFamily family;
};

// Delta terms of the vortex-free density: weight (2/(pi R^2))(|b| - n - 1/2)
// per unit area at each Landau energy. Empty for |b| <= 1/2.
std::vector<DiscreteDosTerm> rho0_discrete(const PhysicalConfig& cfg);

// Delta terms of the vortex-induced correction. Unlike rho0_discrete these
// weights count whole states, not a density per area: +(n+1) at each vortex
// level, and at each Landau level -(n - nu) for b > 0, -(n + nu + 1) for
// b < 0. At nu = 0 the vortex family coincides with the Landau ladder
// shifted by one and every weight cancels; the result is empty.
std::vector<DiscreteDosTerm> rho_nu_discrete(const PhysicalConfig& cfg);

// Continuum part of the vortex-induced correction,
//   -(R^2 / 8 lambda) { S(b - nu) - S(b) },
//   S(beta) = [lambda sinh(2 pi lambda) + (1/2 - b + nu) sin(2 pi beta)]
//             / [cosh(2 pi lambda) + cos(2 pi beta)],
// above the edge; 0 below and identically 0 at nu = 0. The braces do not
// vanish at lambda = 0 for nu != 0, so the edge itself is a genuine
// 1/lambda singularity and is reported as an edge error.
double rho_nu_continuous(double E, const PhysicalConfig& cfg);

// Integral over the disk of the coincident-point vortex correction, in
// closed form:
//   -R^2/(4(2 chi - 1)) { (chi-b+nu) [psi(chi-b) - psi(chi-b+nu+1)]
//                       + (chi+b-nu-1) [psi(chi+b) - psi(chi+b-nu-1)] }.
// Analytic in k2 off the closed positive real axis; the digamma poles are
// the discrete levels and surface as pole errors. Identically 0 at nu = 0.
Complex integrated_delta_closed(const PhysicalConfig& cfg, Complex k2);

// Quadrature route for the same disk integral: a nested double integral in
// the two contour parameters of the product representation of the kernel,
// or a one-dimensional radial integral of delta_coincident against the
// hyperbolic area measure pi R^2 dt / (1-t)^2.
enum class DeltaIntegralPath { contour_pair, radial_measure };

// Independent quadrature evaluation of the disk integral. Requires
// Re k2 < 0; exactly 0 at nu = 0 (no quadrature is attempted).
Complex integrated_delta_quadrature(
    const PhysicalConfig& cfg, Complex k2,
    const quadrature::QuadratureSpec& quad = {},
    DeltaIntegralPath path = DeltaIntegralPath::contour_pair);

// Full vortex-induced correction at real energy E: continuum value plus the
// symbolic delta terms (which do not depend on E).
std::pair<double, std::vector<DiscreteDosTerm>> rho_nu_total(
    double E, const PhysicalConfig& cfg);

// Row of an energy scan. above_edge is E >= continuum edge.
struct DosSample {
    double E = 0.0;
    double rho0_c = 0.0;
    double rho_nu_c = 0.0;
    bool above_edge = false;
};

DosSample dos_sample(double E, const PhysicalConfig& cfg);

// Flat-space reference value nu (nu + 1) / (2 k2) for the disk integral of
// the vortex correction. k2 = 0 is a domain error.
Complex flat_limit_reference(Complex k2, double nu);

}  // namespace abdisk
