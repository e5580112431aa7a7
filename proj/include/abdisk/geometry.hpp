#pragma once

#include <complex>

#include "abdisk/specfun.hpp"

namespace abdisk {

using specfun::Complex;
using specfun::pi;

// Physical parameters shared by every module. b is the dimensionless field
// strength, nu the vortex charge reduced to (-1, 0], R the curvature radius.
struct PhysicalConfig {
    double b = 0.0;
    double nu = 0.0;
    double R = 1.0;

    // Throws a domain error unless nu is in (-1, 0] and R > 0.
    void validate() const;
};

// Point of the open unit disk. Stored as a complex number; polar accessors
// normalize phi into [0, 2*pi). Construction rejects points outside
// |z| <= 1 - disk_margin.
class DiskPoint {
  public:
    explicit DiskPoint(Complex z);
    static DiskPoint from_polar(double r, double phi);

    Complex value() const { return z_; }
    double r() const { return std::abs(z_); }
    double t() const { return std::norm(z_); }
    double phi() const;

  private:
    Complex z_;
};

// Isometry of the disk model, acting as z -> (alpha*z + beta)/(conj(beta)*z
// + conj(alpha)). The group constraint is |alpha|^2 - |beta|^2 = 1; the
// constructor enforces it to within tol::group_constraint. Note that the
// translation parametrization below satisfies it identically, so composing
// translations and rotations never drifts far from the constraint surface.
class MobiusElement {
  public:
    MobiusElement(Complex alpha, Complex beta);

    static MobiusElement identity();
    static MobiusElement rotation(double angle);
    // Maps p to the origin: z -> (z - p)/(1 - conj(p)*z).
    static MobiusElement translate_to_origin(const DiskPoint& p);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }

    Complex apply(Complex z) const;
    DiskPoint apply(const DiskPoint& p) const;

    MobiusElement compose(const MobiusElement& other) const;
    MobiusElement inverse() const;

  private:
    MobiusElement(Complex alpha, Complex beta, bool);  // unchecked

    Complex alpha_;
    Complex beta_;
};

// u(z, z') = |(z' - z)/(1 - conj(z) z')|^2, the Mobius-invariant cross
// ratio of the pair. Lies in [0, 1); u = 0 iff z = z'.
double point_invariant(const DiskPoint& z, const DiskPoint& zp);

// Geodesic distance R * artanh(sqrt(u)).
double geodesic_distance(const DiskPoint& z, const DiskPoint& zp,
                         const PhysicalConfig& cfg);

// Radial density of the invariant measure with respect to dt: the measure
// of an annulus is 2*pi * measure_weight(t) * dt.
double measure_weight(double t, const PhysicalConfig& cfg);

// phi - phip for phi, phip in [0, 2*pi); the result lies in (-2*pi, 2*pi)
// and is NOT reduced modulo 2*pi. Callers pick branch windows from it.
double angle_difference(double phi, double phip);

}  // namespace abdisk
