#include "abdisk/geometry.hpp"

#include <cmath>

#include "abdisk/errors.hpp"
#include "abdisk/tolerances.hpp"

namespace abdisk {

void PhysicalConfig::validate() const {
    if (!(nu > -1.0 && nu <= 0.0))
        fail(ErrorKind::domain, "vortex charge nu must lie in (-1, 0]");
    if (!(R > 0.0)) fail(ErrorKind::domain, "curvature radius R must be positive");
    if (!std::isfinite(b)) fail(ErrorKind::domain, "field strength b must be finite");
}

DiskPoint::DiskPoint(Complex z) : z_(z) {
    if (!(std::abs(z) <= 1.0 - tol::disk_margin))
        fail(ErrorKind::domain, "point must lie strictly inside the unit disk");
}

DiskPoint DiskPoint::from_polar(double r, double phi) {
    return DiskPoint(std::polar(r, phi));
}

double DiskPoint::phi() const {
    double a = std::arg(z_);
    if (a < 0.0) a += 2.0 * pi;
    // arg() can return exactly -0.0 or round to 2*pi after the shift.
    if (a >= 2.0 * pi) a = 0.0;
    return a;
}

MobiusElement::MobiusElement(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    double defect = std::norm(alpha) - std::norm(beta) - 1.0;
    if (std::abs(defect) > tol::group_constraint)
        fail(ErrorKind::domain, "group element violates |alpha|^2 - |beta|^2 = 1");
}

MobiusElement::MobiusElement(Complex alpha, Complex beta, bool) : alpha_(alpha), beta_(beta) {}

MobiusElement MobiusElement::identity() { return {Complex(1.0), Complex(0.0), true}; }

MobiusElement MobiusElement::rotation(double angle) {
    return {std::polar(1.0, 0.5 * angle), Complex(0.0), true};
}

MobiusElement MobiusElement::translate_to_origin(const DiskPoint& p) {
    double s = 1.0 / std::sqrt(1.0 - p.t());
    return {Complex(s), -p.value() * s, true};
}

Complex MobiusElement::apply(Complex z) const {
    return (alpha_ * z + beta_) / (std::conj(beta_) * z + std::conj(alpha_));
}

DiskPoint MobiusElement::apply(const DiskPoint& p) const { return DiskPoint(apply(p.value())); }

MobiusElement MobiusElement::compose(const MobiusElement& other) const {
    return {alpha_ * other.alpha_ + beta_ * std::conj(other.beta_),
            alpha_ * other.beta_ + beta_ * std::conj(other.alpha_), true};
}

MobiusElement MobiusElement::inverse() const { return {std::conj(alpha_), -beta_, true}; }

double point_invariant(const DiskPoint& z, const DiskPoint& zp) {
    Complex num = zp.value() - z.value();
    Complex den = 1.0 - std::conj(z.value()) * zp.value();
    return std::norm(num / den);
}

double geodesic_distance(const DiskPoint& z, const DiskPoint& zp, const PhysicalConfig& cfg) {
    return cfg.R * std::atanh(std::sqrt(point_invariant(z, zp)));
}

double measure_weight(double t, const PhysicalConfig& cfg) {
    if (!(t >= 0.0 && t < 1.0)) fail(ErrorKind::domain, "t must lie in [0, 1)");
    double omt = 1.0 - t;
    return cfg.R * cfg.R / (2.0 * omt * omt);
}

double angle_difference(double phi, double phip) { return phi - phip; }

}  // namespace abdisk
