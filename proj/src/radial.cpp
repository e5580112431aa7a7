#include "abdisk/radial.hpp"

#include <cmath>

#include "abdisk/errors.hpp"
#include "abdisk/tolerances.hpp"

namespace abdisk {

using specfun::hyp2f1;
using specfun::ln_gamma;
using specfun::near_nonpositive_integer;

namespace {

void require_interior(double t) {
    if (!(t > 0.0 && t < 1.0)) fail(ErrorKind::domain, "t must lie in (0, 1)");
}

// (1 - t)^chi for complex chi, t in (0, 1).
Complex edge_power(double t, Complex chi) { return std::exp(chi * std::log1p(-t)); }

struct WaveParts {
    double half_l;  // exponent of t
    Complex a, b, c;
    double x;
};

WaveParts w1_parts(double t, double l, int which, Complex chi, double b) {
    if (which > 0) return {+0.5 * l, chi + b, chi - b + l, 2.0 * chi, 1.0 - t};
    return {-0.5 * l, chi - b, chi + b - l, 2.0 * chi, 1.0 - t};
}

WaveParts w2_parts(double t, double l, int sign, Complex chi, double b) {
    if (sign > 0) return {+0.5 * l, chi + b, chi - b + l, Complex(1.0 + l), t};
    return {-0.5 * l, chi - b, chi + b - l, Complex(1.0 - l), t};
}

Complex assemble(double t, Complex chi, const WaveParts& p) {
    return std::pow(t, p.half_l) * edge_power(t, chi) * hyp2f1(p.a, p.b, p.c, p.x);
}

// d/dt of t^{half_l} (1-t)^chi F(a, b, c, x(t)) with x = t or 1 - t.
Complex assemble_deriv(double t, Complex chi, const WaveParts& p, double dx_dt) {
    Complex f = hyp2f1(p.a, p.b, p.c, p.x);
    Complex fp = p.a * p.b / p.c * hyp2f1(p.a + 1.0, p.b + 1.0, p.c + 1.0, p.x);
    Complex bracket = (p.half_l / t - chi / (1.0 - t)) * f + dx_dt * fp;
    return std::pow(t, p.half_l) * edge_power(t, chi) * bracket;
}

void check_sign_domain(double l, int sign) {
    if (sign != 1 && sign != -1) fail(ErrorKind::domain, "sign must be +1 or -1");
    if (sign > 0 && !(l > -1.0))
        fail(ErrorKind::domain, "sign +1 requires l > -1 for integrability at t = 0");
    if (sign < 0 && !(l < 1.0))
        fail(ErrorKind::domain, "sign -1 requires l < 1 for integrability at t = 0");
}

}  // namespace

SpectralParameter chi_of(const PhysicalConfig& cfg, Complex k2) {
    cfg.validate();
    if (!std::isfinite(k2.real()) || !std::isfinite(k2.imag()))
        fail(ErrorKind::domain, "k2 must be finite");
    if (k2.imag() == 0.0 && k2.real() >= 0.0)
        fail(ErrorKind::domain, "k2 must avoid the closed positive real axis");
    Complex chi = 0.5 * (1.0 + std::sqrt(Complex(1.0 + 4.0 * cfg.b * cfg.b) -
                                         k2 * cfg.R * cfg.R));
    return {k2, chi};
}

Complex w1_representation(double t, double l, int which, const PhysicalConfig& cfg,
                          const SpectralParameter& sp) {
    require_interior(t);
    return assemble(t, sp.chi, w1_parts(t, l, which, sp.chi, cfg.b));
}

Complex w1(double t, double l, const PhysicalConfig& cfg, const SpectralParameter& sp) {
    return w1_representation(t, l, l >= 0.0 ? +1 : -1, cfg, sp);
}

Complex w1_deriv(double t, double l, const PhysicalConfig& cfg, const SpectralParameter& sp) {
    require_interior(t);
    int which = l >= 0.0 ? +1 : -1;
    return assemble_deriv(t, sp.chi, w1_parts(t, l, which, sp.chi, cfg.b), -1.0);
}

Complex w2(double t, double l, int sign, const PhysicalConfig& cfg,
           const SpectralParameter& sp) {
    require_interior(t);
    check_sign_domain(l, sign);
    return assemble(t, sp.chi, w2_parts(t, l, sign, sp.chi, cfg.b));
}

Complex w2_deriv(double t, double l, int sign, const PhysicalConfig& cfg,
                 const SpectralParameter& sp) {
    require_interior(t);
    check_sign_domain(l, sign);
    return assemble_deriv(t, sp.chi, w2_parts(t, l, sign, sp.chi, cfg.b), 1.0);
}

Complex wronskian_constant(double l, int sign, const PhysicalConfig& cfg,
                           const SpectralParameter& sp) {
    check_sign_domain(l, sign);
    double s = sign;
    Complex num1 = sp.chi + s * cfg.b;
    Complex num2 = sp.chi - s * cfg.b + s * l;
    if (near_nonpositive_integer(num1, tol::pole_proximity) ||
        near_nonpositive_integer(num2, tol::pole_proximity))
        fail(ErrorKind::pole, "k2 sits on a bound state of this angular channel");
    return std::exp(ln_gamma(num1) + ln_gamma(num2) - ln_gamma(2.0 * sp.chi) -
                    ln_gamma(Complex(1.0 + s * l)));
}

Complex radial_green(double t, double tp, double l, const PhysicalConfig& cfg,
                     const SpectralParameter& sp) {
    require_interior(t);
    require_interior(tp);
    int sign = l >= 0.0 ? +1 : -1;
    Complex c = wronskian_constant(l, sign, cfg, sp);
    double lo = std::min(t, tp);
    double hi = std::max(t, tp);
    return 0.5 * c * w2(lo, l, sign, cfg, sp) * w1(hi, l, cfg, sp);
}

}  // namespace abdisk
