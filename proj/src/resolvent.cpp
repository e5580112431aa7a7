#include "abdisk/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "abdisk/errors.hpp"
#include "abdisk/specfun.hpp"

namespace abdisk {

namespace {

using specfun::pi;

// Distance from theta to the cut set of the waves attached to a point with
// log-radius log_r and angle phi: horizontal rays at Im theta = phi + pi
// (mod 2 pi), one family running left from ln r, the other right from -ln r.
double cut_distance(Complex theta, double log_r, double phi) {
    const double dy = std::abs(std::remainder(theta.imag() - phi - pi, 2.0 * pi));
    const double x = theta.real();
    const double left = x <= log_r ? dy : std::hypot(x - log_r, dy);
    const double right = x >= -log_r ? dy : std::hypot(x + log_r, dy);
    return std::min(left, right);
}

// log(1 + e^{ln_amp} e^{i ang}) on the sheet whose argument vanishes at
// ang = 0, continued in ang. For amplitude <= 1 the value never leaves the
// principal branch; beyond it the factor winds around 0, and crossing
// ang = pi + 2 pi n costs one turn.
Complex sheet_log(double ln_amp, double ang) {
    if (ln_amp <= 0.0) {
        return std::log(1.0 + std::exp(ln_amp) * std::polar(1.0, ang));
    }
    const double winding = std::floor((ang + pi) / (2.0 * pi));
    return Complex(ln_amp, ang - 2.0 * pi * winding) +
           std::log(1.0 + std::exp(-ln_amp) * std::polar(1.0, -ang));
}

// zeta expressed through 1 - u, which every caller can form without
// cancellation. omu must lie in (0, 1].
Complex zeta_from_omu(double omu, const PhysicalConfig& cfg, const SpectralParameter& sp) {
    const Complex chi = sp.chi;
    const Complex pref = std::exp(specfun::ln_gamma(chi + cfg.b) +
                                  specfun::ln_gamma(chi - cfg.b) -
                                  specfun::ln_gamma(2.0 * chi)) /
                         (4.0 * pi);
    return pref * std::exp(chi * std::log(omu)) *
           specfun::hyp2f1(chi + cfg.b, chi - cfg.b, 2.0 * chi, omu);
}

// Reduced angular separation in (-2 pi, 2 pi) plus its distance to the
// +-pi seam (mod 2 pi).
double seam_distance(double dphi) {
    return std::min(std::abs(std::remainder(dphi - pi, 2.0 * pi)),
                    std::abs(std::remainder(dphi + pi, 2.0 * pi)));
}

void require_left_half_plane(const SpectralParameter& sp, const char* who) {
    if (!(sp.k2.real() < 0.0))
        fail(ErrorKind::domain, std::string(who) + ": representation requires Re k2 < 0");
}

// Shared core of delta_integral and delta_coincident. The pole-phase factor
// e^{(1+nu) theta + i dphi} / (1 + e^{theta + i dphi}) is rearranged for
// theta > 0 so that no exponential overflows, and the zeta argument is fed
// as 1 - v, which stays cancellation-free down to machine tiny.
Complex delta_core(double t, double tp, double rr, double dphi,
                   const PhysicalConfig& cfg, const SpectralParameter& sp,
                   const quadrature::QuadratureSpec& quad) {
    const double omt_prod = (1.0 - t) * (1.0 - tp);
    auto integrand = [&](double theta) -> Complex {
        Complex ph;
        if (theta > 0.0) {
            ph = std::exp(cfg.nu * theta) /
                 (1.0 + std::exp(Complex(-theta, -dphi)));
        } else {
            ph = std::exp(Complex((1.0 + cfg.nu) * theta, dphi)) /
                 (1.0 + std::exp(Complex(theta, dphi)));
        }
        const double bracket = std::exp(cfg.b * (std::log1p(rr * std::exp(-theta)) -
                                                 std::log1p(rr * std::exp(theta))));
        const double omv = omt_prod / (1.0 + t * tp + 2.0 * rr * std::cosh(theta));
        return ph * bracket * zeta_from_omu(omv, cfg, sp);
    };
    return std::sin(pi * cfg.nu) / pi * quadrature::real_line(integrand, quad);
}

}  // namespace

Complex horocyclic(const DiskPoint& z, Complex theta, int sign, bool hat,
                   const PhysicalConfig& cfg, const SpectralParameter& sp) {
    if (sign != 1 && sign != -1)
        fail(ErrorKind::domain, "horocyclic: sign must be +1 or -1");
    const Complex chi_pm = sign > 0 ? sp.chi : 1.0 - sp.chi;
    const double b = hat ? -cfg.b : cfg.b;
    const double r = z.r();
    if (r == 0.0) return Complex(1.0);
    const double log_r = std::log(r);
    if (cut_distance(theta, log_r, z.phi()) < tol::branch_cut_eps)
        fail(ErrorKind::branch_cut, "horocyclic: theta within branch_cut_eps of a cut");
    const double y = theta.imag() - z.phi();
    const Complex la = sheet_log(log_r - theta.real(), -y);  // 1 + z e^{-theta}
    const Complex lb = sheet_log(log_r + theta.real(), y);   // 1 + zbar e^{theta}
    return std::exp(chi_pm * std::log1p(-z.t()) - (chi_pm - b) * la - (chi_pm + b) * lb);
}

Complex zeta_fn(double u, const PhysicalConfig& cfg, const SpectralParameter& sp) {
    if (!(u > 0.0 && u < 1.0))
        fail(ErrorKind::domain,
             "zeta: u must lie in (0, 1); u = 0 is the logarithmically divergent "
             "coincidence point");
    return zeta_from_omu(1.0 - u, cfg, sp);
}

Complex g0_closed(const DiskPoint& z, const DiskPoint& zp,
                  const PhysicalConfig& cfg, const SpectralParameter& sp) {
    const Complex cross = 1.0 - std::conj(z.value()) * zp.value();
    // 1 - u without cancellation; u = |zp - z|^2 / |cross|^2.
    const double omu = (1.0 - z.t()) * (1.0 - zp.t()) / std::norm(cross);
    if (!(omu < 1.0))
        fail(ErrorKind::domain, "g0: coincident points");
    return std::polar(1.0, -2.0 * cfg.b * std::arg(cross)) * zeta_from_omu(omu, cfg, sp);
}

Complex delta_integral(const DiskPoint& z, const DiskPoint& zp,
                       const PhysicalConfig& cfg, const SpectralParameter& sp,
                       const quadrature::QuadratureSpec& quad) {
    if (cfg.nu == 0.0) return Complex(0.0);
    require_left_half_plane(sp, "delta");
    const double dphi = angle_difference(z.phi(), zp.phi());
    if (seam_distance(dphi) < tol::seam_eps)
        fail(ErrorKind::seam, "delta: angular separation on the +-pi seam");
    if (z.r() == 0.0 && zp.r() == 0.0)
        fail(ErrorKind::domain, "delta: both points at the vortex");
    return delta_core(z.t(), zp.t(), z.r() * zp.r(), dphi, cfg, sp, quad);
}

GreenDecomposition green_closed(const DiskPoint& z, const DiskPoint& zp,
                                const PhysicalConfig& cfg, const SpectralParameter& sp,
                                const quadrature::QuadratureSpec& quad) {
    const double dphi = angle_difference(z.phi(), zp.phi());
    if (seam_distance(dphi) < tol::seam_eps)
        fail(ErrorKind::seam, "green: angular separation on the +-pi seam");
    GreenDecomposition out;
    out.branch = dphi > pi ? 1 : dphi < -pi ? -1 : 0;
    out.g0 = g0_closed(z, zp, cfg, sp);
    out.delta = cfg.nu == 0.0 ? Complex(0.0) : delta_integral(z, zp, cfg, sp, quad);
    out.total = std::polar(1.0, -cfg.nu * (dphi - 2.0 * pi * out.branch)) * out.g0 +
                out.delta;
    return out;
}

Complex green_mode_sum(const DiskPoint& z, const DiskPoint& zp,
                       const PhysicalConfig& cfg, const SpectralParameter& sp,
                       double rel) {
    require_left_half_plane(sp, "mode sum");
    if (z.value() == zp.value())
        fail(ErrorKind::domain, "mode sum: coincident points");
    const double t = z.t();
    const double tp = zp.t();
    if (t == 0.0 || tp == 0.0)
        fail(ErrorKind::domain, "mode sum: both points must be off the vortex");
    const double dphi = z.phi() - zp.phi();
    const double q = std::sqrt(std::min(t, tp) / std::max(t, tp));
    auto channel = [&](int l) {
        return radial_green(t, tp, l + cfg.nu, cfg, sp) * std::polar(1.0, l * dphi);
    };
    Complex sum = channel(0);
    double edge = std::abs(sum);
    int half_width = 0;
    int target = tol::modesum_start;
    while (true) {
        while (half_width < target) {
            ++half_width;
            const Complex up = channel(half_width);
            const Complex down = channel(-half_width);
            if (!std::isfinite(std::abs(up)) || !std::isfinite(std::abs(down)))
                fail(ErrorKind::convergence,
                     "mode sum: channel overflow before the tail bound was met");
            sum += up + down;
            edge = std::abs(up) + std::abs(down);
        }
        const double bound = q < 1.0 ? edge * q / (1.0 - q)
                                     : std::numeric_limits<double>::infinity();
        if (bound <= rel * std::max(1.0, std::abs(sum))) break;
        if (target >= tol::modesum_cap) {
            const Complex estimate = sum / (2.0 * pi);
            fail(ErrorKind::convergence,
                 "mode sum: tail bound not met at |l| = " + std::to_string(target) +
                     " (equal radii decay too slowly); estimate (" +
                     std::to_string(estimate.real()) + ", " +
                     std::to_string(estimate.imag()) + ")");
        }
        target *= 2;
    }
    return sum / (2.0 * pi);
}

Complex delta_coincident(double t, const PhysicalConfig& cfg, const SpectralParameter& sp,
                         const quadrature::QuadratureSpec& quad) {
    if (!(t > 0.0 && t < 1.0))
        fail(ErrorKind::domain, "delta: t must lie in (0, 1)");
    if (cfg.nu == 0.0) return Complex(0.0);
    require_left_half_plane(sp, "delta");
    return delta_core(t, t, t, 0.0, cfg, sp, quad);
}

Complex radial_wave_contour_check(const DiskPoint& z, double l,
                                  const PhysicalConfig& cfg, const SpectralParameter& sp,
                                  const quadrature::QuadratureSpec& quad) {
    require_left_half_plane(sp, "contour check");
    const double t = z.t();
    if (t == 0.0)
        fail(ErrorKind::domain, "contour check: segment degenerates at the origin");
    const Complex chi = sp.chi;
    // Euler reduction of the segment integral: substituting the integration
    // variable through x = t + (1-t) w maps it onto [0, 1] with integrand
    // w^{chi+b-1} (1-w)^{chi-b-1} (t + (1-t) w)^{l-chi-b}. The endpoint
    // exponents have real part > -1/2 but carry an oscillatory imaginary part
    // whenever Im chi != 0, which defeats polynomial rules; the
    // double-exponential rule absorbs both.
    const Complex p = l - chi - cfg.b;
    auto reduced = [&](double w) {
        return std::exp((chi + cfg.b - 1.0) * std::log(w) +
                        (chi - cfg.b - 1.0) * std::log1p(-w) +
                        p * std::log(t + (1.0 - t) * w));
    };
    const Complex cur = quadrature::tanh_sinh(reduced, 0.0, 1.0, quad);
    return std::polar(1.0, l * (z.phi() + pi)) *
           std::exp(-0.5 * l * std::log(t) + chi * std::log1p(-t)) * cur;
}

}  // namespace abdisk
