#include "abdisk/dos.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "abdisk/errors.hpp"
#include "abdisk/resolvent.hpp"
#include "abdisk/specfun.hpp"
#include "abdisk/tolerances.hpp"

namespace abdisk {
namespace {

using specfun::pi;

// E relative to the continuum edge, in the dimensionless combination
// E R^2 - 1 - 4 b^2 = 4 lambda^2.
double edge_excess(double E, const PhysicalConfig& cfg) {
    return E * cfg.R * cfg.R - 1.0 - 4.0 * cfg.b * cfg.b;
}

// The excess carries rounding noise of a few ulp of the edge combination
// itself; a band that wide counts as sitting exactly on the edge.
bool on_edge(double s, const PhysicalConfig& cfg) {
    return std::abs(s) <= tol::edge_band * (1.0 + 4.0 * cfg.b * cfg.b);
}

bool half_integer(double b) {
    return std::abs(b - std::floor(b) - 0.5) < tol::pole_proximity;
}

// One brace of the continuum correction,
// [lambda sinh 2 pi lambda + coeff sin 2 pi beta] /
// [cosh 2 pi lambda + cos 2 pi beta], with the denominator split as
// 2 sinh^2(pi lambda) + 2 cos^2(pi beta): near-edge lambda and half-integer
// beta then cost no cancellation.
double continuum_ratio(double lambda, double beta, double coeff) {
    const double sh = std::sinh(pi * lambda);
    const double ch = std::cosh(pi * lambda);
    const double cb = std::cos(pi * beta);
    return (2.0 * lambda * sh * ch + coeff * std::sin(2.0 * pi * beta)) /
           (2.0 * sh * sh + 2.0 * cb * cb);
}

double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

}  // namespace

double lambda_param(double E, const PhysicalConfig& cfg) {
    cfg.validate();
    const double s = edge_excess(E, cfg);
    if (on_edge(s, cfg)) return 0.0;
    if (s < 0.0)
        fail(ErrorKind::domain, "lambda_param: E below the continuum edge");
    return 0.5 * std::sqrt(s);
}

double rho0_continuous(double E, const PhysicalConfig& cfg) {
    cfg.validate();
    const double s = edge_excess(E, cfg);
    if (on_edge(s, cfg)) {
        if (half_integer(cfg.b))
            fail(ErrorKind::edge,
                 "rho0_continuous: divergent at the edge for half-integer b");
        return 0.0;
    }
    if (s < 0.0) return 0.0;
    const double lambda = 0.5 * std::sqrt(s);
    const double sh = std::sinh(pi * lambda);
    const double ch = std::cosh(pi * lambda);
    const double cb = std::cos(pi * cfg.b);
    return (2.0 * sh * ch) / (2.0 * sh * sh + 2.0 * cb * cb) / (4.0 * pi);
}

std::vector<DiscreteDosTerm> rho0_discrete(const PhysicalConfig& cfg) {
    std::vector<DiscreteDosTerm> terms;
    for (const EnergyLevel& lv : landau_levels(cfg))
        terms.push_back({lv.value, lv.weight, lv.family});
    return terms;
}

std::vector<DiscreteDosTerm> rho_nu_discrete(const PhysicalConfig& cfg) {
    cfg.validate();
    std::vector<DiscreteDosTerm> terms;
    if (cfg.nu == 0.0) return terms;
    for (const EnergyLevel& lv : vortex_levels(cfg))
        terms.push_back({lv.value, lv.n + 1.0, lv.family});
    for (const EnergyLevel& lv : landau_levels(cfg)) {
        const double w =
            cfg.b > 0.0 ? -(lv.n - cfg.nu) : -(lv.n + cfg.nu + 1.0);
        terms.push_back({lv.value, w, lv.family});
    }
    return terms;
}

double rho_nu_continuous(double E, const PhysicalConfig& cfg) {
    cfg.validate();
    if (cfg.nu == 0.0) return 0.0;
    const double s = edge_excess(E, cfg);
    if (on_edge(s, cfg))
        fail(ErrorKind::edge,
             "rho_nu_continuous: 1/lambda singularity at the continuum edge");
    if (s < 0.0) return 0.0;
    const double lambda = 0.5 * std::sqrt(s);
    // Both braces tend to lambda with corrections of order exp(-2 pi lambda);
    // past the point where those corrections leave double range the
    // difference is an exact zero, and evaluating further would overflow the
    // hyperbolic functions.
    if (pi * lambda > 350.0) return 0.0;
    const double coeff = 0.5 - cfg.b + cfg.nu;
    return -(cfg.R * cfg.R) / (8.0 * lambda) *
           (continuum_ratio(lambda, cfg.b - cfg.nu, coeff) -
            continuum_ratio(lambda, cfg.b, coeff));
}

Complex integrated_delta_closed(const PhysicalConfig& cfg, Complex k2) {
    cfg.validate();
    const SpectralParameter sp = chi_of(cfg, k2);
    if (cfg.nu == 0.0) return 0.0;
    const Complex am = sp.chi - cfg.b;
    const Complex ap = sp.chi + cfg.b;
    const Complex bracket =
        (am + cfg.nu) *
            (specfun::digamma(am) - specfun::digamma(am + cfg.nu + 1.0)) +
        (ap - cfg.nu - 1.0) *
            (specfun::digamma(ap) - specfun::digamma(ap - cfg.nu - 1.0));
    return -cfg.R * cfg.R / (4.0 * (2.0 * sp.chi - 1.0)) * bracket;
}

Complex integrated_delta_quadrature(const PhysicalConfig& cfg, Complex k2,
                                    const quadrature::QuadratureSpec& quad,
                                    DeltaIntegralPath path) {
    cfg.validate();
    if (!(k2.real() < 0.0))
        fail(ErrorKind::domain,
             "integrated_delta_quadrature: requires Re k2 < 0");
    const SpectralParameter sp = chi_of(cfg, k2);
    if (cfg.nu == 0.0) return 0.0;

    if (path == DeltaIntegralPath::radial_measure) {
        // Area measure in t = r^2 is pi R^2 dt / (1-t)^2. The endpoints are
        // trimmed where the coincident kernel cannot be evaluated in double
        // precision; the dropped tails are bounded by the logarithmic
        // coincidence singularity on the left and by (1-t)^{2 chi} decay on
        // the right.
        auto f = [&](double t) {
            return delta_coincident(t, cfg, sp, quad) /
                   ((1.0 - t) * (1.0 - t));
        };
        return pi * cfg.R * cfg.R *
               quadrature::tanh_sinh(f, tol::trace_trim_coincidence,
                                     1.0 - tol::trace_trim_rim, quad);
    }

    // Double integral over the contour parameters theta, theta' with the
    // inner profile reduced to a one-dimensional u-integral. All real
    // exponentials are assembled in log space: the bracket
    // e^{-theta-theta'} + (1 + e^{-theta'}) u spans hundreds of decades over
    // the integration region.
    const Complex eu = 2.0 * sp.chi - 2.0;
    const Complex eb = sp.chi - cfg.b;
    // Each rule converges by comparing refinements, and that difference
    // bottoms out at the noise its integrand evaluations carry. With three
    // nested levels the tolerances must be tiered: the u-integrals resolve
    // well past the theta' rule, which resolves well past the theta rule.
    // The contour weights are folded into the innermost evaluation rather
    // than applied per level, so every rule's absolute floor is measured
    // against the scale of the full integral: slices whose weights make
    // them negligible then terminate on the floor instead of stalling on
    // the noise of quantities that cannot matter.
    quadrature::QuadratureSpec mid_quad = quad;
    mid_quad.rel_tol = std::max(quad.rel_tol * 1e-3, 1e-12);
    quadrature::QuadratureSpec inner_quad = quad;
    inner_quad.rel_tol = std::max(quad.rel_tol * 1e-5, 1e-12);
    auto profile = [&](double th, double thp, double ln_w) {
        const double ln_a = -(th + thp);
        const double ln_b = softplus(-thp);
        auto g = [&](double u) {
            const double lu = std::log(u);
            const double hi = std::max(ln_a, ln_b + lu);
            const double lo = std::min(ln_a, ln_b + lu);
            const double ln_bracket = hi + std::log1p(std::exp(lo - hi));
            return std::exp(eu * lu - eb * ln_bracket);
        };
        // The two bracket terms balance at u = a/b. The integrand follows a
        // different power law on each side and, for Re(chi + b) < 2, peaks
        // at that crossover; when the crossover sits deep inside the
        // interval, endpoint-refining quadrature cannot resolve it and the
        // peak value itself can overflow even though the weights make the
        // whole term negligible. Split at the crossover and evaluate with
        // the peak magnitude factored out, restoring it in log space.
        const double ln_star = ln_a - ln_b;
        if (ln_star >= -0.7)
            return std::exp(ln_w) *
                   quadrature::tanh_sinh(g, 0.0, 1.0, inner_quad);
        const double shift =
            eu.real() * ln_star - eb.real() * (std::log(2.0) + ln_a);
        auto gs = [&](double u) {
            const double lu = std::log(u);
            const double hi = std::max(ln_a, ln_b + lu);
            const double lo = std::min(ln_a, ln_b + lu);
            const double ln_bracket = hi + std::log1p(std::exp(lo - hi));
            return std::exp(eu * lu - eb * ln_bracket - shift);
        };
        Complex sum;
        if (ln_star <= -700.0) {
            // The split point would underflow. Such terms only arise where
            // the contour weights are below e^-300 of the integral scale;
            // the unresolved sliver below e^-700 cannot matter there.
            sum = quadrature::tanh_sinh(gs, std::exp(-700.0), 1.0, inner_quad);
        } else {
            const double u_star = std::exp(ln_star);
            sum = quadrature::tanh_sinh(gs, 0.0, u_star, inner_quad) +
                  quadrature::tanh_sinh(gs, u_star, 1.0, inner_quad);
        }
        if (sum == Complex(0.0)) return Complex(0.0);
        return std::exp(shift + std::log(sum) + ln_w);
    };
    auto outer = [&](double th) {
        const double ln_th = (1.0 + cfg.nu) * th - 2.0 * softplus(th);
        auto inner = [&](double thp) {
            return profile(th, thp, ln_th - softplus(thp));
        };
        return quadrature::real_line(inner, mid_quad);
    };
    return cfg.R * cfg.R * std::sin(pi * cfg.nu) / (4.0 * pi) *
           quadrature::real_line(outer, quad);
}

std::pair<double, std::vector<DiscreteDosTerm>> rho_nu_total(
    double E, const PhysicalConfig& cfg) {
    return {rho_nu_continuous(E, cfg), rho_nu_discrete(cfg)};
}

DosSample dos_sample(double E, const PhysicalConfig& cfg) {
    cfg.validate();
    DosSample s;
    s.E = E;
    s.above_edge = E >= continuum_edge(cfg);
    s.rho0_c = rho0_continuous(E, cfg);
    s.rho_nu_c = rho_nu_continuous(E, cfg);
    return s;
}

Complex flat_limit_reference(Complex k2, double nu) {
    if (k2 == Complex(0.0, 0.0))
        fail(ErrorKind::domain, "flat_limit_reference: k2 = 0");
    return nu * (nu + 1.0) / (2.0 * k2);
}

}  // namespace abdisk
