#include "abdisk/spectrum.hpp"

#include <cmath>

#include "abdisk/errors.hpp"
#include "abdisk/specfun.hpp"
#include "abdisk/tolerances.hpp"

namespace abdisk {

namespace {

// Number of admissible n with n < bound (strict). The margin keeps exact
// half-integer parameter combinations on the excluded side.
int level_count(double bound) {
    if (bound <= tol::level_margin) return 0;
    return static_cast<int>(std::ceil(bound - tol::level_margin));
}

double energy_from_shift(double b, double shift, double R) {
    return (1.0 + 4.0 * b * b - 4.0 * shift * shift) / (R * R);
}

struct RadialForm {
    double power_t;    // exponent of t^{1/2}, i.e. the |l+nu|-type index beta
    double power_omt;  // exponent of (1 - t)
    int degree;
    double alpha;
};

RadialForm radial_form(int n, int l, LevelFamily family, const PhysicalConfig& cfg) {
    double ab = std::abs(cfg.b);
    double lam = l + cfg.nu;
    switch (family) {
        case LevelFamily::free_landau: {
            if (cfg.b == 0.0 || !(n >= 0 && n < ab - 0.5 - tol::level_margin))
                fail(ErrorKind::quantum_number, "no free-Landau level with this n");
            if (cfg.b > 0.0 ? l > 0 : l < 1)
                fail(ErrorKind::quantum_number, "l outside the free-Landau channel set");
            return {std::abs(lam), ab - n, n, 2.0 * ab - 2.0 * n - 1.0};
        }
        case LevelFamily::vortex_plus: {
            if (!(cfg.b > 0.0) ||
                !(n >= 0 && n < cfg.b - (cfg.nu + 1.0) - 0.5 - tol::level_margin))
                fail(ErrorKind::quantum_number, "no vortex-plus level with this n");
            if (l < 1 || l > n + 1)
                fail(ErrorKind::quantum_number, "l outside [1, n+1] for vortex-plus");
            double omt_pow = cfg.b - n - (cfg.nu + 1.0);
            return {lam, omt_pow, n + 1 - l, 2.0 * omt_pow - 1.0};
        }
        case LevelFamily::vortex_minus: {
            if (!(cfg.b < 0.0) ||
                !(n >= 0 && n < ab + cfg.nu - 0.5 - tol::level_margin))
                fail(ErrorKind::quantum_number, "no vortex-minus level with this n");
            if (l < -n || l > 0)
                fail(ErrorKind::quantum_number, "l outside [-n, 0] for vortex-minus");
            return {std::abs(lam), ab - n + cfg.nu, n + l, 2.0 * (ab - n + cfg.nu) - 1.0};
        }
    }
    fail(ErrorKind::quantum_number, "unknown level family");
}

}  // namespace

double continuum_edge(const PhysicalConfig& cfg) {
    cfg.validate();
    return (1.0 + 4.0 * cfg.b * cfg.b) / (cfg.R * cfg.R);
}

std::vector<EnergyLevel> landau_levels(const PhysicalConfig& cfg) {
    cfg.validate();
    double ab = std::abs(cfg.b);
    std::vector<EnergyLevel> out;
    int count = level_count(ab - 0.5);
    for (int n = 0; n < count; ++n) {
        EnergyLevel lv;
        lv.value = energy_from_shift(cfg.b, ab - n - 0.5, cfg.R);
        lv.n = n;
        lv.family = LevelFamily::free_landau;
        lv.l_infinite = true;
        if (cfg.b > 0.0) {
            lv.l_max = 0;
            lv.l_min = 0;
        } else {
            lv.l_min = 1;
            lv.l_max = 1;
        }
        lv.weight = 2.0 / (pi * cfg.R * cfg.R) * (ab - n - 0.5);
        out.push_back(lv);
    }
    return out;
}

std::vector<EnergyLevel> vortex_levels(const PhysicalConfig& cfg) {
    cfg.validate();
    double ab = std::abs(cfg.b);
    std::vector<EnergyLevel> out;
    if (cfg.b > 0.0) {
        int count = level_count(cfg.b - (cfg.nu + 1.0) - 0.5);
        for (int n = 0; n < count; ++n) {
            EnergyLevel lv;
            lv.value = energy_from_shift(cfg.b, cfg.b - n - (cfg.nu + 1.0) - 0.5, cfg.R);
            lv.n = n;
            lv.family = LevelFamily::vortex_plus;
            lv.l_min = 1;
            lv.l_max = n + 1;
            lv.weight = n + 1.0;
            out.push_back(lv);
        }
    } else if (cfg.b < 0.0) {
        int count = level_count(ab + cfg.nu - 0.5);
        for (int n = 0; n < count; ++n) {
            EnergyLevel lv;
            lv.value = energy_from_shift(cfg.b, ab - n + cfg.nu - 0.5, cfg.R);
            lv.n = n;
            lv.family = LevelFamily::vortex_minus;
            lv.l_min = -n;
            lv.l_max = 0;
            lv.weight = n + 1.0;
            out.push_back(lv);
        }
    }
    return out;
}

double eigenfunction_radial(int n, int l, double t, LevelFamily family,
                            const PhysicalConfig& cfg) {
    cfg.validate();
    if (!(t >= 0.0 && t < 1.0)) fail(ErrorKind::domain, "t must lie in [0, 1)");
    RadialForm f = radial_form(n, l, family, cfg);
    return std::pow(t, 0.5 * f.power_t) * std::pow(1.0 - t, f.power_omt) *
           specfun::jacobi_p(f.degree, f.alpha, f.power_t, 2.0 * t - 1.0);
}

Complex eigenfunction(int n, int l, const DiskPoint& z, LevelFamily family,
                      const PhysicalConfig& cfg) {
    double radial = eigenfunction_radial(n, l, z.t(), family, cfg);
    return radial * std::polar(1.0, l * z.phi());
}

}  // namespace abdisk
