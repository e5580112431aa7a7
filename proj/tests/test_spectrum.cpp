#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "abdisk/errors.hpp"
#include "abdisk/quadrature.hpp"
#include "abdisk/spectrum.hpp"
#include "abdisk/tolerances.hpp"

using namespace abdisk;
using abdisk::quadrature::QuadratureSpec;
using abdisk::quadrature::tanh_sinh;

namespace {

// Radial part of the vortex Hamiltonian acting on f(t) e^{il phi}; the
// angular derivatives contribute through lam = l + nu.
double apply_vortex_op(const std::function<double(double)>& f, double t, double lam,
                       const PhysicalConfig& cfg, double h) {
    double f0 = f(t);
    double d1 = (f(t + h) - f(t - h)) / (2.0 * h);
    double d2 = (f(t + h) - 2.0 * f0 + f(t - h)) / (h * h);
    double omt = 1.0 - t;
    double bracket = 4.0 * t * d2 + 4.0 * d1 -
                     (lam * lam / t + 4.0 * cfg.b * lam / omt +
                      4.0 * cfg.b * cfg.b * t / (omt * omt)) *
                         f0;
    return -(omt * omt) / (cfg.R * cfg.R) * bracket;
}

// Endpoint exponents of the radial factor: t^{pt/2} at 0 and (1-t)^{po}
// at 1, straight from the level formulas.
void radial_exponents(int n, int l, LevelFamily fam, const PhysicalConfig& cfg,
                      double& pt, double& po) {
    double lam = l + cfg.nu;
    double ab = std::abs(cfg.b);
    pt = fam == LevelFamily::vortex_plus ? lam : std::abs(lam);
    if (fam == LevelFamily::free_landau) po = ab - n;
    if (fam == LevelFamily::vortex_plus) po = cfg.b - n - (cfg.nu + 1.0);
    if (fam == LevelFamily::vortex_minus) po = ab - n + cfg.nu;
}

// Inner product over d mu_t. The integrand is a Jacobi weight times a
// polynomial, so a small Gauss-Jacobi rule integrates it exactly.
double radial_inner(int n1, int n2, int l, LevelFamily fam, const PhysicalConfig& cfg) {
    double pt, po1, po2;
    radial_exponents(n1, l, fam, cfg, pt, po1);
    radial_exponents(n2, l, fam, cfg, pt, po2);
    double beta_w = pt;
    double alpha_w = po1 + po2 - 2.0;
    auto rule = abdisk::quadrature::gauss_jacobi(16, alpha_w, beta_w);
    double acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) {
        double t = 0.5 * (rule.x[i] + 1.0);
        double omt = 1.0 - t;
        double smooth = eigenfunction_radial(n1, l, t, fam, cfg) /
                        std::pow(t, 0.5 * beta_w) / std::pow(omt, po1) *
                        (eigenfunction_radial(n2, l, t, fam, cfg) /
                         std::pow(t, 0.5 * beta_w) / std::pow(omt, po2));
        acc += rule.w[i] * smooth;
    }
    return acc * cfg.R * cfg.R / 2.0 * std::pow(2.0, -(alpha_w + beta_w + 1.0));
}

}  // namespace

TEST_CASE("continuum edge") {
    CHECK(continuum_edge({0.0, 0.0, 1.0}) == 1.0);
    CHECK(continuum_edge({1.0, 0.0, 1.0}) == 5.0);
    CHECK(continuum_edge({1.0, 0.0, 2.0}) == 1.25);
}

TEST_CASE("level enumeration matches the closed formulas") {
    CHECK(landau_levels({0.3, 0.0, 1.0}).empty());
    CHECK(landau_levels({0.5, 0.0, 1.0}).empty());  // strict bound
    CHECK(landau_levels({-0.4, -0.5, 1.0}).empty());

    auto one = landau_levels({1.0, 0.0, 1.0});
    REQUIRE(one.size() == 1);
    CHECK(one[0].value == 4.0);
    CHECK(one[0].l_infinite);
    CHECK(one[0].weight == doctest::Approx(1.0 / pi).epsilon(1e-15));

    auto two = landau_levels({2.0, 0.0, 1.0});
    REQUIRE(two.size() == 2);
    CHECK(two[0].value == 8.0);
    CHECK(two[1].value == 16.0);
    CHECK(two[0].l_max == 0);  // b > 0: l = 0, -1, -2, ...

    // Half-integer |b|: the borderline n is excluded.
    CHECK(landau_levels({2.5, 0.0, 1.0}).size() == 2);
    CHECK(landau_levels({2.6, 0.0, 1.0}).size() == 3);

    // Mirror field sees the other semi-infinite channel set.
    auto neg = landau_levels({-2.0, -0.5, 1.0});
    REQUIRE(neg.size() == 2);
    CHECK(neg[0].value == 8.0);
    CHECK(neg[0].l_min == 1);

    double edge = continuum_edge({2.6, 0.0, 1.0});
    for (const auto& lv : landau_levels({2.6, 0.0, 1.0})) CHECK(lv.value < edge);
}

TEST_CASE("vortex level enumeration") {
    auto vp = vortex_levels({2.0, -0.5, 1.0});
    REQUIRE(vp.size() == 1);
    CHECK(vp[0].value == 13.0);
    CHECK(vp[0].family == LevelFamily::vortex_plus);
    CHECK(vp[0].l_min == 1);
    CHECK(vp[0].l_max == 1);
    CHECK(vp[0].weight == 1.0);

    auto vm = vortex_levels({-2.0, -0.5, 1.0});
    REQUIRE(vm.size() == 1);
    CHECK(vm[0].value == 13.0);
    CHECK(vm[0].family == LevelFamily::vortex_minus);
    CHECK(vm[0].l_min == 0);
    CHECK(vm[0].l_max == 0);

    CHECK(vortex_levels({0.4, -0.5, 1.0}).empty());
    CHECK(vortex_levels({-0.4, -0.5, 1.0}).empty());
    CHECK(vortex_levels({0.0, -0.5, 1.0}).empty());

    // Degeneracy grows with n.
    auto big = vortex_levels({4.2, -0.3, 1.0});  // n < 4.2 - 0.7 - 0.5 = 3
    REQUIRE(big.size() == 3);
    CHECK(big[2].l_max == 3);
    CHECK(big[2].weight == 3.0);

    // nu -> 0^- continuity onto the Landau values (b < 0 family).
    auto lim = vortex_levels({-2.0, -1e-12, 1.0});
    auto land = landau_levels({-2.0, 0.0, 1.0});
    REQUIRE(lim.size() == land.size());
    for (size_t i = 0; i < lim.size(); ++i)
        CHECK(std::abs(lim[i].value - land[i].value) < 1e-10);
}

TEST_CASE("eigenfunctions satisfy the radial equation") {
    struct Case {
        PhysicalConfig cfg;
        LevelFamily fam;
        int n, l;
        double energy;
    };
    PhysicalConfig bp{2.0, -0.5, 1.0};
    PhysicalConfig bm{-2.0, -0.5, 1.0};
    PhysicalConfig wide{3.2, -0.4, 1.0};
    Case cases[] = {
        {bp, LevelFamily::free_landau, 0, 0, 8.0},
        {bp, LevelFamily::free_landau, 1, -3, 16.0},
        {bp, LevelFamily::vortex_plus, 0, 1, 13.0},
        {bm, LevelFamily::free_landau, 1, 2, 16.0},
        {bm, LevelFamily::vortex_minus, 0, 0, 13.0},
        {wide, LevelFamily::vortex_plus, 1, 1, vortex_levels(wide)[1].value},
        {wide, LevelFamily::vortex_plus, 1, 2, vortex_levels(wide)[1].value},
    };
    for (const auto& c : cases) {
        double lam = c.l + c.cfg.nu;
        auto f = [&](double t) {
            return eigenfunction_radial(c.n, c.l, t, c.fam, c.cfg);
        };
        for (double t : {0.3, 0.6}) {
            double got = apply_vortex_op(f, t, lam, c.cfg, tol::fd_step);
            double want = c.energy * f(t);
            double scale = std::max(std::abs(want), std::abs(f(t)));
            CHECK(std::abs(got - want) / scale < 1e-5);
        }
    }
}

TEST_CASE("eigenfunction structure") {
    PhysicalConfig cfg{2.0, -0.5, 1.0};
    // n = 0: polynomial factor is 1, pure power law.
    double t = 0.37;
    double got = eigenfunction_radial(0, 0, t, LevelFamily::free_landau, cfg);
    CHECK(got == doctest::Approx(std::pow(t, 0.25) * std::pow(1.0 - t, 2.0)).epsilon(1e-14));

    // Angular-momentum eigenfunction property under rotation.
    auto z = DiskPoint::from_polar(0.5, 0.8);
    auto zr = DiskPoint::from_polar(0.5, 0.8 + 0.4);
    int l = -2;
    Complex ratio = eigenfunction(1, l, zr, LevelFamily::free_landau, cfg) /
                    eigenfunction(1, l, z, LevelFamily::free_landau, cfg);
    CHECK(std::abs(ratio - std::polar(1.0, l * 0.4)) < 1e-12);
}

TEST_CASE("inadmissible quantum numbers are rejected") {
    PhysicalConfig bp{2.0, -0.5, 1.0};
    auto z = DiskPoint(Complex(0.3));
    CHECK_THROWS_AS(eigenfunction(2, 0, z, LevelFamily::free_landau, bp), Error);
    CHECK_THROWS_AS(eigenfunction(0, 1, z, LevelFamily::free_landau, bp), Error);
    CHECK_THROWS_AS(eigenfunction(1, 0, z, LevelFamily::vortex_plus, bp), Error);
    CHECK_THROWS_AS(eigenfunction(0, 2, z, LevelFamily::vortex_plus, bp), Error);
    CHECK_THROWS_AS(eigenfunction(0, 0, z, LevelFamily::vortex_minus, bp), Error);
    CHECK_THROWS_AS(eigenfunction(-1, 0, z, LevelFamily::free_landau, bp), Error);

    PhysicalConfig bm{-2.0, -0.5, 1.0};
    CHECK_THROWS_AS(eigenfunction(0, -1, z, LevelFamily::vortex_minus, bm), Error);
    CHECK_THROWS_AS(eigenfunction(0, 0, z, LevelFamily::free_landau, bm), Error);

    PhysicalConfig weak{0.3, -0.5, 1.0};
    CHECK_THROWS_AS(eigenfunction(0, 0, z, LevelFamily::free_landau, weak), Error);

    // Power counting for the first excluded n: the L2 weight exponent
    // 2(|b| - n) - 2 at t -> 1 drops to -2, which is not integrable.
    double excluded_exponent = 2.0 * (2.0 - 2) - 2.0;
    CHECK(excluded_exponent <= -1.0);
}

TEST_CASE("square integrability and radial orthogonality") {
    // Admissible states have finite norm over the invariant measure.
    PhysicalConfig cfg{2.6, -0.4, 1.0};
    double n00 = radial_inner(0, 0, 0, LevelFamily::free_landau, cfg);
    double n11 = radial_inner(1, 1, 0, LevelFamily::free_landau, cfg);
    CHECK(std::isfinite(n00));
    CHECK(n00 > 0.0);

    // Same l, different n: orthogonal within quadrature accuracy.
    double x01 = radial_inner(0, 1, 0, LevelFamily::free_landau, cfg);
    CHECK(std::abs(x01) / std::sqrt(n00 * n11) < 1e-6);

    double x02 = radial_inner(0, 2, -1, LevelFamily::free_landau, cfg);
    double n22 = radial_inner(2, 2, -1, LevelFamily::free_landau, cfg);
    double n00b = radial_inner(0, 0, -1, LevelFamily::free_landau, cfg);
    CHECK(std::abs(x02) / std::sqrt(n00b * n22) < 1e-6);

    PhysicalConfig vp{3.2, -0.4, 1.0};
    double v01 = radial_inner(0, 1, 1, LevelFamily::vortex_plus, vp);
    double v00 = radial_inner(0, 0, 1, LevelFamily::vortex_plus, vp);
    double v11 = radial_inner(1, 1, 1, LevelFamily::vortex_plus, vp);
    CHECK(std::abs(v01) / std::sqrt(v00 * v11) < 1e-6);
}
