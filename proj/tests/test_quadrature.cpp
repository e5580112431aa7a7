#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "abdisk/errors.hpp"
#include "abdisk/quadrature.hpp"
#include "abdisk/specfun.hpp"

using namespace abdisk;
using quadrature::Complex;
using quadrature::QuadratureSpec;

namespace {
const double pi = specfun::pi;

double beta_fn(double p, double q) {
  return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
}
}  // namespace

TEST_CASE("tanh-sinh on smooth integrands") {
  // int_0^2 e^x cos x dx = (e^2 (cos 2 + sin 2) - 1) / 2
  const Complex got = quadrature::tanh_sinh(
      [](double x) { return Complex(std::exp(x) * std::cos(x)); }, 0.0, 2.0);
  const double want = 0.5 * (std::exp(2.0) * (std::cos(2.0) + std::sin(2.0)) - 1.0);
  CHECK(std::abs(got.real() - want) < 1e-12 * std::abs(want));
  CHECK(std::abs(got.imag()) < 1e-14);
}

TEST_CASE("tanh-sinh absorbs endpoint singularities") {
  const Complex inv_sqrt = quadrature::tanh_sinh(
      [](double x) { return Complex(1.0 / std::sqrt(x)); }, 0.0, 1.0);
  CHECK(std::abs(inv_sqrt.real() - 2.0) < 1e-10);

  const Complex log_int = quadrature::tanh_sinh(
      [](double x) { return Complex(std::log(x)); }, 0.0, 1.0);
  CHECK(std::abs(log_int.real() + 1.0) < 1e-12);

  // Both endpoints singular: int x^{-0.3} (1-x)^{-0.4} = B(0.7, 0.6)
  const Complex bt = quadrature::tanh_sinh(
      [](double x) { return Complex(std::pow(x, -0.3) * std::pow(1.0 - x, -0.4)); },
      0.0, 1.0);
  CHECK(std::abs(bt.real() - beta_fn(0.7, 0.6)) < 1e-9 * beta_fn(0.7, 0.6));
}

TEST_CASE("tanh-sinh reports non-convergence") {
  QuadratureSpec tight;
  tight.rel_tol = 1e-16;
  tight.abs_floor = 0.0;
  tight.max_level = 1;
  CHECK_THROWS_AS(
      quadrature::tanh_sinh(
          [](double x) { return Complex(std::cos(37.0 * x * x)); }, 0.0, 3.0,
          tight),
      Error);
}

TEST_CASE("real-line rule on known transforms") {
  // Gaussian
  const Complex g = quadrature::real_line(
      [](double th) { return Complex(std::exp(-0.5 * th * th)); });
  CHECK(std::abs(g.real() - std::sqrt(2.0 * pi)) < 1e-12);

  // int sech(theta) e^{i theta} dtheta = pi sech(pi/2)
  const Complex s = quadrature::real_line([](double th) {
    return std::exp(Complex(0.0, th)) / std::cosh(th);
  });
  CHECK(std::abs(s - Complex(pi / std::cosh(0.5 * pi))) < 1e-11);

  // Asymmetric exponential decay, the shape of the vortex correction
  // integrand: int e^{a theta} / (1 + e^theta) = pi / sin(pi a)
  const double a = 0.6;
  const Complex e = quadrature::real_line([a](double th) {
    if (th > 40.0) return Complex(std::exp((a - 1.0) * th));
    return Complex(std::exp(a * th) / (1.0 + std::exp(th)));
  });
  CHECK(std::abs(e.real() - pi / std::sin(pi * a)) < 1e-11);
}

TEST_CASE("Gauss-Legendre nodes and exactness") {
  const auto rule = quadrature::gauss_legendre(20);
  double wsum = 0.0;
  for (double w : rule.w) wsum += w;
  CHECK(std::abs(wsum - 2.0) < 1e-14);
  for (int k : {2, 8, 20, 38}) {
    double s = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i)
      s += rule.w[i] * std::pow(rule.x[i], k);
    CHECK(std::abs(s - 2.0 / (k + 1.0)) < 1e-13);
  }
}

TEST_CASE("Gauss-Jacobi total weight and first moment") {
  const double cases[][2] = {{0.7, -0.3}, {1.5, 0.0}, {-0.5, -0.5}, {0.86, 0.8}};
  for (auto& ab : cases) {
    const double alpha = ab[0], beta = ab[1];
    const auto rule = quadrature::gauss_jacobi(24, alpha, beta);
    const double total =
        std::pow(2.0, alpha + beta + 1.0) * beta_fn(alpha + 1.0, beta + 1.0);
    double wsum = 0.0, xsum = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) {
      CHECK(rule.w[i] > 0.0);
      CHECK(rule.x[i] > -1.0);
      CHECK(rule.x[i] < 1.0);
      if (i) CHECK(rule.x[i] > rule.x[i - 1]);
      wsum += rule.w[i];
      xsum += rule.w[i] * rule.x[i];
    }
    CHECK(std::abs(wsum - total) < 1e-12 * total);
    const double mean = (beta - alpha) / (alpha + beta + 2.0);
    CHECK(std::abs(xsum - total * mean) < 1e-12 * total);
  }
}

TEST_CASE("Gauss-Jacobi agrees with tanh-sinh on a weighted integrand") {
  const double alpha = 0.9, beta = -0.4;
  auto smooth = [](double x) { return std::cos(3.0 * x + 0.4) * std::exp(0.2 * x); };
  const auto rule = quadrature::gauss_jacobi(40, alpha, beta);
  double gj = 0.0;
  for (size_t i = 0; i < rule.x.size(); ++i) gj += rule.w[i] * smooth(rule.x[i]);
  const Complex ts = quadrature::tanh_sinh(
      [&](double x) {
        return Complex(std::pow(1.0 - x, alpha) * std::pow(1.0 + x, beta) *
                       smooth(x));
      },
      -1.0, 1.0);
  // tanh-sinh truncates ~1e-16 from the singular end at x = -1, which costs
  // ~(1e-16)^(1+beta) here; the Gauss rule is the more accurate of the two.
  CHECK(std::abs(gj - ts.real()) < 1e-8 * std::abs(gj));
}

TEST_CASE("Gauss-Jacobi with unit weight matches Gauss-Legendre") {
  const auto gj = quadrature::gauss_jacobi(8, 0.0, 0.0);
  const auto gl = quadrature::gauss_legendre(8);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(gj.x[i] - gl.x[i]) < 1e-12);
    CHECK(std::abs(gj.w[i] - gl.w[i]) < 1e-12);
  }
}

TEST_CASE("rules reject bad parameters") {
  CHECK_THROWS_AS(quadrature::gauss_jacobi(8, -1.2, 0.0), Error);
  CHECK_THROWS_AS(quadrature::gauss_legendre(0), Error);
  CHECK_THROWS_AS(quadrature::tanh_sinh([](double) { return Complex(1.0); },
                                        1.0, 1.0),
                  Error);
}
