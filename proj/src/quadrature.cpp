#include "abdisk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abdisk/errors.hpp"
#include "abdisk/specfun.hpp"

namespace abdisk::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Sum of f over tanh-sinh nodes u = j*h. odd_only sums only odd j (the new
// nodes when h was just halved); otherwise all j including the center.
Complex tanh_sinh_pass(const std::function<Complex(double)>& f, double a,
                       double b, double h, bool odd_only, double scale_hint) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int stride = odd_only ? 2 : 1;
  auto node = [&](double u) -> Complex {
    const double su = 0.5 * kPi * std::sinh(u);
    const double ch = std::cosh(su);
    const double wt = half * 0.5 * kPi * std::cosh(u) / (ch * ch);
    // Anchor the node to its nearest endpoint: when that endpoint is 0 the
    // node stays fully resolved arbitrarily deep into the boundary layer.
    double x;
    if (u > 0.0) {
      x = b - half * 2.0 / (std::exp(2.0 * su) + 1.0);
      if (x >= b) return Complex(0.0);
    } else if (u < 0.0) {
      x = a + half * 2.0 / (std::exp(-2.0 * su) + 1.0);
      if (x <= a) return Complex(0.0);
    } else {
      x = mid;
    }
    return wt * f(x);
  };
  Complex acc = odd_only ? Complex(0.0) : node(0.0);
  for (int dir : {+1, -1}) {
    int quiet = 0;
    for (int j = odd_only ? 1 : stride;; j += stride) {
      if (j > 100000)
        fail(ErrorKind::convergence, "tanh_sinh: node expansion ran away");
      const Complex term = node(dir * j * h);
      if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
        fail(ErrorKind::convergence, "tanh_sinh: integrand is not finite");
      acc += term;
      if (std::abs(term) <= 1e-18 * scale_hint + 1e-300) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
  }
  return acc;
}

Complex real_line_pass(const std::function<Complex(double)>& f, double h,
                       bool odd_only, double scale_hint) {
  const int stride = odd_only ? 2 : 1;
  auto node = [&](double u) -> Complex {
    return std::cosh(u) * f(std::sinh(u));
  };
  Complex acc = odd_only ? Complex(0.0) : node(0.0);
  for (int dir : {+1, -1}) {
    int quiet = 0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int j = odd_only ? 1 : stride;; j += stride) {
      const double u = dir * j * h;
      if (std::abs(u) > 7.0) break;  // theta beyond sinh(7) ~ 5.5e2
      const Complex term = node(u);
      if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
        fail(ErrorKind::convergence, "real_line: integrand is not finite");
      acc += term;
      // A sub-threshold run only justifies stopping while the terms are
      // falling: the integrand can sit many orders below its eventual peak
      // on the near side of a displaced maximum, and walking toward it is
      // the only way to find out.
      const double mag = std::abs(term);
      if (mag <= 1e-18 * scale_hint + 1e-300 && mag <= prev_mag) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      prev_mag = mag;
    }
  }
  return acc;
}

}  // namespace

Complex tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                  const QuadratureSpec& spec) {
  if (!(b > a)) fail(ErrorKind::domain, "tanh_sinh: requires b > a");
  double h = 0.5;
  Complex sum = tanh_sinh_pass(f, a, b, h, false, 1.0);
  Complex prev = h * sum;
  for (int level = 1; level <= spec.max_level; ++level) {
    h *= 0.5;
    sum += tanh_sinh_pass(f, a, b, h, true, std::abs(sum));
    const Complex cur = h * sum;
    if (std::abs(cur - prev) <=
        spec.rel_tol * std::abs(cur) + spec.abs_floor)
      return cur;
    prev = cur;
  }
  fail(ErrorKind::convergence, "tanh_sinh: did not reach the target accuracy");
}

Complex real_line(const std::function<Complex(double)>& f,
                  const QuadratureSpec& spec) {
  double h = 0.5;
  Complex sum = real_line_pass(f, h, false, 1.0);
  Complex prev = h * sum;
  for (int level = 1; level <= spec.max_level; ++level) {
    h *= 0.5;
    sum += real_line_pass(f, h, true, std::abs(sum));
    const Complex cur = h * sum;
    if (std::abs(cur - prev) <=
        spec.rel_tol * std::abs(cur) + spec.abs_floor)
      return cur;
    prev = cur;
  }
  fail(ErrorKind::convergence, "real_line: did not reach the target accuracy");
}

GaussRule gauss_legendre(int n) {
  if (n < 1) fail(ErrorKind::domain, "gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

GaussRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) fail(ErrorKind::domain, "gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    fail(ErrorKind::domain, "gauss_jacobi: weight exponents must be > -1");
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  // Roots found by Newton iteration on the recurrence; initial guesses as in
  // the classic gaujac routine, refined from the +1 end downward.
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      const double an = alpha / n, bn = beta / n;
      const double r1 = (1.0 + alpha) * (2.78 / (4.0 + n * n) + 0.768 * an / n);
      const double r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an +
                        0.83 * an * bn;
      z = 1.0 - r1 / r2;
    } else if (i == 1) {
      const double r1 = (4.1 + alpha) / ((1.0 + alpha) * (1.0 + 0.156 * alpha));
      const double r2 = 1.0 + 0.06 * (n - 8.0) * (1.0 + 0.12 * alpha) / n;
      const double r3 = 1.0 + 0.012 * beta * (1.0 + 0.25 * std::abs(alpha)) / n;
      z -= (1.0 - z) * r1 * r2 * r3;
    } else if (i == 2) {
      const double r1 = (1.67 + 0.28 * alpha) / (1.0 + 0.37 * alpha);
      const double r2 = 1.0 + 0.22 * (n - 8.0) / n;
      const double r3 = 1.0 + 8.0 * beta / ((6.28 + beta) * n * n);
      z -= (rule.x[0] - z) * r1 * r2 * r3;
    } else if (i == n - 2 && n > 3) {
      const double r1 = (1.0 + 0.235 * beta) / (0.766 + 0.119 * beta);
      const double r2 = 1.0 / (1.0 + 0.639 * (n - 4.0) / (1.0 + 0.71 * (n - 4.0)));
      const double r3 = 1.0 / (1.0 + 20.0 * alpha / ((7.5 + alpha) * n * n));
      z += (z - rule.x[i - 2]) * r1 * r2 * r3;
    } else if (i == n - 1 && n > 2) {
      const double r1 = (1.0 + 0.37 * beta) / (1.67 + 0.28 * beta);
      const double r2 = 1.0 / (1.0 + 0.22 * (n - 8.0) / n);
      const double r3 = 1.0 / (1.0 + 8.0 * alpha / ((6.28 + alpha) * n * n));
      z += (z - rule.x[i - 2]) * r1 * r2 * r3;
    } else {
      z = 3.0 * rule.x[i - 1] - 3.0 * rule.x[i - 2] + rule.x[i - 3];
    }
    double pp = 0.0;
    bool ok = false;
    for (int it = 0; it < 200; ++it) {
      const double p = specfun::jacobi_p(n, alpha, beta, z);
      pp = 0.5 * (n + alpha + beta + 1.0) *
           specfun::jacobi_p(n - 1, alpha + 1.0, beta + 1.0, z);
      const double z1 = z;
      z = z1 - p / pp;
      if (std::abs(z - z1) < 1e-15) {
        ok = true;
        break;
      }
    }
    if (!ok || !(z > -1.0 && z < 1.0))
      fail(ErrorKind::convergence, "gauss_jacobi: Newton iteration failed");
    rule.x[i] = z;
    const double lg = std::lgamma(n + alpha + 1.0) + std::lgamma(n + beta + 1.0) -
                      std::lgamma(n + alpha + beta + 1.0) - std::lgamma(n + 2.0);
    rule.w[i] = -std::exp(lg) * (2.0 * n + alpha + beta + 2.0) /
                (n + alpha + beta + 1.0) * std::pow(2.0, alpha + beta) /
                (pp * specfun::jacobi_p(n + 1, alpha, beta, z));
  }
  // Reverse into ascending order for consistency with gauss_legendre.
  std::reverse(rule.x.begin(), rule.x.end());
  std::reverse(rule.w.begin(), rule.w.end());
  return rule;
}

}  // namespace abdisk::quadrature
