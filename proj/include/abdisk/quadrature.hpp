#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "abdisk/tolerances.hpp"

namespace abdisk::quadrature {

using Complex = std::complex<double>;

struct QuadratureSpec {
  double rel_tol = tol::quad_rel_default;
  double abs_floor = tol::quad_abs_floor;
  int max_level = tol::quad_max_level;
};

// tanh-sinh rule on (a, b). Handles integrable endpoint singularities; the
// closer the exponent gets to -1 the more accuracy degrades, since nodes
// nearer than ~1e-16*(b-a) to an endpoint are skipped.
Complex tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                  const QuadratureSpec& spec = {});

// Double-exponential trapezoid over the whole real line via theta = sinh(u).
// The integrand must decay at least exponentially in |theta|.
Complex real_line(const std::function<Complex(double)>& f,
                  const QuadratureSpec& spec = {});

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

// Gauss-Jacobi rule on [-1, 1] for weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1.
GaussRule gauss_jacobi(int n, double alpha, double beta);

}  // namespace abdisk::quadrature
