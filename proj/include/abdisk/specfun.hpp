#pragma once

#include <complex>

namespace abdisk::specfun {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;

// True if z lies within eps of a nonpositive integer (pole of Gamma).
bool near_nonpositive_integer(Complex z, double eps);

// Principal-ish log Gamma: Lanczos for Re z >= 0.5, reflection otherwise.
// The imaginary part may differ from the principal branch by a multiple of
// 2*pi; all consumers exponentiate sums of ln_gamma values, which is immune
// to that offset. Throws pole if z is within pole_proximity of 0, -1, -2, ...
Complex ln_gamma(Complex z);

// Digamma via upward recurrence to Re z > 8 plus the Bernoulli asymptotic
// series. Throws pole on nonpositive integers.
Complex digamma(Complex z);

// Rising factorial (a)_n, n >= 0.
Complex pochhammer(Complex a, int n);

// Gauss hypergeometric 2F1(a, b; c; x) for real x in [0, 1].
//
// Evaluation strategy:
//   * a or b within pole_proximity of a nonpositive integer: terminating sum;
//   * x <= 0.5: defining series, long-double accumulation;
//   * x = 1: Gauss summation (requires Re(c-a-b) > 0 unless terminating);
//   * x > 0.5, c-a-b within pole_proximity of an integer m: logarithmic
//     connection formula at argument 1-x (Euler transformation first when
//     m < 0);
//   * x > 0.5 otherwise: two-term connection formula at argument 1-x.
// Throws pole if c is within pole_proximity of a nonpositive integer, and
// convergence if a series stalls.
Complex hyp2f1(Complex a, Complex b, Complex c, double x);

// Jacobi polynomial P_n^(alpha,beta)(x) by the three-term recurrence.
// Requires n >= 0 and alpha + beta > -1.
double jacobi_p(int n, double alpha, double beta, double x);

namespace detail {
// The two internal evaluation paths, exposed so self-checks can compare them
// on the overlap window x in (0.4, 0.6). series_path requires x < 1;
// connection_path requires x > 0 and non-integer c-a-b.
Complex series_path(Complex a, Complex b, Complex c, double x);
Complex connection_path(Complex a, Complex b, Complex c, double x);
}  // namespace detail

}  // namespace abdisk::specfun
