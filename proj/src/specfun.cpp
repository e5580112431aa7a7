#include "abdisk/specfun.hpp"

#include <cmath>
#include <cstdlib>

#include "abdisk/errors.hpp"
#include "abdisk/tolerances.hpp"

namespace abdisk::specfun {

namespace {

using CLD = std::complex<long double>;

// 14-term Lanczos series; relative error ~1e-15 for Re z > 0.
Complex lanczos_ln_gamma(Complex z) {
  static constexpr double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  Complex y = z;
  Complex tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex ser(0.999999999999997092, 0.0);
  for (double c : cof) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

// log(sin(pi z)) modulo 2*pi*i, safe against overflow for large |Im z|.
// The real part is reduced by its nearest integer first: sin(pi z) near a
// zero must be formed from the exact offset, otherwise the reflection
// formula loses the digits the pole magnifies.
Complex ln_sin_pi(Complex z) {
  const double k = std::round(z.real());
  const Complex zr(z.real() - k, z.imag());
  // sin(pi(k + zr)) = (-1)^k sin(pi zr); an i*pi branch offset is harmless.
  const Complex flip =
      (std::fmod(std::abs(k), 2.0) == 1.0) ? Complex(0.0, pi) : Complex(0.0);
  const Complex i(0.0, 1.0);
  if (std::abs(z.imag()) < 20.0) return std::log(std::sin(pi * zr)) + flip;
  if (z.imag() > 0.0) {
    // sin(pi zr) = (i/2) e^{-i pi zr} (1 - e^{2 i pi zr}), second factor ~ 1.
    return std::log(Complex(0.0, 0.5)) - i * pi * zr +
           std::log(1.0 - std::exp(2.0 * i * pi * zr)) + flip;
  }
  return std::log(Complex(0.0, -0.5)) + i * pi * zr +
         std::log(1.0 - std::exp(-2.0 * i * pi * zr)) + flip;
}

// exp(sum ln Gamma(num) - sum ln Gamma(den)); a pole in a denominator makes
// the quotient vanish. Poles in numerators are the caller's bug.
Complex gamma_quotient(std::initializer_list<Complex> num,
                       std::initializer_list<Complex> den) {
  for (Complex d : den)
    if (near_nonpositive_integer(d, tol::pole_proximity)) return 0.0;
  Complex s = 0.0;
  for (Complex n : num) s += ln_gamma(n);
  for (Complex d : den) s -= ln_gamma(d);
  return std::exp(s);
}

// Defining series at argument x; long-double accumulation keeps the partial
// sums accurate through the cancellation-free growth seen in large-|l| mode
// sums. Requires x < 1 (or a terminating numerator parameter).
Complex series_2f1(Complex a, Complex b, Complex c, double x,
                   long max_terms = tol::series_max_terms) {
  CLD A(a), B(b), C(c);
  CLD term(1.0L), sum(1.0L);
  int quiet = 0;
  for (long n = 0; n < max_terms; ++n) {
    CLD ln(static_cast<long double>(n));
    term *= (A + ln) * (B + ln) / ((C + ln) * (ln + 1.0L)) *
            static_cast<long double>(x);
    sum += term;
    if (term == CLD(0.0L)) break;
    if (std::abs(term) <= tol::series_eps * std::abs(sum)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    if (n + 1 == max_terms)
      fail(ErrorKind::convergence, "hyp2f1: series did not converge");
  }
  return Complex(static_cast<double>(sum.real()),
                 static_cast<double>(sum.imag()));
}

// Terminating sum of exactly nterms+1 terms (numerator parameter at or near
// a nonpositive integer -nterms). Valid for any x including 1.
Complex terminating_2f1(Complex a, Complex b, Complex c, double x, int nterms) {
  CLD A(a), B(b), C(c);
  CLD term(1.0L), sum(1.0L);
  for (int n = 0; n < nterms; ++n) {
    CLD ln(static_cast<long double>(n));
    term *= (A + ln) * (B + ln) / ((C + ln) * (ln + 1.0L)) *
            static_cast<long double>(x);
    sum += term;
  }
  return Complex(static_cast<double>(sum.real()),
                 static_cast<double>(sum.imag()));
}

int nonpositive_integer_order(Complex z) {
  return static_cast<int>(-std::lround(z.real()));
}

// Logarithmic connection formula for integer m = c-a-b >= 0, argument
// s = 1-x in (0, 0.5). Handles the x=1 degeneracy of the two-term formula.
Complex log_case_2f1(Complex a, Complex b, Complex c, int m, double x) {
  const double s = 1.0 - x;
  const Complex cm(static_cast<double>(m));

  Complex head = 0.0;
  if (m >= 1) {
    Complex a1 = gamma_quotient({cm, c}, {a + cm, b + cm});
    if (a1 != 0.0) {
      CLD term(1.0L), sum(1.0L);
      for (int n = 0; n + 1 <= m - 1; ++n) {
        CLD ln(static_cast<long double>(n));
        term *= (CLD(a) + ln) * (CLD(b) + ln) /
                ((ln + 1.0L) * (CLD(1.0 - m) + ln)) *
                static_cast<long double>(s);
        sum += term;
      }
      head = a1 * Complex(static_cast<double>(sum.real()),
                          static_cast<double>(sum.imag()));
    }
  }

  Complex a2 = gamma_quotient({c}, {a, b});
  if (m % 2 != 0) a2 = -a2;
  Complex tail = 0.0;
  if (a2 != 0.0) {
    const double lns = std::log(s);
    // Digamma values advance by recurrence as n grows.
    Complex psi_a = digamma(a + cm);
    Complex psi_b = digamma(b + cm);
    double psi_n1 = -euler_gamma;           // psi(1)
    double psi_nm = psi_n1;                 // psi(m+1) built below
    for (int j = 1; j <= m; ++j) psi_nm += 1.0 / j;

    // Leading factorial coefficient 1/(0! * m!).
    CLD coeff(1.0L);
    for (int j = 1; j <= m; ++j) coeff /= static_cast<long double>(j);

    CLD sum(0.0L);
    int quiet = 0;
    for (long n = 0;; ++n) {
      Complex bracket = Complex(lns - psi_n1 - psi_nm) + psi_a + psi_b;
      CLD term = coeff * CLD(bracket);
      sum += term;
      if (std::abs(term) <= tol::series_eps * std::abs(sum)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
      if (n >= tol::series_max_terms)
        fail(ErrorKind::convergence, "hyp2f1: log series did not converge");
      coeff *= (CLD(a) + CLD(cm) + CLD((double)n)) *
               (CLD(b) + CLD(cm) + CLD((double)n)) /
               ((CLD((double)n) + 1.0L) * (CLD((double)n) + CLD(cm) + 1.0L)) *
               static_cast<long double>(s);
      psi_a += 1.0 / (a + cm + Complex(static_cast<double>(n)));
      psi_b += 1.0 / (b + cm + Complex(static_cast<double>(n)));
      psi_n1 += 1.0 / (n + 1.0);
      psi_nm += 1.0 / (n + m + 1.0);
    }
    tail = a2 * std::pow(s, m) *
           Complex(static_cast<double>(sum.real()),
                   static_cast<double>(sum.imag()));
  }
  return head - tail;
}

}  // namespace

bool near_nonpositive_integer(Complex z, double eps) {
  if (std::abs(z.imag()) > eps) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < eps;
}

Complex ln_gamma(Complex z) {
  if (near_nonpositive_integer(z, tol::gamma_pole))
    fail(ErrorKind::pole, "ln_gamma: argument at a nonpositive integer");
  if (z.real() >= 0.5) return lanczos_ln_gamma(z);
  return std::log(pi) - ln_sin_pi(z) - lanczos_ln_gamma(1.0 - z);
}

Complex digamma(Complex z) {
  if (near_nonpositive_integer(z, tol::gamma_pole))
    fail(ErrorKind::pole, "digamma: argument at a nonpositive integer");
  Complex acc = 0.0;
  while (z.real() <= 8.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // B_{2k}/(2k) for 2k = 2..16.
  static constexpr double coef[8] = {1.0 / 12,  -1.0 / 120,      1.0 / 252,
                                     -1.0 / 240, 1.0 / 132,      -691.0 / 32760,
                                     1.0 / 12,  -3617.0 / 8160};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex p = inv2, s = 0.0;
  for (double c : coef) {
    s += c * p;
    p *= inv2;
  }
  return acc + std::log(z) - 0.5 * inv - s;
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) fail(ErrorKind::domain, "pochhammer: n must be >= 0");
  Complex p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

namespace detail {

Complex series_path(Complex a, Complex b, Complex c, double x) {
  return series_2f1(a, b, c, x);
}

Complex connection_path(Complex a, Complex b, Complex c, double x) {
  const double s = 1.0 - x;
  const Complex m = c - a - b;
  Complex f1 = gamma_quotient({c, m}, {c - a, c - b});
  if (f1 != 0.0) f1 *= series_2f1(a, b, 1.0 - m, s);
  Complex f2 = gamma_quotient({c, -m}, {a, b});
  if (f2 != 0.0) f2 *= std::pow(Complex(s), m) * series_2f1(c - a, c - b, 1.0 + m, s);
  return f1 + f2;
}

}  // namespace detail

Complex hyp2f1(Complex a, Complex b, Complex c, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    fail(ErrorKind::domain, "hyp2f1: x must lie in [0, 1]");
  if (near_nonpositive_integer(c, tol::pole_proximity))
    fail(ErrorKind::pole, "hyp2f1: c at a nonpositive integer");

  const bool a_term = near_nonpositive_integer(a, tol::pole_proximity);
  const bool b_term = near_nonpositive_integer(b, tol::pole_proximity);
  if (a_term || b_term) {
    int na = a_term ? nonpositive_integer_order(a) : tol::series_max_terms;
    int nb = b_term ? nonpositive_integer_order(b) : tol::series_max_terms;
    return terminating_2f1(a, b, c, x, std::min(na, nb));
  }

  if (x == 1.0) {
    const Complex m = c - a - b;
    if (m.real() <= tol::pole_proximity)
      fail(ErrorKind::domain, "hyp2f1: divergent at x = 1 (Re(c-a-b) <= 0)");
    return gamma_quotient({c, m}, {c - a, c - b});
  }

  if (x <= 0.5) return series_2f1(a, b, c, x);

  const Complex m = c - a - b;
  const double mr = std::round(m.real());
  if (std::abs(m.imag()) < tol::pole_proximity &&
      std::abs(m.real() - mr) < tol::pole_proximity) {
    const int mi = static_cast<int>(std::lround(mr));
    if (mi < 0) {
      // Euler transformation maps onto the m >= 0 logarithmic case.
      return std::pow(Complex(1.0 - x), m) * hyp2f1(c - a, c - b, c, x);
    }
    return log_case_2f1(a, b, c, mi, x);
  }
  return detail::connection_path(a, b, c, x);
}

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) fail(ErrorKind::domain, "jacobi_p: n must be >= 0");
  // alpha, beta > -1 keeps every recurrence denominator nonzero.
  if (alpha <= -1.0 || beta <= -1.0)
    fail(ErrorKind::domain, "jacobi_p: requires alpha, beta > -1");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double a1 = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0);
    const double a2 = (2.0 * k + alpha + beta - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (2.0 * k + alpha + beta - 1.0) * (2.0 * k + alpha + beta) *
                      (2.0 * k + alpha + beta - 2.0);
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) *
                      (2.0 * k + alpha + beta);
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace abdisk::specfun
