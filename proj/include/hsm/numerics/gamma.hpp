#pragma once

namespace hsm {

// Gamma function for real x, x > 0 or non-integer negative.
// Lanczos approximation (g = 7, 9 terms), relative error below 1e-13 on (0, 50].
// Throws std::domain_error at non-positive integers (poles).
double gamma_fn(double x);

// 1/Gamma(1+x) for |x| <= 0.5, evaluated by its Taylor series.
// Used where direct division by gamma_fn would lose digits near x = 0.
double reciprocal_gamma1p(double x);

// 1/Gamma(x) for any real x; zero at the poles (non-positive integers).
double reciprocal_gamma(double x);

// Temme auxiliaries for Bessel-K:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu),  gam1(0) = euler_gamma
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// Valid for |mu| <= 0.5.
void gamma_temme(double mu, double& gam1, double& gam2);

} // namespace hsm
