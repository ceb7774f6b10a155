#pragma once

namespace hsm {

// Gauss hypergeometric function F(alpha, beta, gamma; z) for z <= 0.
// Branch selection:
//   z in (-1/2, 0]   direct series
//   z in (-2, -1/2]  Pfaff transformation w = z/(z-1)
//   z <= -2          inversion formula in 1/z (Gamma-prefactor pair)
// When alpha - beta is (near) an integer the inversion prefactors hit Gamma
// poles; the value is then taken as the average of alpha +/- 1e-6 evaluations.
double gauss_2f1(double alpha, double beta, double gamma_p, double z);

// F(alpha, beta, gamma; z) - 1, accurate for small |z| where F is close to 1.
double gauss_2f1_m1(double alpha, double beta, double gamma_p, double z);

// Individual branches, exposed for the overlap-band agreement tests.
double gauss_2f1_series(double alpha, double beta, double gamma_p, double z);
double gauss_2f1_pfaff(double alpha, double beta, double gamma_p, double z);
double gauss_2f1_inversion(double alpha, double beta, double gamma_p, double z);

} // namespace hsm
