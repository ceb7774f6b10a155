#pragma once

namespace hsm {

struct BesselKResult {
    double value = 0.0;
    bool underflow = false;  // t beyond the overflow guard, exact zero returned
};

// Modified Bessel function of the second kind, K_nu(t), nu in [0,1], t > 0.
// Temme's series for t <= 2, Steed continued fraction for t > 2.
// For t > 700 returns zero with the underflow flag set.
BesselKResult bessel_k_checked(double nu, double t);

// Convenience wrapper returning only the value.
double bessel_k(double nu, double t);

} // namespace hsm
