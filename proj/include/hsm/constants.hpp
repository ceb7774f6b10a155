#pragma once

#include <string>
#include <vector>

namespace hsm {

// Fractional order s in (0,1) with the derived weight exponent a = 1-2s.
struct Order {
    double s = 0.5;
    double a = 0.0;

    static Order from_s(double s);
    bool valid() const { return s > 0.0 && s < 1.0 && a == 1.0 - 2.0 * s; }
};

// All closed-form constants for one (n, s) pair.
struct ConstantsRow {
    double s = 0.0;
    int n = 0;
    double c_ns = 0.0;           // normalization of the singular-integral operator
    double dbar = 0.0;           // trace Hardy I sharp constant
    double kbar = 0.0;           // trace Hardy II sharp constant
    double d_spec = 0.0;         // spectral Hardy constant
    double k_ns = 0.0;           // Dirichlet-form Hardy constant
    double kappa_ns = 0.0;       // censored-form Hardy constant
    double gamma_sq_over_pi = 0.0;
    double ext_factor = 0.0;     // extension-energy factor 2^{1-2s} G(1-s)/G(s)
    double kernel_prefactor = 0.0;
    bool extrapolated = false;   // n = 1 rows: formulas evaluated outside the stated range
};

struct NamedResidual {
    std::string name;
    double value;
};

// Closed-form constants from their Gamma expressions; n >= 1, 0 < s < 1.
ConstantsRow sharp_constants(int n, const Order& s);

// Algebraic identities between the constants; all residuals are absolute and
// should vanish to roundoff:
//   trig:    dbar - 2 sin^2((2s+1)pi/4) kbar
//   spectral: d_spec * ext_factor - dbar
//   dirichlet: kbar * pi^{n/2} G(s) / (s G((n+2s)/2)) - k_ns
//   censored: k_ns - 2 kernel_prefactor - kappa_ns
std::vector<NamedResidual> identity_residuals(int n, const Order& s);

// pi^{(n-1)/2} G((1+2s)/2) / (2 s G((n+2s)/2)); the mass of the kernel
// |x-xi|^{-n-2s} over a half space at unit distance.
double kernel_prefactor(int n, const Order& s);

} // namespace hsm
