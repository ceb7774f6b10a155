#include "hsm/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "hsm/numerics/gamma.hpp"

namespace hsm {

Order Order::from_s(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("Order: s must lie in (0,1)");
    return Order{s, 1.0 - 2.0 * s};
}

ConstantsRow sharp_constants(int n, const Order& ord) {
    if (n < 1) throw std::domain_error("sharp_constants: n must be positive");
    const double s = ord.s;
    ConstantsRow row;
    row.s = s;
    row.n = n;
    row.extrapolated = (n == 1);

    const double g1ms = gamma_fn(1.0 - s);
    const double gs = gamma_fn(s);
    const double gp = gamma_fn((3.0 + 2.0 * s) / 4.0);
    const double gm = gamma_fn((3.0 - 2.0 * s) / 4.0);
    const double gsh = gamma_fn(s + 0.5);
    const double gn2s = gamma_fn((n + 2.0 * s) / 2.0);

    row.c_ns = s * std::pow(2.0, 2.0 * s) * gn2s / (g1ms * std::pow(M_PI, 0.5 * n));
    row.dbar = 2.0 * g1ms * gp * gp / (gm * gm * gs);
    row.kbar = std::pow(2.0, 1.0 - 2.0 * s) * gsh * gsh * g1ms / (M_PI * gs);
    row.d_spec = std::pow(2.0, 2.0 * s) * gp * gp / (gm * gm);
    row.k_ns = std::pow(2.0, 1.0 - 2.0 * s) * std::pow(M_PI, 0.5 * (n - 2.0)) * g1ms *
               gsh * gsh / (s * gn2s);
    row.kappa_ns = std::pow(M_PI, 0.5 * (n - 1.0)) * gsh / (s * gn2s) *
                   (std::pow(2.0, 1.0 - 2.0 * s) / std::sqrt(M_PI) * g1ms * gsh - 1.0);
    row.gamma_sq_over_pi = gsh * gsh / M_PI;
    row.ext_factor = std::pow(2.0, 1.0 - 2.0 * s) * g1ms / gs;
    row.kernel_prefactor = std::pow(M_PI, 0.5 * (n - 1.0)) * gsh / (2.0 * s * gn2s);
    return row;
}

std::vector<NamedResidual> identity_residuals(int n, const Order& ord) {
    const ConstantsRow r = sharp_constants(n, ord);
    const double s = ord.s;
    const double sinf = std::sin((2.0 * s + 1.0) * M_PI / 4.0);
    const double trig = r.dbar - 2.0 * sinf * sinf * r.kbar;
    const double spectral = r.d_spec * r.ext_factor - r.dbar;
    const double dirichlet =
        r.kbar * std::pow(M_PI, 0.5 * n) * gamma_fn(s) /
            (s * gamma_fn((n + 2.0 * s) / 2.0)) -
        r.k_ns;
    const double censored = r.k_ns - 2.0 * r.kernel_prefactor - r.kappa_ns;
    return {
        {"trig_dbar_kbar", std::abs(trig)},
        {"spectral_extension", std::abs(spectral)},
        {"dirichlet_kbar", std::abs(dirichlet)},
        {"censored_split", std::abs(censored)},
    };
}

double kernel_prefactor(int n, const Order& ord) {
    const double s = ord.s;
    return std::pow(M_PI, 0.5 * (n - 1.0)) * gamma_fn((1.0 + 2.0 * s) / 2.0) /
           (2.0 * s * gamma_fn((n + 2.0 * s) / 2.0));
}

} // namespace hsm
