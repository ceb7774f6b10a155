#include "hsm/numerics/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace hsm {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Taylor coefficients of 1/Gamma(1+x) = sum c_k x^k (DLMF 5.7.1 shifted).
constexpr double kRecipGamma[21] = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.04200263503409523553,
    0.16653861138229148950,
    -0.04219773455554433675,
    -0.00962197152787697356,
    0.00721894324666309954,
    -0.00116516759185906511,
    -0.00021524167411495097,
    0.00012805028238811619,
    -0.00002013485478078824,
    -0.00000125049348214267,
    0.00000113302723198170,
    -0.00000020563384169776,
    0.00000000611609510448,
    0.00000000500200764447,
    -0.00000000118127457049,
    0.00000000010434267117,
    0.00000000000778226344,
    -0.00000000000369680562,
};

double lanczos_pos(double x) {
    // x > 0, not shifted; standard reflection-free branch for x >= 0.5
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

// sin(pi x) with exact range reduction; keeps full precision near integers
double sinpi(double x) {
    const double k = std::round(x);
    const double r = x - k;
    const double s = std::sin(M_PI * r);
    return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

} // namespace

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    if (x >= 0.5) return lanczos_pos(x);
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    return M_PI / (sinpi(x) * lanczos_pos(1.0 - x));
}

double reciprocal_gamma1p(double x) {
    double acc = 0.0;
    for (int k = 20; k >= 0; --k) acc = acc * x + kRecipGamma[k];
    return acc;
}

double reciprocal_gamma(double x) {
    if (x > 0.5) return 1.0 / lanczos_pos(x);
    const double r = x - std::round(x);
    if (std::abs(r) < 0.25) {
        // 1/Gamma(x) = 1/Gamma(x+m) * (x)_m climbing out of the pole region
        double prod = 1.0;
        double xx = x;
        while (xx <= 0.5) {
            prod *= xx;
            xx += 1.0;
        }
        return prod * reciprocal_gamma1p(xx - 1.0);
    }
    return sinpi(x) * lanczos_pos(1.0 - x) / M_PI;
}

void gamma_temme(double mu, double& gam1, double& gam2) {
    const double rp = reciprocal_gamma1p(mu);   // 1/Gamma(1+mu)
    const double rm = reciprocal_gamma1p(-mu);  // 1/Gamma(1-mu)
    gam2 = 0.5 * (rm + rp);
    if (std::abs(mu) < 1e-2) {
        // odd part of the series, avoids the 0/0 at mu = 0
        double acc = 0.0;
        for (int k = 19; k >= 1; k -= 2) acc = acc * (mu * mu) + kRecipGamma[k];
        gam1 = -acc;
    } else {
        gam1 = (rm - rp) / (2.0 * mu);
    }
}

} // namespace hsm
