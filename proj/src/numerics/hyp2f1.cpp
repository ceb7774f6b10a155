#include "hsm/numerics/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>

#include "hsm/numerics/gamma.hpp"

namespace hsm {

namespace {

constexpr int kMaxTerms = 4000;

bool near_nonpositive_integer(double x, double tol = 1e-9) {
    return x <= 0.5 && std::abs(x - std::round(x)) < tol;
}

// raw series sum_{k>=1} (a)_k (b)_k / ((c)_k k!) z^k, i.e. F - 1
double series_m1(double a, double b, double c, double z) {
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1.0)) return sum;
    }
    throw std::runtime_error("gauss_2f1: series did not converge");
}

} // namespace

double gauss_2f1_series(double a, double b, double c, double z) {
    if (near_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: gamma parameter at non-positive integer");
    return 1.0 + series_m1(a, b, c, z);
}

double gauss_2f1_pfaff(double a, double b, double c, double z) {
    // F(a,b,c;z) = (1-z)^{-a} F(a, c-b, c; z/(z-1))
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * gauss_2f1_series(a, c - b, c, w);
}

double gauss_2f1_inversion(double a, double b, double c, double z) {
    if (near_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: gamma parameter at non-positive integer");
    // degenerate prefactors when a - b is an integer: perturbed-parameter
    // average. eps balances the O(eps^2) formula error against the Gamma
    // argument-rounding error ~1e-16/eps amplified by the pole pair.
    if (std::abs((a - b) - std::round(a - b)) < 1e-9) {
        const double eps = 1e-4;
        return 0.5 * (gauss_2f1_inversion(a + eps, b, c, z) +
                      gauss_2f1_inversion(a - eps, b, c, z));
    }
    // reciprocal gammas in the denominators so that c-a or c-b at a pole
    // cleanly kills the corresponding term
    const double w = 1.0 / z;
    const double p1 =
        gamma_fn(c) * gamma_fn(b - a) * reciprocal_gamma(b) * reciprocal_gamma(c - a);
    const double p2 =
        gamma_fn(c) * gamma_fn(a - b) * reciprocal_gamma(a) * reciprocal_gamma(c - b);
    double acc = 0.0;
    if (p1 != 0.0)
        acc += p1 * std::pow(-z, -a) * gauss_2f1(a, 1.0 - c + a, 1.0 - b + a, w);
    if (p2 != 0.0)
        acc += p2 * std::pow(-z, -b) * gauss_2f1(b, 1.0 - c + b, 1.0 - a + b, w);
    return acc;
}

double gauss_2f1(double a, double b, double c, double z) {
    if (z > 0.0) throw std::domain_error("gauss_2f1: requires z <= 0");
    if (z == 0.0) {
        if (near_nonpositive_integer(c))
            throw std::domain_error("gauss_2f1: gamma parameter at non-positive integer");
        return 1.0;
    }
    if (z > -0.5) return gauss_2f1_series(a, b, c, z);
    if (z > -2.0) return gauss_2f1_pfaff(a, b, c, z);
    return gauss_2f1_inversion(a, b, c, z);
}

double gauss_2f1_m1(double a, double b, double c, double z) {
    if (z > 0.0) throw std::domain_error("gauss_2f1_m1: requires z <= 0");
    if (near_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: gamma parameter at non-positive integer");
    if (z > -0.5) return series_m1(a, b, c, z);
    return gauss_2f1(a, b, c, z) - 1.0;
}

} // namespace hsm
