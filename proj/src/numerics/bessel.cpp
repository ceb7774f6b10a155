#include "hsm/numerics/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "hsm/numerics/gamma.hpp"

namespace hsm {

namespace {

constexpr int kMaxIter = 20000;
constexpr double kEps = 1e-16;

// K_mu(t) and K_{mu+1}(t) for |mu| <= 1/2, t <= 2 (Temme's series).
void k_temme(double mu, double t, double& kmu, double& kmu1) {
    const double x2 = 0.5 * t;
    const double pimu = M_PI * mu;
    const double fact = (std::abs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < kEps) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2;
    gamma_temme(mu, gam1, gam2);
    const double gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
    const double gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    const double mu2 = mu * mu;
    for (int i = 1; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::abs(del) < std::abs(sum) * kEps) {
            kmu = sum;
            kmu1 = sum1 * (2.0 / t);
            return;
        }
    }
    throw std::runtime_error("bessel_k: Temme series did not converge");
}

// K_mu(t) and K_{mu+1}(t) for |mu| <= 1/2, t > 2 (Steed's continued fraction CF2).
void k_steed(double mu, double t, double& kmu, double& kmu1) {
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + t);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            h = a1 * h;
            kmu = std::sqrt(M_PI / (2.0 * t)) * std::exp(-t) / s;
            kmu1 = kmu * (mu + t + 0.5 - h) / t;
            return;
        }
    }
    throw std::runtime_error("bessel_k: continued fraction did not converge");
}

} // namespace

BesselKResult bessel_k_checked(double nu, double t) {
    if (t <= 0.0) throw std::domain_error("bessel_k: requires t > 0");
    if (nu < 0.0 || nu > 1.0) throw std::domain_error("bessel_k: requires nu in [0,1]");
    if (t > 700.0) return {0.0, true};
    const int nl = (nu >= 0.5) ? 1 : 0;
    const double mu = nu - nl;  // in [-1/2, 1/2)
    double kmu, kmu1;
    if (t <= 2.0)
        k_temme(mu, t, kmu, kmu1);
    else
        k_steed(mu, t, kmu, kmu1);
    if (nl == 0) return {kmu, false};
    return {kmu1, false};
}

double bessel_k(double nu, double t) { return bessel_k_checked(nu, t).value; }

} // namespace hsm
