#include "hsm/testfunctions.hpp"

#include <cmath>

namespace hsm {

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    const double u = (next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double bump(double r) {
    const double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r2));
}

double bump_deriv(double r) {
    const double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    const double d = 1.0 - r2;
    return bump(r) * (-2.0 * r / (d * d));
}

double plateau(double x) {
    if (x <= 1.0) return 1.0;
    if (x >= 2.0) return 0.0;
    const double r = x - 1.0;
    const double fu = std::exp(-1.0 / r);
    const double fv = std::exp(-1.0 / (1.0 - r));
    return fv / (fu + fv);
}

double plateau_deriv(double x) {
    if (x <= 1.0 || x >= 2.0) return 0.0;
    const double r = x - 1.0;
    const double fu = std::exp(-1.0 / r);
    const double fv = std::exp(-1.0 / (1.0 - r));
    const double dfu = fu / (r * r);
    const double dfv = -fv / ((1.0 - r) * (1.0 - r));
    const double den = fu + fv;
    return (dfv * den - fv * (dfu + dfv)) / (den * den);
}

double Bump2::value(double x, double y) const {
    const double r = std::sqrt((x - cx) * (x - cx) + (y - cy) * (y - cy)) / w;
    return bump(r);
}

void Bump2::gradient(double x, double y, double& gx, double& gy) const {
    const double dx = x - cx, dy = y - cy;
    const double rr = std::sqrt(dx * dx + dy * dy);
    if (rr == 0.0 || rr >= w) {
        gx = gy = 0.0;
        return;
    }
    const double r = rr / w;
    const double fac = bump_deriv(r) / (w * rr);
    gx = fac * dx;
    gy = fac * dy;
}

std::vector<double> random_sine_coefficients(int modes, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> c(modes);
    for (int i = 0; i < modes; ++i)
        c[i] = rng.uniform(-1.0, 1.0) / ((i + 1.0) * (i + 1.0));
    return c;
}

} // namespace hsm
