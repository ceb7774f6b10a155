#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hsm {

// Deterministic 64-bit generator (splitmix64): identical streams on every
// platform at a fixed seed, unlike the standard distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform(double lo, double hi);

  private:
    std::uint64_t state_;
};

// C-infinity bump exp(1 - 1/(1-r^2)) on |r| < 1, zero outside.
double bump(double r);
double bump_deriv(double r);

// C-infinity plateau: 1 on (-inf, 1], 0 on [2, inf), monotone in between.
double plateau(double x);
double plateau_deriv(double x);

// Radial 2D bump centred at (cx, cy) with radius w; value and gradient.
struct Bump2 {
    double cx = 0.0, cy = 0.0, w = 1.0;
    double value(double x, double y) const;
    void gradient(double x, double y, double& gx, double& gy) const;
};

enum class TestFamily {
    cutoff_profile_I,     // extremizing cutoff sequence of the A profile
    cutoff_profile_II,    // epsilon-regularized B-profile sequence
    gaussian_bump,      // compactly supported radial bumps
    sine_series_random, // random Dirichlet sine series on an interval
};

// Parametrized family member used by quotients and lemma checks.
struct TestFunctionSpec {
    TestFamily family = TestFamily::gaussian_bump;
    std::map<std::string, double> params;
    std::uint64_t seed = 0;
};

// Draw the coefficients of a square-summable random sine series:
// c_i ~ U(-1,1) * i^{-2}, i = 1..modes.
std::vector<double> random_sine_coefficients(int modes, std::uint64_t seed);

} // namespace hsm
