#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hsm/numerics/bessel.hpp"
#include "hsm/numerics/bvp.hpp"
#include "hsm/numerics/eig.hpp"
#include "hsm/numerics/extrapolate.hpp"
#include "hsm/numerics/gamma.hpp"
#include "hsm/numerics/hyp2f1.hpp"
#include "hsm/numerics/linalg.hpp"
#include "hsm/numerics/quadrature.hpp"
#include "oracles.hpp"

using namespace hsm;

namespace {
double relerr(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST_CASE("gamma: known values") {
    CHECK(relerr(gamma_fn(0.5), oracle::kSqrtPi) < 1e-14);
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(relerr(gamma_fn(1.25), oracle::kGamma125) < 1e-14);
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("gamma: functional equation on random points") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uni(0.1, 30.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = uni(rng);
        const double lhs = gamma_fn(x + 1.0);
        CHECK(std::abs(lhs - x * gamma_fn(x)) / lhs < 1e-12);
    }
}

TEST_CASE("gamma: accuracy across (0, 50] via duplication") {
    // Legendre duplication: G(2x) = 2^{2x-1}/sqrt(pi) G(x) G(x+1/2)
    for (double x = 0.25; x <= 25.0; x += 0.375) {
        const double lhs = gamma_fn(2.0 * x);
        const double rhs = std::pow(2.0, 2.0 * x - 1.0) / std::sqrt(M_PI) *
                           gamma_fn(x) * gamma_fn(x + 0.5);
        CHECK(relerr(lhs, rhs) < 1e-13);
    }
}

TEST_CASE("gamma_temme at and near zero order") {
    double g1, g2;
    gamma_temme(0.0, g1, g2);
    CHECK(g1 == doctest::Approx(-0.5772156649015329).epsilon(1e-13));
    CHECK(g2 == doctest::Approx(1.0).epsilon(1e-13));
    // both branches must reproduce 1/Gamma(1 +- mu)
    for (double mu : {0.004, 0.0099, 0.0101, 0.2, 0.49}) {
        double a, b;
        gamma_temme(mu, a, b);
        const double rp = b - mu * a;  // 1/Gamma(1+mu)
        const double rm = b + mu * a;  // 1/Gamma(1-mu)
        CHECK(rp * gamma_fn(1.0 + mu) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(rm * gamma_fn(1.0 - mu) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("gauss_2f1: trivial and frozen values") {
    CHECK(gauss_2f1(0.37, 1.2, 0.9, 0.0) == 1.0);
    CHECK(relerr(gauss_2f1(0.3, 0.7, 0.7, -1.0), oracle::kTwoPowM03) < 1e-12);
    CHECK(relerr(gauss_2f1(1.0, 1.0, 2.0, -1.0), oracle::kLn2) < 1e-12);
    // F(a,b,b;z) = (1-z)^{-a} across branches
    for (double z : {-0.3, -0.7, -1.5, -3.0, -25.0}) {
        CHECK(relerr(gauss_2f1(0.45, 0.8, 0.8, z), std::pow(1.0 - z, -0.45)) < 1e-11);
    }
    CHECK_THROWS_AS(gauss_2f1(0.3, 0.7, -1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(0.3, 0.7, 0.7, 0.5), std::domain_error);
}

TEST_CASE("gauss_2f1: pfaff and inversion agree on the overlap band") {
    // parameter sets of the profile-A representation at several s
    for (double a : {-0.8, -0.4, 0.0, 0.4, 0.8}) {
        const double al = (2.0 - a) / 4.0, be = (4.0 - a) / 4.0, ga = (3.0 - a) / 2.0;
        for (double z = -2.0; z <= -1.0; z += 0.125) {
            const double v1 = gauss_2f1_pfaff(al, be, ga, z);
            const double v2 = gauss_2f1_inversion(al, be, ga, z);
            CHECK(relerr(v1, v2) < 1e-9);
        }
    }
}

TEST_CASE("gauss_2f1: degenerate inversion parameters fall back to average") {
    // alpha - beta integer hits the Gamma-prefactor poles; the perturbed
    // average recovers the value to the fp-limited ~1e-8 level
    const double v = gauss_2f1(1.3, 0.3, 1.7, -9.0);
    const double pf = gauss_2f1_pfaff(1.3, 0.3, 1.7, -9.0);
    CHECK(relerr(v, pf) < 1e-7);
}

TEST_CASE("bessel_k: frozen and closed-form values") {
    CHECK(relerr(bessel_k(0.5, 1.0), oracle::kBesselK_half_1) < 1e-12);
    CHECK(relerr(bessel_k(0.3, 2.0), oracle::kBesselK_03_2) < 1e-12);
    // small-t asymptote: t^{0.25} K_{0.25}(t) -> G(0.25) 2^{-0.75};
    // approach rate is t^{2s}, so evaluate deep in the tail
    const double target = gamma_fn(0.25) * std::pow(2.0, -0.75);
    const double got = std::pow(1e-20, 0.25) * bessel_k(0.25, 1e-20);
    CHECK(relerr(got, target) < 1e-9);
    // reflection K_s = K_{-s} is built in; check K at symmetric orders around 1/2
    CHECK(relerr(bessel_k(0.25, 1.7), bessel_k(0.75, 1.7)) > 0.0);  // distinct orders
    const auto uf = bessel_k_checked(0.3, 701.0);
    CHECK(uf.underflow);
    CHECK(uf.value == 0.0);
    CHECK_THROWS_AS(bessel_k(0.3, -1.0), std::domain_error);
}

TEST_CASE("bessel_k: derivative identity d/dt(t^s K_s) = -t^s K_{s-1}") {
    for (double s : {0.2, 0.5, 0.8}) {
        for (double t : {0.3, 1.0, 2.5, 7.0}) {
            const double h = 1e-6 * t;
            auto f = [&](double u) { return std::pow(u, s) * bessel_k(s, u); };
            const double lhs = (f(t + h) - f(t - h)) / (2.0 * h);
            const double rhs = -std::pow(t, s) * bessel_k(1.0 - s, t);  // K_{s-1} = K_{1-s}
            CHECK(relerr(lhs, rhs) < 1e-8);
        }
    }
}

TEST_CASE("bessel_k: both branches against frozen oracle values") {
    CHECK(relerr(bessel_k(0.2, 1.999), 0.11498340466290945357) < 1e-12);
    CHECK(relerr(bessel_k(0.2, 2.001), 0.11470053308176799571) < 1e-12);
    CHECK(relerr(bessel_k(0.77, 1.999), 0.12886782816420212649) < 1e-12);
    CHECK(relerr(bessel_k(0.77, 2.001), 0.12853842845444052172) < 1e-12);
}

TEST_CASE("integrate: closed-form integrals") {
    Interval gauss_like = Interval::semi_infinite(0.0);
    auto r1 = integrate([](double t) { return std::pow(t, -0.5) * std::exp(-t); },
                        gauss_like);
    CHECK(r1.converged);
    CHECK(relerr(r1.value, std::sqrt(M_PI)) < 1e-12);

    auto r2 = integrate([](double t) { return 2.0 * std::exp(-2.0 * t); }, gauss_like);
    CHECK(relerr(r2.value, 1.0) < 1e-12);

    // int_0^1 (1 - ln t)^{-2} t^{-1} dt = 1 after u = 1 - ln t
    auto r3 = integrate([](double u) { return 1.0 / (u * u); },
                        Interval::semi_infinite(1.0));
    CHECK(r3.converged);
    CHECK(relerr(r3.value, 1.0) < 1e-10);
}

TEST_CASE("integrate: exact for polynomials up to degree 10") {
    for (int deg = 0; deg <= 10; ++deg) {
        auto r = integrate([deg](double x) { return std::pow(x, deg); },
                           Interval::finite(0.0, 1.0));
        CHECK(std::abs(r.value - 1.0 / (deg + 1)) < 1e-12);
    }
}

TEST_CASE("integrate: level doubling at least halves the error") {
    // fixed-level passes against the known value on a mildly singular set
    auto f = [](double t) { return std::pow(t, -0.4); };  // int_0^1 = 1/0.6
    const double exact = 1.0 / 0.6;
    double prev_err = -1.0;
    for (int lvl = 3; lvl <= 6; ++lvl) {
        IntegrateOptions o;
        o.min_level = lvl;
        o.max_level = lvl + 1;
        o.tol = 0.0;
        auto r = integrate(f, Interval::finite(0.0, 1.0), o);
        const double err = std::abs(r.value - exact);
        if (prev_err > 0.0) CHECK(err <= 0.5 * prev_err + 1e-16);
        prev_err = err;
    }
}

TEST_CASE("rule objects: tanh-sinh materialization and single pass") {
    const auto rule = tanh_sinh_rule(7);
    CHECK(rule.kind == QuadKind::tanh_sinh);
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
        CHECK(rule.weights[i] > 0.0);
        CHECK(rule.abscissae[i] > 0.0);
        CHECK(rule.abscissae[i] < 1.0);
    }
    const double v = integrate_with_rule([](double x) { return x * x; },
                                         Interval::finite(0.0, 2.0), rule);
    CHECK(std::abs(v - 8.0 / 3.0) < 1e-12);
}

TEST_CASE("gauss_jacobi rule: positivity and moments") {
    const auto rule = gauss_jacobi_rule(24, -0.5, -0.5);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
        CHECK(rule.weights[i] > 0.0);
        CHECK(rule.abscissae[i] > -1.0);
        CHECK(rule.abscissae[i] < 1.0);
        total += rule.weights[i];
    }
    CHECK(relerr(total, M_PI) < 1e-12);  // int (1-x^2)^{-1/2} = pi
    // Hardy-type integral: int_0^1 x^{-2s} (smooth) dx with s = 0.3
    const double v = integrate_jacobi([](double x) { return std::cos(x); }, 0.0, 1.0,
                                      0.0, -0.6, 48);
    auto ref = integrate([](double x) { return std::cos(x) * std::pow(x, -0.6); },
                         Interval::finite(0.0, 1.0));
    CHECK(relerr(v, ref.value) < 1e-11);
}

TEST_CASE("min_generalized_eig: diagonal and dense cases") {
    Matrix k(2, 2), m(2, 2);
    k(0, 0) = 2.0;
    k(1, 1) = 3.0;
    m(0, 0) = m(1, 1) = 1.0;
    auto r = min_generalized_eig(k, m);
    CHECK(r.eigenvalue == doctest::Approx(2.0).epsilon(1e-12));

    Matrix k2(2, 2), m2(2, 2);
    k2(0, 0) = k2(1, 1) = 2.0;
    k2(0, 1) = k2(1, 0) = -1.0;
    m2(0, 0) = m2(1, 1) = 1.0;
    auto r2 = min_generalized_eig(k2, m2);
    CHECK(r2.eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2.residual < 1e-10);
}

TEST_CASE("min_generalized_eig: random SPD pair vs dense full-spectrum oracle") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const int n = 30;
    Matrix b(n, n), c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b(i, j) = uni(rng);
            c(i, j) = uni(rng);
        }
    Matrix k(n, n, 0.0), m(n, n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double sk = 0.0, sm = 0.0;
            for (int l = 0; l < n; ++l) {
                sk += b(l, i) * b(l, j);
                sm += c(l, i) * c(l, j);
            }
            k(i, j) = sk + (i == j ? 1e-3 : 0.0);
            m(i, j) = sm + (i == j ? 1e-3 : 0.0);
        }
    auto r = min_generalized_eig(k, m);
    CHECK(r.residual < 1e-10);

    // oracle: dense Jacobi on M^{-1/2} K M^{-1/2} through M's eigenbasis
    std::vector<double> mu;
    Matrix q;
    jacobi_eigensolver(m, mu, q);
    Matrix w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += k(i, l) * q(l, j);
            w(i, j) = s;
        }
    Matrix red(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += q(l, i) * w(l, j);
            red(i, j) = s / std::sqrt(mu[i] * mu[j]);
        }
    std::vector<double> lam;
    Matrix v;
    jacobi_eigensolver(red, lam, v);
    CHECK(relerr(r.eigenvalue, lam[0]) < 1e-10);

    // global minimum property: random vectors never beat it
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(n);
        for (auto& xi : x) xi = uni(rng);
        double xkx = 0.0, xmx = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                xkx += x[i] * k(i, j) * x[j];
                xmx += x[i] * m(i, j) * x[j];
            }
        CHECK(xkx / xmx >= r.eigenvalue - 1e-9);
    }
}

TEST_CASE("min_generalized_eig: singular mass restricted to its range") {
    // M has rank 1; the quotient must be minimized over range(M)
    Matrix k(3, 3, 0.0), m(3, 3, 0.0);
    k(0, 0) = 4.0; k(1, 1) = 1.0; k(2, 2) = 9.0;
    k(0, 1) = k(1, 0) = 0.5;
    m(0, 0) = 1.0;
    auto r = min_generalized_eig(k, m);
    // minimize (4 x0^2 + x1^2 + x0 x1 + 9 x2^2)/x0^2 -> x2=0, x1 = -x0/4
    CHECK(r.eigenvalue == doctest::Approx(4.0 - 0.25).epsilon(1e-10));
    Matrix zero(3, 3, 0.0);
    CHECK_THROWS_AS(min_generalized_eig(k, zero), std::domain_error);
}

TEST_CASE("solve_bvp: closed form at a = 0 and monotonicity") {
    LineBvpCoeffs ode{
        [](double t) { return (1.0 + t * t) * (1.0 + t * t); },
        [](double t) { return 2.0 * t * (1.0 + t * t); },
        [](double) { return 0.0; },
    };
    auto sol = solve_bvp(ode, 0.0);
    CHECK(sol.residual_norm < 1e-8);
    double max_err = 0.0;
    for (double t : {-50.0, -5.0, -1.0, -0.25, 0.0, 0.4, 1.0, 3.0, 20.0, 300.0}) {
        const double want = 0.5 + std::atan(t) / M_PI;
        max_err = std::max(max_err, std::abs(sol.eval(t) - want));
    }
    CHECK(max_err < 1e-8);
    CHECK(sol.eval(0.0) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(sol.eval_derivative(0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-8));
    // monotone increasing values
    for (std::size_t i = 1; i < sol.values.size(); ++i)
        CHECK(sol.values[i] >= sol.values[i - 1]);
}

TEST_CASE("limit extrapolation helpers") {
    // g(t) = 3 + t^{0.4} - 2 t^2 at t = 2^{-k}
    std::vector<double> s1;
    for (int k = 2; k <= 10; ++k) {
        const double t = std::ldexp(1.0, -k);
        s1.push_back(3.0 + std::pow(t, 0.4) - 2.0 * t * t);
    }
    CHECK(std::abs(limit_extrapolate(s1, 0.5, {0.4, 2.0}) - 3.0) < 1e-10);
    // pure even ladder for classical Richardson
    std::vector<double> s2;
    for (int k = 1; k <= 6; ++k) {
        const double t = std::ldexp(1.0, -k);
        s2.push_back(1.5 + 0.3 * t * t - 0.1 * t * t * t * t);
    }
    CHECK(std::abs(richardson_limit(s2, 0.5, 2.0) - 1.5) < 1e-12);
}
