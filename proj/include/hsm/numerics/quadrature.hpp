#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace hsm {

// Integration domain. hi may be +infinity. The singularity flags declare the
// admissible endpoint behaviour: an algebraic exponent p > -1 at lo means the
// integrand may blow up like (x-lo)^p; hi_decay q > 1 means the integrand
// decays at least like x^{-q} toward +infinity.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    std::optional<double> lo_algebraic_exponent;
    std::optional<double> hi_decay;

    static Interval finite(double lo, double hi) { return {lo, hi, {}, {}}; }
    static Interval semi_infinite(double lo) {
        return {lo, std::numeric_limits<double>::infinity(), {}, {}};
    }
    bool is_semi_infinite() const { return std::isinf(hi); }
};

enum class QuadKind { tanh_sinh, gauss_jacobi };

// A concrete rule on (-1, 1) (gauss_jacobi) or on (0, 1) in the transformed
// variable (tanh_sinh). Weights are strictly positive, abscissae interior.
struct QuadratureRule {
    QuadKind kind = QuadKind::tanh_sinh;
    int level = 10;
    std::vector<double> abscissae;
    std::vector<double> weights;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int level = 0;
    bool converged = false;
};

struct IntegrateOptions {
    double tol = 1e-12;       // relative agreement between successive levels
    double abs_tol = 0.0;     // absolute floor for near-zero integrals
    int min_level = 6;
    int max_level = 12;
};

// tanh-sinh nodes for one level: node distances from both endpoints of (0,1)
// are tracked separately so that endpoint singularities are evaluated stably.
struct TanhSinhNode {
    double x;       // position in (0,1)
    double dist_lo; // x - 0, computed without cancellation
    double dist_hi; // 1 - x, computed without cancellation
    double weight;
};
std::vector<TanhSinhNode> tanh_sinh_nodes(int level);

// Gauss-Jacobi rule: integrates f against the weight (1-x)^alpha (1+x)^beta
// on (-1,1); alpha, beta > -1. Nodes via the Golub-Welsch tridiagonal.
QuadratureRule gauss_jacobi_rule(int n, double alpha, double beta);

// tanh-sinh rule materialized on (0,1) at one level.
QuadratureRule tanh_sinh_rule(int level);

// Single fixed-rule pass over the domain (tanh_sinh kind only; gauss_jacobi
// rules carry their weight and pair with integrate_jacobi instead).
double integrate_with_rule(const std::function<double(double)>& f,
                           const Interval& domain, const QuadratureRule& rule);

// Adaptive-level tanh-sinh integration of f over the domain. The integrand is
// called with the point x and its distance to the nearer finite endpoint (the
// distance equals x - lo near lo, usable verbatim when lo = 0).
IntegrationResult integrate(const std::function<double(double)>& f,
                            const Interval& domain,
                            const IntegrateOptions& opts = {});

// One-shot value; throws on non-convergence.
double integrate_value(const std::function<double(double)>& f,
                       const Interval& domain,
                       const IntegrateOptions& opts = {});

// Gauss-Jacobi integral of the smooth factor g over (lo,hi):
//   integral of g(x) (x-lo)^beta (hi-x)^alpha dx
double integrate_jacobi(const std::function<double(double)>& g, double lo,
                        double hi, double alpha, double beta, int n);

} // namespace hsm
