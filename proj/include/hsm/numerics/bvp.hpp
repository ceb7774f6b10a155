#pragma once

#include <functional>
#include <vector>

namespace hsm {

// Chebyshev-Gauss-Lobatto collocation pieces (Trefethen ordering, x[0] = 1).
void chebyshev_lobatto(int n, std::vector<double>& nodes,
                       std::vector<std::vector<double>>& diff);

// Coefficients of the linear ODE  p2(t) u'' + p1(t) u' + p0(t) u = 0  on R.
struct LineBvpCoeffs {
    std::function<double(double)> p2, p1, p0;
};

struct BvpOptions {
    int num_nodes = 672;      // collocation points (N+1 with N = num_nodes)
    double map_scale = 7.8;   // L in t = sinh(L xi); truncation T = sinh(L)
    double tol = 1e-8;        // admissible scaled ODE residual
};

// Collocation solution of the B-profile boundary value problem: the ODE is
// solved on t = sinh(L xi), xi in [-1,1], closed at the truncation points by
// the Frobenius behaviour at infinity (exponents 0 and a-1 in 1/t), with
// boundary data B(-inf) = 0, B(+inf) = 1.
struct BvpSolution {
    std::vector<double> nodes;        // compactified tau = (1+t/sqrt(1+t^2))/2, ascending
    std::vector<double> values;       // B at the nodes
    std::vector<double> derivatives;  // dB/dt at the nodes
    double residual_norm = 0.0;       // max scaled ODE residual at interior nodes

    double weight_exponent = 0.0;     // a
    double map_scale = 0.0;
    double t_max = 0.0;
    double beta_right = 0.0;          // coefficient of t^{a-1} at +inf
    double c_left = 0.0;              // coefficient of (-t)^{a-1} at -inf
    double e1 = 0.0, c1 = 0.0;        // tail-series corrections

    double eval(double t) const;
    double eval_derivative(double t) const;

  private:
    std::vector<double> xi_;          // collocation xi, ascending
    std::vector<double> bary_;        // barycentric weights
    friend BvpSolution solve_bvp(const LineBvpCoeffs&, double, const BvpOptions&);
};

// Solve the profile ODE with weight exponent a = 1-2s. Throws when the
// collocated residual exceeds opts.tol.
BvpSolution solve_bvp(const LineBvpCoeffs& ode, double a,
                      const BvpOptions& opts = {});

} // namespace hsm
