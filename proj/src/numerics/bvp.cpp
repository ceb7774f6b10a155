#include "hsm/numerics/bvp.hpp"

#include <cmath>
#include <stdexcept>

#include "hsm/numerics/linalg.hpp"

namespace hsm {

void chebyshev_lobatto(int n, std::vector<double>& nodes,
                       std::vector<std::vector<double>>& diff) {
    nodes.resize(n + 1);
    for (int i = 0; i <= n; ++i) nodes[i] = std::cos(M_PI * i / n);
    std::vector<double> c(n + 1, 1.0);
    c[0] = c[n] = 2.0;
    diff.assign(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            const double sgn = (((i + j) & 1) ? -1.0 : 1.0);
            diff[i][j] = (c[i] / c[j]) * sgn / (nodes[i] - nodes[j]);
            rowsum += diff[i][j];
        }
        diff[i][i] = -rowsum;
    }
}

double BvpSolution::eval(double t) const {
    if (t > t_max) {
        const double w = 1.0 / (t * t);
        return 1.0 + e1 * w + beta_right * std::pow(t, weight_exponent - 1.0) * (1.0 + c1 * w);
    }
    if (t < -t_max) {
        const double u = -t;
        return c_left * std::pow(u, weight_exponent - 1.0) * (1.0 + c1 / (u * u));
    }
    const double x = std::asinh(t) / map_scale;
    // barycentric interpolation on the collocation grid
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < xi_.size(); ++j) {
        const double d = x - xi_[j];
        if (std::abs(d) < 1e-14) return values[j];
        const double q = bary_[j] / d;
        num += q * values[j];
        den += q;
    }
    return num / den;
}

double BvpSolution::eval_derivative(double t) const {
    const double a = weight_exponent;
    if (t > t_max) {
        return -2.0 * e1 / (t * t * t) +
               beta_right * (a - 1.0) * std::pow(t, a - 2.0) *
                   (1.0 + c1 * (a - 3.0) / (a - 1.0) / (t * t));
    }
    if (t < -t_max) {
        const double u = -t;
        return c_left * (1.0 - a) * std::pow(u, a - 2.0) +
               c_left * c1 * (3.0 - a) * std::pow(u, a - 4.0);
    }
    const double x = std::asinh(t) / map_scale;
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < xi_.size(); ++j) {
        const double d = x - xi_[j];
        if (std::abs(d) < 1e-14) return derivatives[j];
        const double q = bary_[j] / d;
        num += q * derivatives[j];
        den += q;
    }
    return num / den;
}

BvpSolution solve_bvp(const LineBvpCoeffs& ode, double a, const BvpOptions& opts) {
    const int n = opts.num_nodes;
    const double L = opts.map_scale;
    std::vector<double> xc;
    std::vector<std::vector<double>> d;
    chebyshev_lobatto(n, xc, d);  // xc descending, xc[0] = 1

    const int m = n + 1;
    std::vector<double> t(m), dtdxi(m);
    for (int i = 0; i < m; ++i) {
        t[i] = std::sinh(L * xc[i]);
        dtdxi[i] = L * std::cosh(L * xc[i]);
    }
    // first derivative in t: D1 = diag(1/t') D ; second: D2 = D1 * D1
    Matrix d1(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) d1(i, j) = d[i][j] / dtdxi[i];
    Matrix d2 = mat_mul(d1, d1);

    // rows normalized by the leading coefficient to keep the LU well scaled
    Matrix lop(m, m, 0.0);
    std::vector<double> rhs(m, 0.0);
    for (int i = 1; i < m - 1; ++i) {
        const double p2 = ode.p2(t[i]);
        const double p1 = ode.p1(t[i]) / p2, p0 = ode.p0(t[i]) / p2;
        for (int j = 0; j < m; ++j)
            lop(i, j) = d2(i, j) + p1 * d1(i, j) + (i == j ? p0 : 0.0);
    }

    const double tt = t[0];  // +T
    const double c1 = ((a - 1.0) * (a - 2.0) - 0.25 * a * a) / (2.0 * (a - 3.0));
    const double e1 = a * a / (8.0 * (1.0 + a));

    // row 0 (t = +T): eliminate the t^{a-1} amplitude between B and B',
    // leaving the condition B(+inf) = 1 up to O(T^{-4}).
    const double denom = (a - 1.0) * std::pow(tt, a - 2.0) *
                         (1.0 + c1 * (a - 3.0) / ((a - 1.0) * tt * tt));
    const double tail = std::pow(tt, a - 1.0) * (1.0 + c1 / (tt * tt));
    for (int j = 0; j < m; ++j)
        lop(0, j) = (0 == j ? 1.0 : 0.0) - (tail / denom) * d1(0, j);
    rhs[0] = 1.0 + e1 / (tt * tt) + (2.0 * e1 / (tt * tt * tt)) * (tail / denom);

    // row m-1 (t = -T): Robin condition for the decaying Frobenius branch
    for (int j = 0; j < m; ++j)
        lop(m - 1, j) = tt * (1.0 + c1 / (tt * tt)) * d1(m - 1, j) -
                        ((1.0 - a) + c1 * (3.0 - a) / (tt * tt)) * ((m - 1 == j) ? 1.0 : 0.0);
    rhs[m - 1] = 0.0;

    const Matrix lop0 = lop;
    std::vector<double> sol = rhs;
    lu_solve_inplace(lop, sol);

    std::vector<double> deriv(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double s1 = 0.0;
        for (int j = 0; j < m; ++j) s1 += d1(i, j) * sol[j];
        deriv[i] = s1;
    }
    // componentwise backward error of the interior collocation rows
    double resmax = 0.0;
    for (int i = 1; i < m - 1; ++i) {
        double r = 0.0, scale = 1e-300;
        for (int j = 0; j < m; ++j) {
            const double c = lop0(i, j) * sol[j];
            r += c;
            scale += std::abs(c);
        }
        resmax = std::max(resmax, std::abs(r) / scale);
    }
    if (resmax > opts.tol)
        throw std::runtime_error("solve_bvp: collocation residual above tolerance");

    BvpSolution out;
    out.weight_exponent = a;
    out.map_scale = L;
    out.t_max = tt;
    out.e1 = e1;
    out.c1 = c1;
    out.residual_norm = resmax;
    // store ascending
    out.nodes.resize(m);
    out.values.resize(m);
    out.derivatives.resize(m);
    out.xi_.resize(m);
    out.bary_.resize(m);
    for (int i = 0; i < m; ++i) {
        const int src = m - 1 - i;
        const double sigma = t[src] / std::sqrt(1.0 + t[src] * t[src]);
        out.nodes[i] = 0.5 * (1.0 + sigma);
        out.values[i] = sol[src];
        out.derivatives[i] = deriv[src];
        out.xi_[i] = xc[src];
        double w = ((i == 0 || i == m - 1) ? 0.5 : 1.0);
        out.bary_[i] = ((i & 1) ? -w : w);
    }
    out.beta_right = (deriv[0] + 2.0 * e1 / (tt * tt * tt)) / denom;
    out.c_left = sol[m - 1] * std::pow(tt, 1.0 - a) / (1.0 + c1 / (tt * tt));
    return out;
}

} // namespace hsm
