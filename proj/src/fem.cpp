#include <cmath>
#include <stdexcept>

#include "hsm/numerics/eig.hpp"
#include "hsm/numerics/linalg.hpp"
#include "hsm/parallel.hpp"
#include "hsm/rayleigh.hpp"

namespace hsm {

namespace {

// int_{y0}^{y1} y^p dy with the p = -1 log form (interior segments only)
double power_integral(double p, double y0, double y1) {
    if (std::abs(p + 1.0) < 1e-12) return std::log(y1 / y0);
    return (std::pow(y1, p + 1.0) - std::pow(y0, p + 1.0)) / (p + 1.0);
}

struct SegMats {
    double m[2][2];  // weighted mass of the two linear hats
    double k;        // weighted stiffness scale: K = k [[1,-1],[-1,1]]
};

SegMats weighted_segment(double a, double y0, double y1) {
    const double h = y1 - y0;
    const double i0 = power_integral(a, y0, y1);
    const double i1 = power_integral(a + 1.0, y0, y1);
    const double i2 = power_integral(a + 2.0, y0, y1);
    SegMats sm;
    sm.m[0][0] = (y1 * y1 * i0 - 2.0 * y1 * i1 + i2) / (h * h);
    sm.m[0][1] = (-y0 * y1 * i0 + (y0 + y1) * i1 - i2) / (h * h);
    sm.m[1][0] = sm.m[0][1];
    sm.m[1][1] = (y0 * y0 * i0 - 2.0 * y0 * i1 + i2) / (h * h);
    sm.k = i0 / (h * h);
    return sm;
}

} // namespace

DiscreteQuotient discrete_quotient(const Order& ord, const QuarterPlaneGrid& g) {
    if (g.nx < 4 || g.ny < 4 || g.X <= 0.0 || g.Y <= 0.0 || g.grading_exponent < 1.0)
        throw std::domain_error("discrete_quotient: invalid grid");
    const double a = ord.a;
    const int nx = g.nx, ny = g.ny;
    std::vector<double> xs(nx + 1), ys(ny + 1);
    for (int i = 0; i <= nx; ++i)
        xs[i] = g.X * std::pow(static_cast<double>(i) / nx, g.grading_exponent);
    for (int j = 0; j <= ny; ++j)
        ys[j] = g.Y * std::pow(static_cast<double>(j) / ny, g.grading_exponent);

    // free nodes: i in [1, nx-1], j in [0, ny-1]; numbering bottom row first
    const int nb = nx - 1;                 // trace dofs (j = 0)
    const int nin = (nx - 1) * (ny - 1);   // interior dofs (j >= 1)
    auto bidx = [&](int i) { return i - 1; };
    auto iidx = [&](int i, int j) { return (j - 1) * (nx - 1) + (i - 1); };

    // x-direction segment matrices (weight 1) and y-direction (weight y^a)
    std::vector<SegMats> xseg(nx), yseg(ny);
    for (int i = 0; i < nx; ++i) xseg[i] = weighted_segment(0.0, xs[i], xs[i + 1]);
    for (int j = 0; j < ny; ++j) yseg[j] = weighted_segment(a, ys[j], ys[j + 1]);

    // assemble: K = Kx (x) My + Mx (x) Ky  cellwise
    const std::size_t bw = static_cast<std::size_t>(nx);  // coupling span in iidx
    BandedCholesky kii(nin, bw);
    Matrix kbb(nb, nb, 0.0);
    Matrix kbi(nb, nin, 0.0);  // bottom-to-interior coupling (dense rows, sparse cols)
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const auto& sx = xseg[i];
            const auto& sy = yseg[j];
            const double kx[2][2] = {{sx.k, -sx.k}, {-sx.k, sx.k}};
            const double ky[2][2] = {{sy.k, -sy.k}, {-sy.k, sy.k}};
            for (int di = 0; di < 2; ++di)
                for (int dj = 0; dj < 2; ++dj)
                    for (int ei = 0; ei < 2; ++ei)
                        for (int ej = 0; ej < 2; ++ej) {
                            const int gi = i + di, gj = j + dj;
                            const int hi = i + ei, hj = j + ej;
                            if (gi == 0 || gi == nx || gj == ny) continue;
                            if (hi == 0 || hi == nx || hj == ny) continue;
                            const double v = kx[di][ei] * sy.m[dj][ej] +
                                             sx.m[di][ei] * ky[dj][ej];
                            if (gj == 0 && hj == 0) {
                                kbb(bidx(gi), bidx(hi)) += v;
                            } else if (gj == 0) {
                                kbi(bidx(gi), iidx(hi, hj)) += v;
                            } else if (hj == 0) {
                                // symmetric counterpart, filled from the gj==0 case
                            } else {
                                const int r = iidx(gi, gj), c = iidx(hi, hj);
                                if (r >= c) kii.at(r, r - c) += v;
                            }
                        }
        }
    }

    // boundary mass on y = 0 with weight x^{a-1}
    Matrix mb(nb, nb, 0.0);
    for (int i = 0; i < nx; ++i) {
        if (i == 0) {
            const double h = xs[1] - xs[0];
            mb(0, 0) += power_integral(a + 1.0, 0.0, xs[1]) / (h * h);
            continue;
        }
        const auto sm = weighted_segment(a - 1.0, xs[i], xs[i + 1]);
        for (int di = 0; di < 2; ++di)
            for (int ei = 0; ei < 2; ++ei) {
                const int gi = i + di, hi = i + ei;
                if (gi == nx || hi == nx) continue;
                mb(bidx(gi), bidx(hi)) += sm.m[di][ei];
            }
    }

    kii.factorize();

    // Schur complement S = K_bb - K_bi K_ii^{-1} K_ib
    Matrix z(nb, nin, 0.0);  // rows: K_ii^{-1} K_ib columns
    parallel_for(nb, [&](std::size_t col) {
        std::vector<double> rhs(nin, 0.0);
        for (int c = 0; c < nin; ++c) rhs[c] = kbi(col, c);
        kii.solve(rhs);
        for (int c = 0; c < nin; ++c) z(col, c) = rhs[c];
    });
    Matrix schur(nb, nb, 0.0);
    for (int r = 0; r < nb; ++r)
        for (int c = 0; c < nb; ++c) {
            double sum = kbb(r, c);
            for (int l = 0; l < nin; ++l) sum -= kbi(r, l) * z(c, l);
            schur(r, c) = sum;
        }
    for (int r = 0; r < nb; ++r)
        for (int c = r + 1; c < nb; ++c) {
            const double sym = 0.5 * (schur(r, c) + schur(c, r));
            schur(r, c) = schur(c, r) = sym;
        }

    const auto eig = min_generalized_eig(schur, mb);

    DiscreteQuotient out;
    out.eigenvalue = eig.eigenvalue;
    out.residual = eig.residual;
    out.trace_values = eig.eigenvector;

    // sign-normalize on the largest trace component; reconstruct the interior
    double big = 0.0;
    for (double v : out.trace_values)
        if (std::abs(v) > std::abs(big)) big = v;
    const double sgn = (big < 0.0) ? -1.0 : 1.0;
    for (double& v : out.trace_values) v *= sgn;
    std::vector<double> interior(nin, 0.0);
    for (int l = 0; l < nin; ++l) {
        double sum = 0.0;
        for (int c = 0; c < nb; ++c) sum += z(c, l) * out.trace_values[c];
        interior[l] = -sum;
    }
    bool positive = true;
    for (double v : out.trace_values) positive = positive && v > 0.0;
    for (double v : interior) positive = positive && v > 0.0;
    out.trace_positive = positive;

    double num = 0.0, den = 0.0;
    for (int r = 0; r < nb; ++r)
        for (int c = 0; c < nb; ++c) {
            num += out.trace_values[r] * schur(r, c) * out.trace_values[c];
            den += out.trace_values[r] * mb(r, c) * out.trace_values[c];
        }
    out.report.kind = "discrete_quotient";
    out.report.s = ord.s;
    out.report.params = {{"X", g.X}, {"Y", g.Y}, {"nx", double(g.nx)},
                         {"ny", double(g.ny)}, {"grading", g.grading_exponent}};
    out.report.numerator = num;
    out.report.denominator = den;
    out.report.target = sharp_constants(2, ord).dbar;
    out.report.finalize(1e-9, CheckStyle::lower_bound);
    return out;
}

} // namespace hsm
