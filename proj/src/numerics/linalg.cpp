#include "hsm/numerics/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hsm {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

void lu_solve_inplace(Matrix& a, std::vector<double>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("lu_solve: shape");
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (a(p, k) == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(b[k], b[p]);
        }
        const double inv = 1.0 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) * inv;
            if (m == 0.0) continue;
            a(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
            b[i] -= m * b[k];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
        b[i] = s / a(i, i);
    }
}

void jacobi_eigensolver(const Matrix& a_in, std::vector<double>& eigenvalues,
                        Matrix& eigenvectors) {
    const std::size_t n = a_in.rows();
    Matrix a = a_in;
    Matrix v(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-300) break;
        double thresh = (sweep < 3) ? 0.2 * off / (n * n) : 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double scale = 100.0 * std::abs(apq);
                if (sweep > 3 &&
                    scale <= 1e-15 * std::abs(a(p, p)) &&
                    scale <= 1e-15 * std::abs(a(q, q))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                if (apq * apq <= thresh) continue;
                const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i);
    // sort ascending, permute columns of v accordingly
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return eigenvalues[i] < eigenvalues[j]; });
    std::vector<double> ev(n);
    Matrix vs(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ev[j] = eigenvalues[order[j]];
        for (std::size_t i = 0; i < n; ++i) vs(i, j) = v(i, order[j]);
    }
    eigenvalues = std::move(ev);
    eigenvectors = std::move(vs);
}

void symmetric_tridiagonal_eig(const std::vector<double>& diag_in,
                               const std::vector<double>& sub_in,
                               std::vector<double>& eigenvalues,
                               std::vector<double>& first_components) {
    // Implicit-shift QL with eigenvector first-row accumulation.
    const int n = static_cast<int>(diag_in.size());
    std::vector<double> d = diag_in;
    std::vector<double> e(n, 0.0);
    for (int i = 1; i < n; ++i) e[i - 1] = sub_in[i];
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;  // track only the first row of the rotation product
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) + dd == dd) break;
            }
            if (m != l) {
                if (iter++ == 80)
                    throw std::runtime_error("symmetric_tridiagonal_eig: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    const double zi = z[i], zi1 = z[i + 1];
                    z[i + 1] = s * zi + c * zi1;
                    z[i] = c * zi - s * zi1;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    // sort ascending
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
    eigenvalues.resize(n);
    first_components.resize(n);
    for (int j = 0; j < n; ++j) {
        eigenvalues[j] = d[order[j]];
        first_components[j] = z[order[j]];
    }
}

BandedCholesky::BandedCholesky(std::size_t n, std::size_t bandwidth)
    : n_(n), bw_(bandwidth), band_(n * (bandwidth + 1), 0.0) {}

void BandedCholesky::factorize() {
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t kmin = (j > bw_) ? j - bw_ : 0;
        double djj = at(j, 0);
        for (std::size_t k = kmin; k < j; ++k) {
            const double l = at(j, j - k);
            djj -= l * l;
        }
        if (djj <= 0.0) throw std::runtime_error("BandedCholesky: not positive definite");
        const double ljj = std::sqrt(djj);
        at(j, 0) = ljj;
        const std::size_t imax = std::min(n_ - 1, j + bw_);
        for (std::size_t i = j + 1; i <= imax; ++i) {
            double s = at(i, i - j);
            const std::size_t kmin2 = std::max((i > bw_) ? i - bw_ : 0, kmin);
            for (std::size_t k = kmin2; k < j; ++k)
                s -= at(i, i - k) * at(j, j - k);
            at(i, i - j) = s / ljj;
        }
    }
    factored_ = true;
}

void BandedCholesky::solve(std::vector<double>& b) const {
    if (!factored_) throw std::logic_error("BandedCholesky::solve before factorize");
    // forward: L y = b
    for (std::size_t i = 0; i < n_; ++i) {
        double s = b[i];
        const std::size_t kmin = (i > bw_) ? i - bw_ : 0;
        for (std::size_t k = kmin; k < i; ++k) s -= at(i, i - k) * b[k];
        b[i] = s / at(i, 0);
    }
    // backward: L^T x = y
    for (std::size_t i = n_; i-- > 0;) {
        double s = b[i];
        const std::size_t imax = std::min(n_ - 1, i + bw_);
        for (std::size_t k = i + 1; k <= imax; ++k) s -= at(k, k - i) * b[k];
        b[i] = s / at(i, 0);
    }
}

} // namespace hsm
