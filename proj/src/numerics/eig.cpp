#include "hsm/numerics/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace hsm {

GeneralizedEigResult min_generalized_eig(const Matrix& stiffness, const Matrix& mass) {
    const std::size_t n = stiffness.rows();
    if (mass.rows() != n || stiffness.cols() != n || mass.cols() != n)
        throw std::invalid_argument("min_generalized_eig: shape mismatch");

    std::vector<double> mu;
    Matrix q;
    jacobi_eigensolver(mass, mu, q);
    double mumax = 0.0;
    for (double m : mu) mumax = std::max(mumax, std::abs(m));
    if (mumax <= 0.0) throw std::domain_error("min_generalized_eig: mass is zero");
    const double cut = 1e-12 * mumax;

    std::vector<std::size_t> rset, kset;
    for (std::size_t i = 0; i < n; ++i)
        (mu[i] > cut ? rset : kset).push_back(i);
    const std::size_t r = rset.size(), k = kset.size();

    // K in the M-eigenbasis
    Matrix kq(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += stiffness(i, l) * q(l, j);
            kq(i, j) = s;
        }
    Matrix khat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += q(l, i) * kq(l, j);
            khat(i, j) = s;
        }

    // Schur complement of the kernel block: S = K_rr - K_rk K_kk^{-1} K_kr
    Matrix s_mat(r, r);
    Matrix zk;  // K_kk^{-1} K_kr, column by column
    if (k > 0) {
        Matrix kkk(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) kkk(i, j) = khat(kset[i], kset[j]);
        zk = Matrix(k, r);
        for (std::size_t j = 0; j < r; ++j) {
            Matrix tmp = kkk;
            std::vector<double> rhs(k);
            for (std::size_t i = 0; i < k; ++i) rhs[i] = khat(kset[i], rset[j]);
            lu_solve_inplace(tmp, rhs);
            for (std::size_t i = 0; i < k; ++i) zk(i, j) = rhs[i];
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            double s = khat(rset[i], rset[j]);
            for (std::size_t l = 0; l < k; ++l) s -= khat(rset[i], kset[l]) * zk(l, j);
            s_mat(i, j) = s;
        }

    // reduce (S, diag(mu_r)) by the diagonal square root
    Matrix c(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            c(i, j) = s_mat(i, j) / std::sqrt(mu[rset[i]] * mu[rset[j]]);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const double sym = 0.5 * (c(i, j) + c(j, i));
            c(i, j) = c(j, i) = sym;
        }
    std::vector<double> lam;
    Matrix w;
    jacobi_eigensolver(c, lam, w);

    GeneralizedEigResult res;
    res.eigenvalue = lam[0];
    // assemble the eigenvector in the original basis
    std::vector<double> yr(r);
    for (std::size_t i = 0; i < r; ++i) yr[i] = w(i, 0) / std::sqrt(mu[rset[i]]);
    std::vector<double> yhat(n, 0.0);
    for (std::size_t i = 0; i < r; ++i) yhat[rset[i]] = yr[i];
    for (std::size_t l = 0; l < k; ++l) {
        double s = 0.0;
        for (std::size_t j = 0; j < r; ++j) s += zk(l, j) * yr[j];
        yhat[kset[l]] = -s;
    }
    res.eigenvector.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += q(i, j) * yhat[j];
        res.eigenvector[i] = s;
    }
    // residual
    double nkv = 0.0, nres = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double kv = 0.0, mv = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            kv += stiffness(i, j) * res.eigenvector[j];
            mv += mass(i, j) * res.eigenvector[j];
        }
        const double rr = kv - res.eigenvalue * mv;
        nkv += kv * kv;
        nres += rr * rr;
    }
    res.residual = std::sqrt(nres) / std::max(std::sqrt(nkv), 1e-300);
    return res;
}

} // namespace hsm
