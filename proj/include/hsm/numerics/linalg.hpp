#pragma once

#include <cstddef>
#include <vector>

namespace hsm {

// Row-major dense matrix, just enough for the collocation and eigen solves.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

// Solve A x = b by partial-pivot LU; A is overwritten. b holds the solution.
void lu_solve_inplace(Matrix& a, std::vector<double>& b);

// Eigenvalues/eigenvectors of a dense symmetric matrix by cyclic Jacobi
// rotations. Eigenvalues ascending; eigenvectors in the columns of V.
void jacobi_eigensolver(const Matrix& a, std::vector<double>& eigenvalues,
                        Matrix& eigenvectors);

// Eigenvalues of a symmetric tridiagonal matrix (diag, sub with sub[0] unused)
// plus first components of the normalized eigenvectors (Golub-Welsch needs
// them). Implicit-shift QL.
void symmetric_tridiagonal_eig(const std::vector<double>& diag,
                               const std::vector<double>& sub,
                               std::vector<double>& eigenvalues,
                               std::vector<double>& first_components);

// SPD banded Cholesky, lower storage: band(i, d) = A(i, i-d), d = 0..bw.
class BandedCholesky {
  public:
    BandedCholesky(std::size_t n, std::size_t bandwidth);
    double& at(std::size_t i, std::size_t d) { return band_[i * (bw_ + 1) + d]; }
    double at(std::size_t i, std::size_t d) const { return band_[i * (bw_ + 1) + d]; }
    void factorize();
    void solve(std::vector<double>& b) const;  // in place
    std::size_t size() const { return n_; }
    std::size_t bandwidth() const { return bw_; }

  private:
    std::size_t n_, bw_;
    std::vector<double> band_;
    bool factored_ = false;
};

} // namespace hsm
