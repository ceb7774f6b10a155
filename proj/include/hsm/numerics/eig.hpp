#pragma once

#include <vector>

#include "hsm/numerics/linalg.hpp"

namespace hsm {

struct GeneralizedEigResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;  // full-length, K-harmonic on ker(M)
    double residual = 0.0;            // ||K v - lambda M v|| / ||K v||
};

// Smallest lambda with K v = lambda M v restricted to range(M).
// K symmetric, positive definite on the complement of ker(M); M symmetric
// positive semidefinite. Kernel directions are eliminated by a Schur
// complement of K in an M-eigenbasis.
GeneralizedEigResult min_generalized_eig(const Matrix& stiffness,
                                         const Matrix& mass);

} // namespace hsm
