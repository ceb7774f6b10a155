#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hsm/numerics/linalg.hpp"

namespace hsm {

// Limit of g(t) as t -> t* from samples on a geometric sequence, assuming
//   g(t_k) = L + sum_j c_j r_k^{p_j},   r_k = (ratio)^k in (0,1),
// with known correction exponents p_j > 0. Solves the small Vandermonde-type
// system on the last (exponents+1) samples.
// samples[k] corresponds to scale factor ratio^k (ratio < 1 strictly).
inline double limit_extrapolate(const std::vector<double>& samples, double ratio,
                                const std::vector<double>& exponents) {
    const std::size_t m = exponents.size() + 1;
    if (samples.size() < m)
        throw std::invalid_argument("limit_extrapolate: too few samples");
    const std::size_t off = samples.size() - m;
    Matrix a(m, m);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = off + i;
        a(i, 0) = 1.0;
        for (std::size_t j = 0; j < exponents.size(); ++j)
            a(i, j + 1) = std::pow(ratio, static_cast<double>(k) * exponents[j]);
        b[i] = samples[k];
    }
    lu_solve_inplace(a, b);
    return b[0];
}

// Classical Richardson on a geometric sequence with a single known leading
// exponent p and monotonicity guard: returns the last stable extrapolant.
inline double richardson_limit(const std::vector<double>& samples, double ratio,
                               double p) {
    std::vector<double> row = samples;
    const double w = std::pow(ratio, p);
    double best = row.back();
    for (std::size_t lvl = 1; lvl < samples.size(); ++lvl) {
        for (std::size_t i = 0; i + lvl < samples.size(); ++i) {
            const double wp = std::pow(w, static_cast<double>(lvl));
            row[i] = (row[i + 1] - wp * row[i]) / (1.0 - wp);
        }
        best = row[samples.size() - 1 - lvl];
    }
    return best;
}

} // namespace hsm
