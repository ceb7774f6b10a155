#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsm/constants.hpp"
#include "hsm/profiles.hpp"
#include "hsm/report.hpp"
#include "hsm/testfunctions.hpp"

namespace hsm {

// Truncated graded tensor grid on (x_n, y) in (0,X) x (0,Y): node coordinates
// X (i/nx)^g, graded toward both boundary axes.
struct QuarterPlaneGrid {
    double X = 8.0, Y = 8.0;
    int nx = 96, ny = 96;
    double grading_exponent = 2.0;
};

// Cutoff-sequence parameters: plateau radius delta, regularization epsilon.
struct SequenceParams {
    double epsilon = 1e-3;
    double delta = 1.0;
    int cutoff_smoothness = 1;
};

struct SequenceQuotient {
    QuotientReport report;                       // reduced leading 1D forms
    std::map<std::string, double> corrections;   // O(1) pieces by 2D quadrature
};

// Trace Hardy I sequence: the quotient of the reduced 1D integrals
//   N21 = int_{eps/delta}^inf -t^{a-1}(1+t^2) A A' dt,
//   D   = int_{eps/delta}^inf A^2/t dt,
// plus the O(1) correction terms of the full 2D test function, reported
// separately. The quotient tends to dbar from above as eps -> 0.
SequenceQuotient sequence_quotient_I(const Order& s, const SequenceParams& p);

// Trace Hardy II sequence: the epsilon-regularized B-profile energy
//   int (1+t^2)^{1-a/2+eps/2} |t|^{-eps} B'^2
//     + ((eps-a)/2)^2 (1+t^2)^{-1-a/2+eps/2} |t|^{-eps} B^2 dt,
// which converges to kbar as eps -> 0 (from above for s >= 1/2).
QuotientReport sequence_quotient_II(const Order& s, const SequenceParams& p);

struct DiscreteQuotient {
    QuotientReport report;
    double eigenvalue = 0.0;
    double residual = 0.0;
    std::vector<double> trace_values;  // eigenvector on the y = 0 row
    bool trace_positive = false;       // after sign normalization
};

// Weighted bilinear finite elements on the quarter-plane grid: stiffness
// with exact y^a cell integrals, boundary mass with exact x^{a-1} integrals,
// homogeneous Dirichlet on x = 0, x = X, y = Y. The discrete space embeds in
// the admissible class, so the smallest eigenvalue bounds dbar from above
// of nothing and from below is bounded by it: lambda >= dbar.
DiscreteQuotient discrete_quotient(const Order& s, const QuarterPlaneGrid& g);

struct HsmDeficitReport {
    double energy = 0.0;
    double hardy = 0.0;          // the weighted trace integral
    double deficit = 0.0;        // energy - dbar * hardy
    double sobolev_term = 0.0;   // boundary-trace critical norm
    double sobolev_bulk = 0.0;   // bulk critical norm of the extension
    double implied_c = 0.0;      // deficit / sobolev_term
};

// Hardy-Sobolev-Maz'ya deficit of one test function family member on the
// half space, n >= 2 (x' directions reduced analytically to a fixed profile).
HsmDeficitReport hsm_deficit(const Order& s, const TestFunctionSpec& family, int n);

} // namespace hsm
