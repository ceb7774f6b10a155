#pragma once

#include "hsm/testfunctions.hpp"

namespace hsm {

enum class LemmaId { L41, L42, L44, L45, L46, L47 };

// Weighted Hardy lemma parameters. Validity: A+1 > 0, B+1 > 0 and
// 2 Gamma < A+B+2 (L41/L44/L45/L47); the log-weight lemmas L42/L46 sit at
// the critical balance 2 Gamma = A+B+2 and need a finite inner radius;
// L47 additionally requires 0 < A <= 1/2.
struct LemmaParams {
    double A = 0.0;
    double B = 0.0;
    double Gamma_w = 0.0;
    LemmaId lemma_id = LemmaId::L41;
    double R_in = 0.5;  // inner radius of the slab geometry (L42/L46)
};

struct LemmaReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_used = 0.0;
    double margin = 0.0;  // rhs - lhs
    LemmaParams params;
};

bool lemma_params_valid(const LemmaParams& p);

// The sharp constant of each lemma (Gamma^+ = max(0, Gamma) branch).
double lemma_constant(const LemmaParams& p);

// L1-type inequalities (L41, L42, L44, L47) on half-space geometry where the
// distance Laplacian vanishes; v drawn from the bump family.
LemmaReport verify_l1(const LemmaParams& p, const TestFunctionSpec& v);

// L2-type inequalities (L45, L46), same geometry, w in C^1.
LemmaReport verify_l2(const LemmaParams& p, const TestFunctionSpec& w);

} // namespace hsm
