#pragma once

#include <optional>

#include "hsm/constants.hpp"
#include "hsm/numerics/bvp.hpp"

namespace hsm {

enum class ProfileKind { A, B, T };

// Closed-form data of the A profile: A(t) = C1 F1(-t^2) - C2 t^{1-a} F2(-t^2)
// with C1 = 1 and the complex phase already folded into the real modulus C2.
struct AClosedForm {
    double C1 = 1.0;
    double C2_modulus = 0.0;
};

struct Profile {
    ProfileKind kind = ProfileKind::A;
    Order order;
    std::optional<AClosedForm> closed_form_coeffs;  // kind A
    std::optional<BvpSolution> bvp;                 // kind B
    double limit_constant = 0.0;
    double energy = 0.0;
};

struct ProfileEval {
    double value = 0.0;
    double derivative = 0.0;
};

struct EnvelopeCheck {
    double ratio_min = 0.0;   // profile/envelope over the log grid
    double ratio_max = 0.0;
    double slope_at_large_t = 0.0;  // t A'/A at t = 1e5 (kind A only)
};

// Build a profile: A from its hypergeometric representation, B through the
// boundary value solver, T from the Bessel-K closed form. Populates the
// boundary-limit constant and the energy integral.
Profile build_profile(ProfileKind kind, const Order& s);

// Value and dB/dt (dA/dt, dT/dt) at t. Kinds A and T require t > 0.
ProfileEval profile_eval(const Profile& p, double t);

// The profile's boundary-limit constant, recomputed by power-law Richardson
// extrapolation on a geometric sequence:
//   A: -lim_{t->0} t^a A'(t)            (equals dbar)
//   B:  lim_{t->inf} (1+t^2)^{(2-a)/2} B'(t)   (equals kbar)
//   T: -lim_{t->0} t^{1-2s} T(t) T'(t)  (equals the extension factor)
double profile_limit(const Profile& p);

// The profile's energy integral:
//   A: int t^a (1+t^2) A'^2 - ((2+a)a/4) int t^a A^2      (equals dbar)
//   B: int (1+t^2)^{1-a/2} B'^2 + (a^2/4)(1+t^2)^{-1-a/2} B^2   (equals kbar)
//   T: int t^{1-2s} (T^2 + T'^2)                          (equals ext_factor)
double profile_energy(const Profile& p);

// Boundedness of profile/envelope on a 200-point log grid over [1e-3, 1e3]
// (A: value against (1+t^2)^{-(2+a)/4}; B: derivative against
// (1+t^2)^{-(2-a)/2} over both signs of t), plus the A slope limit.
EnvelopeCheck asymptotic_envelope_check(const Profile& p);

// Extension test fields built from the profiles.
enum class PhiKind { I, II };

struct ExtensionPoint {
    double x_n_or_signed_d = 0.0;
    double y = 0.0;
};

struct PhiEval {
    double value = 0.0;
    double grad_d = 0.0;  // derivative in the distance coordinate
    double grad_y = 0.0;
};

// phi-I (x_n, y) = x_n^{-a/2} A(y/x_n), x_n > 0;
// phi-II(d, y)   = (y^2+d^2)^{-a/4} B(d/y), signed d. y > 0 in both.
PhiEval phi_eval(PhiKind kind, const Profile& p, const ExtensionPoint& pt);

} // namespace hsm
