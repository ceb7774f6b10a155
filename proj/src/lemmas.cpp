#include "hsm/lemmas.hpp"

#include <cmath>
#include <stdexcept>

#include "hsm/numerics/quadrature.hpp"

namespace hsm {

namespace {

double gamma_plus(double g) { return g > 0.0 ? g : 0.0; }

// geometry of one verification run
struct LemmaGeometry {
    bool slab = false;        // Omega = (0,1) with d = min(x, 1-x), else half space
    bool complement = false;  // L44: support in x < 0 with d = |x|
    double dist(double x) const {
        if (complement) return -x;
        if (slab) return std::min(x, 1.0 - x);
        return x;
    }
};

struct PlacedBump {
    Bump2 b;
    LemmaGeometry geo;
};

PlacedBump place_bump(const LemmaParams& p, const TestFunctionSpec& spec) {
    PlacedBump out;
    out.geo.slab = (p.lemma_id == LemmaId::L42 || p.lemma_id == LemmaId::L46);
    out.geo.complement = (p.lemma_id == LemmaId::L44);
    Rng rng(spec.seed);
    out.b.w = spec.params.count("width") ? spec.params.at("width")
                                         : rng.uniform(0.1, 0.5);
    if (out.geo.slab) {
        out.b.w = std::min(out.b.w, 0.2);
        out.b.cx = spec.params.count("center_x") ? spec.params.at("center_x")
                                                 : rng.uniform(out.b.w + 0.05,
                                                               0.95 - out.b.w);
    } else {
        double cx = spec.params.count("center_x") ? spec.params.at("center_x")
                                                  : rng.uniform(out.b.w + 0.5, 2.5);
        out.b.cx = out.geo.complement ? -cx : cx;
    }
    out.b.cy = spec.params.count("center_y") ? spec.params.at("center_y")
                                             : rng.uniform(out.b.w + 0.4, 2.0);
    return out;
}

// tensor Gauss-Legendre over the support box, split at the slab midplane
double integrate_support(const PlacedBump& pb,
                         const std::function<double(double, double)>& f) {
    const auto rule = gauss_jacobi_rule(48, 0.0, 0.0);
    auto patch = [&](double x0, double x1) {
        if (x1 <= x0) return 0.0;
        const double hx = 0.5 * (x1 - x0);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.abscissae.size(); ++i) {
            const double x = x0 + hx * (1.0 + rule.abscissae[i]);
            double inner = 0.0;
            for (std::size_t j = 0; j < rule.abscissae.size(); ++j) {
                const double y = pb.b.cy + pb.b.w * rule.abscissae[j];
                inner += rule.weights[j] * f(x, y);
            }
            acc += rule.weights[i] * inner;
        }
        return acc * hx * pb.b.w;
    };
    const double x0 = pb.b.cx - pb.b.w, x1 = pb.b.cx + pb.b.w;
    if (pb.geo.slab && x0 < 0.5 && x1 > 0.5)
        return patch(x0, 0.5) + patch(0.5, x1);
    return patch(x0, x1);
}

double log_weight(double d, double r_in) {
    const double t = d / r_in;
    return 1.0 / (1.0 - std::log(t));
}

} // namespace

bool lemma_params_valid(const LemmaParams& p) {
    if (!(p.A + 1.0 > 0.0 && p.B + 1.0 > 0.0)) return false;
    switch (p.lemma_id) {
        case LemmaId::L42:
        case LemmaId::L46:
            return p.R_in > 0.0;  // the critical balance fixes Gamma
        case LemmaId::L47:
            return p.A > 0.0 && p.A <= 0.5 &&
                   2.0 * p.Gamma_w < p.A + p.B + 2.0;
        default:
            return 2.0 * p.Gamma_w < p.A + p.B + 2.0;
    }
}

double lemma_constant(const LemmaParams& p) {
    if (!lemma_params_valid(p))
        throw std::domain_error("lemma_constant: parameters outside the valid region");
    const double A = p.A, B = p.B;
    const double gp = gamma_plus(p.Gamma_w);
    switch (p.lemma_id) {
        case LemmaId::L41:
            return (B + 1.0) * (B + A + 2.0 - 2.0 * gp) / (B + A + 2.0);
        case LemmaId::L42:
            return (B + 1.0) / (A + B + 3.0);
        case LemmaId::L44:
            return (A + 1.0) * (A + B + 2.0 - 2.0 * gp);
        case LemmaId::L45: {
            const double c = (B + 1.0) * (B + A + 2.0 - 2.0 * gp) / (B + A + 2.0);
            return 0.25 * c * c;
        }
        case LemmaId::L46: {
            const double c = (B + 1.0) / (2.0 * (A + B + 3.0));
            return c * c;
        }
        case LemmaId::L47: {
            const double num = A * (B + 1.0) * (B + A + 2.0 - 2.0 * gp);
            const double den = (A + B + 2.0) * (A + 2.0 * B + 2.0) - 2.0 * gp * (B + 1.0);
            return num / den;
        }
    }
    throw std::logic_error("lemma_constant: unreachable");
}

LemmaReport verify_l1(const LemmaParams& p, const TestFunctionSpec& spec) {
    if (p.lemma_id == LemmaId::L45 || p.lemma_id == LemmaId::L46)
        throw std::invalid_argument("verify_l1: use verify_l2 for the L2 lemmas");
    const double c0 = lemma_constant(p);
    const PlacedBump pb = place_bump(p, spec);
    const double A = p.A, B = p.B;
    const double gamma = (p.lemma_id == LemmaId::L42) ? 0.5 * (A + B + 2.0) : p.Gamma_w;

    auto lhs_dens = [&](double x, double y) {
        const double d = pb.geo.dist(x);
        const double r2 = d * d + y * y;
        const double v = std::abs(pb.b.value(x, y));
        switch (p.lemma_id) {
            case LemmaId::L41:
                return std::pow(y, A) * std::pow(d, B) * std::pow(r2, -gamma) * v;
            case LemmaId::L42: {
                const double xw = log_weight(d, p.R_in);
                return std::pow(y, A) * std::pow(d, B) * xw * xw *
                       std::pow(r2, -gamma) * v;
            }
            case LemmaId::L44:
                return std::pow(y, A) * std::pow(d, B) * std::pow(r2, -gamma) * v;
            case LemmaId::L47:
                return std::pow(y, -A) * std::pow(d, B) * std::pow(r2, A - gamma) * v;
            default:
                return 0.0;
        }
    };
    auto rhs_dens = [&](double x, double y) {
        const double d = pb.geo.dist(x);
        const double r2 = d * d + y * y;
        double gx, gy;
        pb.b.gradient(x, y, gx, gy);
        const double gv = std::sqrt(gx * gx + gy * gy);
        switch (p.lemma_id) {
            case LemmaId::L41:
                return std::pow(y, A) * std::pow(d, B + 1.0) * std::pow(r2, -gamma) * gv;
            case LemmaId::L42: {
                const double xw = log_weight(d, p.R_in);
                return std::pow(y, A) * std::pow(d, B + 1.0) * xw *
                       std::pow(r2, -gamma) * gv;
            }
            case LemmaId::L44:
                return std::pow(y, A + 1.0) * std::pow(d, B) * std::pow(r2, -gamma) * gv;
            case LemmaId::L47:
                return std::pow(y, A) * std::pow(d, 1.0 + B) * std::pow(r2, -gamma) * gv;
            default:
                return 0.0;
        }
    };

    LemmaReport rep;
    rep.params = p;
    rep.constant_used = c0;
    const double lhs_int = integrate_support(pb, lhs_dens);
    const double rhs_int = integrate_support(pb, rhs_dens);
    if (p.lemma_id == LemmaId::L44) {
        rep.lhs = c0 * lhs_int;                 // (A+1)(A+B+2-2G+) |v|-side
        rep.rhs = (A + B + 2.0) * rhs_int;      // (A+B+2) gradient side
    } else {
        rep.lhs = c0 * lhs_int;
        rep.rhs = rhs_int;
    }
    rep.margin = rep.rhs - rep.lhs;
    return rep;
}

LemmaReport verify_l2(const LemmaParams& p, const TestFunctionSpec& spec) {
    if (!(p.lemma_id == LemmaId::L45 || p.lemma_id == LemmaId::L46))
        throw std::invalid_argument("verify_l2: use verify_l1 for the L1 lemmas");
    const double c0 = lemma_constant(p);
    const PlacedBump pb = place_bump(p, spec);
    const double A = p.A, B = p.B;
    const double gamma = (p.lemma_id == LemmaId::L46) ? 0.5 * (A + B + 2.0) : p.Gamma_w;

    auto lhs_dens = [&](double x, double y) {
        const double d = pb.geo.dist(x);
        const double r2 = d * d + y * y;
        const double v = pb.b.value(x, y);
        double acc = std::pow(y, A) * std::pow(d, B) * std::pow(r2, -gamma) * v * v;
        if (p.lemma_id == LemmaId::L46) {
            const double xw = log_weight(d, p.R_in);
            acc *= xw * xw;
        }
        return acc;
    };
    auto rhs_dens = [&](double x, double y) {
        const double d = pb.geo.dist(x);
        const double r2 = d * d + y * y;
        double gx, gy;
        pb.b.gradient(x, y, gx, gy);
        return std::pow(y, A) * std::pow(d, B + 2.0) * std::pow(r2, -gamma) *
               (gx * gx + gy * gy);
    };

    LemmaReport rep;
    rep.params = p;
    rep.constant_used = c0;
    rep.lhs = c0 * integrate_support(pb, lhs_dens);
    rep.rhs = integrate_support(pb, rhs_dens);
    rep.margin = rep.rhs - rep.lhs;
    return rep;
}

} // namespace hsm
