#include "hsm/profiles.hpp"

#include <cmath>
#include <stdexcept>

#include "hsm/numerics/bessel.hpp"
#include "hsm/numerics/extrapolate.hpp"
#include "hsm/numerics/gamma.hpp"
#include "hsm/numerics/hyp2f1.hpp"
#include "hsm/numerics/quadrature.hpp"

namespace hsm {

namespace {

double recip_gamma(double x) {
    if (std::abs(x) <= 0.5) return x * reciprocal_gamma1p(x);
    return 1.0 / gamma_fn(x);
}

// Hypergeometric parameter sets of the A profile (argument z = -t^2).
struct AParams {
    double a;
    double al1, be1, ga1;   // first solution
    double al2, be2, ga2;   // second solution
    double c2m;             // real modulus of C2
    // inversion-formula prefactors
    double p1, p2, q1, q2;

    explicit AParams(double a_) : a(a_) {
        al1 = a / 4.0;
        be1 = (2.0 + a) / 4.0;
        ga1 = (1.0 + a) / 2.0;
        al2 = (2.0 - a) / 4.0;
        be2 = (4.0 - a) / 4.0;
        ga2 = (3.0 - a) / 2.0;
        c2m = gamma_fn((1.0 + a) / 2.0) * std::pow(gamma_fn((4.0 - a) / 4.0), 2) /
              (std::pow(gamma_fn((2.0 + a) / 4.0), 2) * gamma_fn((3.0 - a) / 2.0));
        const double sqpi = std::sqrt(M_PI);
        p1 = gamma_fn(ga1) * sqpi / std::pow(gamma_fn((2.0 + a) / 4.0), 2);
        // Gamma(-1/2) = -2 sqrt(pi); 1/Gamma(a/4) through the reciprocal to
        // survive the a = 0 pole
        p2 = gamma_fn(ga1) * (-2.0 * sqpi) * recip_gamma(al1) * recip_gamma(al1);
        q1 = gamma_fn(ga2) * sqpi / std::pow(gamma_fn(be2), 2);
        q2 = gamma_fn(ga2) * (-2.0 * sqpi) / std::pow(gamma_fn(al2), 2);
    }
};

constexpr double kASwitch = 1.5;  // closed form below, inversion form above

double a_value_small(const AParams& pp, double t) {
    const double z = -t * t;
    const double f1 = gauss_2f1(pp.al1, pp.be1, pp.ga1, z);
    const double f2 = gauss_2f1(pp.al2, pp.be2, pp.ga2, z);
    return f1 - pp.c2m * std::pow(t, 1.0 - pp.a) * f2;
}

double a_deriv_small(const AParams& pp, double t) {
    const double z = -t * t;
    const double df1 = (pp.al1 * pp.be1 / pp.ga1) *
                       gauss_2f1(pp.al1 + 1, pp.be1 + 1, pp.ga1 + 1, z);
    const double f2 = gauss_2f1(pp.al2, pp.be2, pp.ga2, z);
    const double df2 = (pp.al2 * pp.be2 / pp.ga2) *
                       gauss_2f1(pp.al2 + 1, pp.be2 + 1, pp.ga2 + 1, z);
    return -2.0 * t * df1 -
           pp.c2m * ((1.0 - pp.a) * std::pow(t, -pp.a) * f2 -
                     2.0 * std::pow(t, 2.0 - pp.a) * df2);
}

// groups of the inversion representation: A = t^{-a/2} G1(w) + t^{-(2+a)/2} G2(w),
// w = -1/t^2. The constant parts of G1 cancel exactly by the choice of C2.
void a_groups(const AParams& pp, double w, double& g1, double& g2, double& dg1,
              double& dg2) {
    const double f1a = gauss_2f1_m1(pp.al1, 1.0 - pp.ga1 + pp.al1, 1.0 - pp.be1 + pp.al1, w);
    const double f2a = gauss_2f1_m1(pp.al2, 1.0 - pp.ga2 + pp.al2, 1.0 - pp.be2 + pp.al2, w);
    g1 = pp.p1 * f1a - pp.c2m * pp.q1 * f2a;
    const double f1b = gauss_2f1(pp.be1, 1.0 - pp.ga1 + pp.be1, 1.0 - pp.al1 + pp.be1, w);
    const double f2b = gauss_2f1(pp.be2, 1.0 - pp.ga2 + pp.be2, 1.0 - pp.al2 + pp.be2, w);
    g2 = pp.p2 * f1b - pp.c2m * pp.q2 * f2b;

    auto dF = [&](double al, double be, double ga) {
        return (al * be / ga) * gauss_2f1(al + 1, be + 1, ga + 1, w);
    };
    dg1 = pp.p1 * dF(pp.al1, 1.0 - pp.ga1 + pp.al1, 1.0 - pp.be1 + pp.al1) -
          pp.c2m * pp.q1 * dF(pp.al2, 1.0 - pp.ga2 + pp.al2, 1.0 - pp.be2 + pp.al2);
    dg2 = pp.p2 * dF(pp.be1, 1.0 - pp.ga1 + pp.be1, 1.0 - pp.al1 + pp.be1) -
          pp.c2m * pp.q2 * dF(pp.be2, 1.0 - pp.ga2 + pp.be2, 1.0 - pp.al2 + pp.be2);
}

ProfileEval a_eval(const AParams& pp, double t) {
    if (t <= kASwitch) return {a_value_small(pp, t), a_deriv_small(pp, t)};
    const double w = -1.0 / (t * t);
    double g1, g2, dg1, dg2;
    a_groups(pp, w, g1, g2, dg1, dg2);
    const double a = pp.a;
    const double t1 = std::pow(t, -0.5 * a);
    const double t2 = std::pow(t, -0.5 * (2.0 + a));
    const double value = t1 * g1 + t2 * g2;
    const double dwdt = 2.0 / (t * t * t);
    const double deriv = -0.5 * a * t1 / t * g1 + t1 * dg1 * dwdt -
                         0.5 * (2.0 + a) * t2 / t * g2 + t2 * dg2 * dwdt;
    return {value, deriv};
}

ProfileEval t_eval(const Order& ord, double t) {
    const double s = ord.s;
    const double c = std::pow(2.0, 1.0 - s) / gamma_fn(s);
    const auto k1 = bessel_k_checked(s, t);
    const auto k2 = bessel_k_checked(1.0 - s, t);
    const double ts = std::pow(t, s);
    return {c * ts * k1.value, -c * ts * k2.value};
}

LineBvpCoeffs b_ode(double a) {
    return LineBvpCoeffs{
        [](double t) { return (1.0 + t * t) * (1.0 + t * t); },
        [a](double t) { return (2.0 - a) * t * (1.0 + t * t); },
        [a](double) { return -0.25 * a * a; },
    };
}

} // namespace

Profile build_profile(ProfileKind kind, const Order& s) {
    if (!(s.s > 0.0 && s.s < 1.0)) throw std::domain_error("build_profile: s in (0,1)");
    Profile p;
    p.kind = kind;
    p.order = s;
    switch (kind) {
        case ProfileKind::A: {
            AParams pp(s.a);
            p.closed_form_coeffs = AClosedForm{1.0, pp.c2m};
            break;
        }
        case ProfileKind::B: {
            p.bvp = solve_bvp(b_ode(s.a), s.a);
            break;
        }
        case ProfileKind::T:
            break;
    }
    p.limit_constant = profile_limit(p);
    p.energy = profile_energy(p);
    return p;
}

ProfileEval profile_eval(const Profile& p, double t) {
    switch (p.kind) {
        case ProfileKind::A: {
            if (t <= 0.0) throw std::domain_error("profile_eval: kind A needs t > 0");
            // the Gamma-prefactor set depends only on the order; cache it
            static thread_local double cached_a = 2.0;
            static thread_local AParams cached(0.0);
            if (cached_a != p.order.a) {
                cached = AParams(p.order.a);
                cached_a = p.order.a;
            }
            return a_eval(cached, t);
        }
        case ProfileKind::B: {
            if (!p.bvp) throw std::logic_error("profile_eval: B profile not built");
            return {p.bvp->eval(t), p.bvp->eval_derivative(t)};
        }
        case ProfileKind::T: {
            if (t <= 0.0) throw std::domain_error("profile_eval: kind T needs t > 0");
            return t_eval(p.order, t);
        }
    }
    throw std::logic_error("profile_eval: unreachable");
}

namespace {

// Frobenius piece of K_nu at small t: P(nu, tau) = sum tau^k / (k! (1-nu)_k),
// so that K_nu(t) = (1/2)[G(nu)(t/2)^{-nu} P(nu,tau) + G(-nu)(t/2)^{nu} P(-nu,tau)],
// tau = t^2/4, nu non-integer.
double bessel_frobenius(double nu, double tau) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= tau / (k * (k - nu));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace

double profile_limit(const Profile& p) {
    const double a = p.order.a;
    switch (p.kind) {
        case ProfileKind::A: {
            // -t^a A'(t) = C2m[(1-a)F2 - 2 t^2 F2'] + 2 t^{1+a} F1'(-t^2);
            // subtracting the exactly-known F1' term leaves a pure t^2 ladder.
            AParams pp(a);
            std::vector<double> samples;
            for (int k = 3; k <= 9; ++k) {
                const double t = std::ldexp(1.0, -k);
                const double z = -t * t;
                const double df1 = (pp.al1 * pp.be1 / pp.ga1) *
                                   gauss_2f1(pp.al1 + 1, pp.be1 + 1, pp.ga1 + 1, z);
                const double g = -std::pow(t, a) * a_deriv_small(pp, t) -
                                 2.0 * std::pow(t, 1.0 + a) * df1;
                samples.push_back(g);
            }
            return richardson_limit(samples, 0.5, 2.0);
        }
        case ProfileKind::B: {
            if (!p.bvp) throw std::logic_error("profile_limit: B profile not built");
            // remove the r=0 Frobenius branch through three orders (its rungs
            // t^{-(3+a)}, t^{-(5+a)}, ... are not part of the even beta-ladder);
            // keep t moderate: the weight t^{2-a} amplifies absolute noise.
            const double e1 = p.bvp->e1;
            const double e2 = -e1 * (8.0 + 2.0 * a - 0.25 * a * a) / (4.0 * (3.0 + a));
            const double e3 = -(e2 * (32.0 + 4.0 * a - 0.25 * a * a) + 6.0 * e1) /
                              (6.0 * (5.0 + a));
            std::vector<double> samples;
            for (int k = 1; k <= 6; ++k) {
                const double t = std::ldexp(1.0, k);
                const double u = 1.0 / t;
                const double branch0 = -2.0 * e1 * u * u * u -
                                       4.0 * e2 * std::pow(u, 5) -
                                       6.0 * e3 * std::pow(u, 7);
                const double g = std::pow(1.0 + t * t, 0.5 * (2.0 - a)) *
                                 (p.bvp->eval_derivative(t) - branch0);
                samples.push_back(g);
            }
            return limit_extrapolate(samples, 0.25, {1.0, 2.0, 3.0});
        }
        case ProfileKind::T: {
            // -t^{1-2s} T T' = c^2 t K_s K_{1-s}; the cross terms of the two
            // Frobenius pieces are evaluated by their series and subtracted,
            // leaving the analytic-in-t^2 part for plain Richardson.
            const double s = p.order.s;
            const double c = std::pow(2.0, 1.0 - s) / gamma_fn(s);
            const double gs = gamma_fn(s), g1ms = gamma_fn(1.0 - s);
            const double gms = gamma_fn(-s), gsm1 = gamma_fn(s - 1.0);
            std::vector<double> samples;
            for (int k = 3; k <= 9; ++k) {
                const double t = std::ldexp(1.0, -k);
                const double tau = 0.25 * t * t;
                const auto te = t_eval(p.order, t);
                const double g_all = -std::pow(t, 1.0 - 2.0 * s) * te.value * te.derivative;
                const double th = 0.5 * t;
                const double ps = bessel_frobenius(s, tau);
                const double pms = bessel_frobenius(-s, tau);
                const double p1s = bessel_frobenius(1.0 - s, tau);
                const double ps1 = bessel_frobenius(s - 1.0, tau);
                const double ks = 0.5 * (gs * std::pow(th, -s) * ps +
                                         gms * std::pow(th, s) * pms);
                const double k1s = 0.5 * (g1ms * std::pow(th, s - 1.0) * p1s +
                                          gsm1 * std::pow(th, 1.0 - s) * ps1);
                const double main = 0.25 * gs * g1ms * ps * p1s / th;
                const double cross = c * c * t * (ks * k1s - main);
                samples.push_back(g_all - cross);
            }
            return richardson_limit(samples, 0.5, 2.0);
        }
    }
    throw std::logic_error("profile_limit: unreachable");
}

double profile_energy(const Profile& p) {
    const double a = p.order.a;
    IntegrateOptions opts;
    opts.tol = 1e-11;
    opts.max_level = 11;
    switch (p.kind) {
        case ProfileKind::A: {
            AParams pp(a);
            auto grad_part = [&](double t) {
                const auto e = a_eval(pp, t);
                return std::pow(t, a) * (1.0 + t * t) * e.derivative * e.derivative;
            };
            auto mass_part = [&](double t) {
                const auto e = a_eval(pp, t);
                return std::pow(t, a) * e.value * e.value;
            };
            Interval left = Interval::finite(0.0, 1.0);
            left.lo_algebraic_exponent = -std::abs(a);
            Interval right = Interval::semi_infinite(1.0);
            const double e_grad = integrate_value(grad_part, left, opts) +
                                  integrate_value(grad_part, right, opts);
            const double e_mass = integrate_value(mass_part, left, opts) +
                                  integrate_value(mass_part, right, opts);
            return e_grad - 0.25 * (2.0 + a) * a * e_mass;
        }
        case ProfileKind::B: {
            if (!p.bvp) throw std::logic_error("profile_energy: B profile not built");
            const auto& bvp = *p.bvp;
            opts.tol = 1e-7;  // interpolation jitter floor of the collocation eval
            auto dens = [&](double t) {
                const double b = bvp.eval(t);
                const double bp = bvp.eval_derivative(t);
                const double opt2 = 1.0 + t * t;
                return std::pow(opt2, 1.0 - 0.5 * a) * bp * bp +
                       0.25 * a * a * std::pow(opt2, -1.0 - 0.5 * a) * b * b;
            };
            double total = 0.0;
            total += integrate_value([&](double u) { return dens(-u); },
                                     Interval::semi_infinite(1.0), opts);
            total += integrate_value(dens, Interval::finite(-1.0, 1.0), opts);
            total += integrate_value(dens, Interval::semi_infinite(1.0), opts);
            return total;
        }
        case ProfileKind::T: {
            const double s = p.order.s;
            auto dens = [&](double t) {
                const auto e = t_eval(p.order, t);
                return std::pow(t, 1.0 - 2.0 * s) *
                       (e.value * e.value + e.derivative * e.derivative);
            };
            Interval left = Interval::finite(0.0, 1.0);
            left.lo_algebraic_exponent = std::min(2.0 * s - 1.0, 1.0 - 2.0 * s);
            return integrate_value(dens, left, opts) +
                   integrate_value(dens, Interval::semi_infinite(1.0), opts);
        }
    }
    throw std::logic_error("profile_energy: unreachable");
}

EnvelopeCheck asymptotic_envelope_check(const Profile& p) {
    const double a = p.order.a;
    EnvelopeCheck out;
    double rmin = 1e300, rmax = -1e300;
    const int npts = 200;
    for (int i = 0; i < npts; ++i) {
        const double t = std::pow(10.0, -3.0 + 6.0 * i / (npts - 1.0));
        double ratio = 0.0;
        if (p.kind == ProfileKind::A) {
            const auto e = profile_eval(p, t);
            ratio = e.value * std::pow(1.0 + t * t, 0.25 * (2.0 + a));
        } else if (p.kind == ProfileKind::B) {
            const auto ep = profile_eval(p, t);
            const auto em = profile_eval(p, -t);
            const double env = std::pow(1.0 + t * t, -0.5 * (2.0 - a));
            ratio = std::min(ep.derivative / env, em.derivative / env);
            rmax = std::max(rmax, std::max(ep.derivative / env, em.derivative / env));
        } else {
            throw std::domain_error("asymptotic_envelope_check: kinds A and B only");
        }
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
    }
    out.ratio_min = rmin;
    out.ratio_max = rmax;
    if (p.kind == ProfileKind::A) {
        const double t = 1e5;
        const auto e = profile_eval(p, t);
        out.slope_at_large_t = t * e.derivative / e.value;
    }
    return out;
}

PhiEval phi_eval(PhiKind kind, const Profile& p, const ExtensionPoint& pt) {
    if (pt.y <= 0.0) throw std::domain_error("phi_eval: requires y > 0");
    const double a = p.order.a;
    if (kind == PhiKind::I) {
        if (p.kind != ProfileKind::A)
            throw std::invalid_argument("phi_eval: kind I uses the A profile");
        const double xn = pt.x_n_or_signed_d;
        if (xn <= 0.0) throw std::domain_error("phi_eval: kind I requires x_n > 0");
        const double t = pt.y / xn;
        const auto e = profile_eval(p, t);
        const double pref = std::pow(xn, -0.5 * a);
        PhiEval out;
        out.value = pref * e.value;
        out.grad_d = pref / xn * (-0.5 * a * e.value - t * e.derivative);
        out.grad_y = pref / xn * e.derivative;
        return out;
    }
    if (p.kind != ProfileKind::B)
        throw std::invalid_argument("phi_eval: kind II uses the B profile");
    const double dd = pt.x_n_or_signed_d;
    const double y = pt.y;
    const double r2 = y * y + dd * dd;
    const double t = dd / y;
    const auto e = profile_eval(p, t);
    const double pref = std::pow(r2, -0.25 * a);
    PhiEval out;
    out.value = pref * e.value;
    out.grad_d = -0.5 * a * dd * std::pow(r2, -0.25 * a - 1.0) * e.value +
                 pref * e.derivative / y;
    out.grad_y = -0.5 * a * y * std::pow(r2, -0.25 * a - 1.0) * e.value -
                 pref * e.derivative * dd / (y * y);
    return out;
}

} // namespace hsm
