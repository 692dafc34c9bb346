#include "dsurf/identities.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <random>

#include "dsurf/elliptic.hpp"
#include "dsurf/errors.hpp"
#include "dsurf/theta.hpp"

namespace dsurf {
namespace {

const cplx I{0, 1};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
    cplx point(double re, double im) { return {uniform(-re, re), uniform(-im, im)}; }

private:
    std::mt19937_64 g_;
};

// |lhs - rhs| over the largest magnitude among lhs, rhs and the summands.
double rel(cplx lhs, cplx rhs, std::initializer_list<cplx> terms = {}) {
    double scale = std::max({1e-300, std::abs(lhs), std::abs(rhs)});
    for (cplx t : terms) scale = std::max(scale, std::abs(t));
    return std::abs(lhs - rhs) / scale;
}

SuiteResult finish(std::string name, double worst, double tol, long samples, long identities) {
    return make_suite(std::move(name), worst, tol, samples, identities);
}

EllipticModulus random_modulus(Rng& r) { return make_modulus(r.uniform(0.2, 0.95)); }

struct Th {
    cplx t0, t1, t2, t3;
};

Th all(cplx v, const ThetaParams& p) { return {theta(0, v, p), theta(1, v, p), theta(2, v, p), theta(3, v, p)}; }

}  // namespace

SuiteResult theta_addition_suite(const IdentityOptions& opt) {
    Rng r(opt.seed + 1);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const ThetaParams p = theta_params(md.taup);
        const cplx x = r.point(1.0, 0.4), y = r.point(1.0, 0.4);
        const Th X = all(x, p), Y = all(y, p), Z = all(0.0, p);
        for (double s : {1.0, -1.0}) {
            const Th P = all(x + s * y, p), M = all(x - s * y, p);
            cplx a = X.t3 * X.t0 * Y.t3 * Y.t0, b = X.t1 * X.t2 * Y.t1 * Y.t2;
            worst = std::max(worst, rel(P.t3 * M.t0 * Z.t3 * Z.t0, a - s * b, {a, b}));
            a = X.t1 * X.t2 * Y.t3 * Y.t0, b = X.t3 * X.t0 * Y.t1 * Y.t2;
            worst = std::max(worst, rel(P.t1 * M.t2 * Z.t3 * Z.t0, a + s * b, {a, b}));
            a = X.t1 * X.t3 * Y.t2 * Y.t0, b = X.t2 * X.t0 * Y.t1 * Y.t3;
            worst = std::max(worst, rel(P.t1 * M.t3 * Z.t2 * Z.t0, a + s * b, {a, b}));
            a = X.t2 * X.t0 * Y.t2 * Y.t0, b = X.t1 * X.t3 * Y.t1 * Y.t3;
            worst = std::max(worst, rel(P.t2 * M.t0 * Z.t2 * Z.t0, a - s * b, {a, b}));
        }
    }
    return finish("theta_addition", worst, 1e-10, opt.samples, 8);
}

SuiteResult theta_duplication_suite(const IdentityOptions& opt) {
    Rng r(opt.seed + 2);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const ThetaParams p1 = theta_params(md.taup), p2 = theta_params(2.0 * md.taup);
        const cplx x = r.point(1.0, 0.3), y = r.point(1.0, 0.3);
        const Th P = all(x + y, p1), M = all(x - y, p1), X = all(2.0 * x, p2), Y = all(2.0 * y, p2);
        cplx a = X.t3 * Y.t3, b = X.t2 * Y.t2;
        worst = std::max(worst, rel(P.t3 * M.t3, a + b, {a, b}));
        worst = std::max(worst, rel(P.t0 * M.t0, a - b, {a, b}));
        a = X.t2 * Y.t3, b = X.t3 * Y.t2;
        worst = std::max(worst, rel(P.t2 * M.t2, a + b, {a, b}));
        worst = std::max(worst, rel(P.t1 * M.t1, b - a, {a, b}));
    }
    return finish("theta_duplication", worst, 1e-10, opt.samples, 4);
}

SuiteResult tau_argument_suite(const IdentityOptions& opt) {
    Rng r(opt.seed + 3);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const ThetaParams p1 = theta_params(md.taup), p2 = theta_params(2.0 * md.taup);
        const double psi = r.uniform(-4, 4), lam = r.uniform(-1, 1), z = r.uniform(-1, 1);
        const double c = 1.0 / (md.k * md.Kp);
        const cplx vm = (psi - md.K) / (2.0 * I * md.Kp);
        const cplx vz = vm + I * c * z, vp = vz + c * lam, vn = vz - c * lam;
        const Th Z = all(0.0, p1);
        for (cplx v : {vp, vn}) {
            const Th A = all(v, p1), B = all(v, p2);
            const cplx s3 = B.t3 * B.t3, s2 = B.t2 * B.t2;
            worst = std::max(worst, rel(A.t3 * Z.t3, s3 + s2, {s3, s2}));
            worst = std::max(worst, rel(A.t0 * Z.t0, s3 - s2, {s3, s2}));
            worst = std::max(worst, rel(A.t2 * Z.t2, 2.0 * B.t2 * B.t3));
        }
        const Th V = all(vz, p1), L = all(c * lam, p1), P = all(vp, p2), N = all(vn, p2);
        cplx a = P.t3 * N.t3, b = P.t2 * N.t2;
        worst = std::max(worst, rel(V.t3 * L.t3, a + b, {a, b}));
        worst = std::max(worst, rel(V.t0 * L.t0, a - b, {a, b}));
        a = P.t2 * N.t3, b = P.t3 * N.t2;
        worst = std::max(worst, rel(V.t2 * L.t2, a + b, {a, b}));
        worst = std::max(worst, rel(V.t1 * L.t1, b - a, {a, b}));
    }
    return finish("tau_argument_specialisations", worst, 1e-10, opt.samples, 10);
}

SuiteResult theta_quotient_suite(const IdentityOptions& opt, int item) {
    if (item < 1 || item > 3) throw DomainError("theta_quotient_suite: item must be 1..3");
    Rng r(opt.seed + 10 + item);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const ThetaParams p = theta_params(md.taup);
        const double psi = r.uniform(-10, 10);
        const cplx v = (psi - md.K) / (2.0 * I * md.Kp);
        const JacobiTriple j = jacobi(psi, md);
        const Th A = all(v, p), Z = all(0.0, p);
        cplx lhs, rhs;
        switch (item) {
            case 1: lhs = A.t0 * Z.t3 / (A.t3 * Z.t0), rhs = j.sn; break;
            case 2: lhs = A.t1 * Z.t2 / (A.t3 * Z.t0), rhs = I * j.cn; break;
            default: lhs = A.t2 * Z.t2 / (A.t3 * Z.t3), rhs = j.dn; break;
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    static const char* names[] = {"theta_quotient_sn", "theta_quotient_cn", "theta_quotient_dn"};
    return finish(names[item - 1], worst, 1e-10, opt.samples, 1);
}

SuiteResult weierstrass_suite(const IdentityOptions& opt, int item) {
    using boost::math::quadrature::gauss_kronrod;
    if (item < 1 || item > 2) throw DomainError("weierstrass_suite: item must be 1 or 2");
    Rng r(opt.seed + 20 + item);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const WeierstrassConstants w = weierstrass_constants(md);
        // zeta(w)/w from the complete integrals of the first lattice, not from E'.
        const double zoo = M_PI / (md.K * md.Kp) - 2.0 * md.E / md.K + 1.0 - w.e1.real();
        const double zeta_omega = zoo * w.omega;
        if (item == 1) {
            // zeta(w/2) = zeta(w) + int_{w/2}^{w} p along the real segment.
            const double seg = gauss_kronrod<double, 31>::integrate(
                [&](double x) { return weierstrass_p(x, md).real(); }, w.omega / 2, w.omega, 10, 1e-14);
            worst = std::max(worst, std::abs(zeta_omega + seg - 0.5 * zeta_omega - md.k));
        } else {
            const double lhs = weierstrass_p(w.omega / 2, md).real() + zoo;
            worst = std::max(worst, std::abs(lhs - 2.0 * md.Ep / md.Kp));
        }
    }
    return finish(item == 1 ? "weierstrass_zeta_half_period" : "weierstrass_p_half_period", worst, 1e-10,
                  opt.samples, 1);
}

SuiteResult jacobi_step_suite(const IdentityOptions& opt, int item) {
    if (item < 1 || item > 9) throw DomainError("jacobi_step_suite: item must be 1..9");
    Rng r(opt.seed + 30 + item);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const double k2 = md.k * md.k;
        const double gamma = r.uniform(-3, 3), psi = r.uniform(-10, 10);
        const JacobiTriple g = jacobi(gamma, md), a = jacobi(psi, md), b = jacobi(psi + gamma, md),
                           z = jacobi(psi - gamma, md);
        double res = 0;
        switch (item) {
            case 1: res = g.dn * a.sn * b.sn + a.cn * b.cn - g.cn; break;
            case 2: res = k2 * g.cn * a.sn * b.sn + a.dn * b.dn - g.dn; break;
            case 3:
                res = k2 * g.sn * b.sn * b.sn + g.dn * b.sn * a.cn * b.dn - a.sn * b.cn * b.dn - g.sn;
                break;
            case 4: res = g.sn * b.dn + a.sn * b.cn - g.dn * b.sn * a.cn; break;
            case 5: res = g.dn * b.dn + k2 * g.sn * b.sn * a.cn - a.dn; break;
            case 6:
                res = g.dn * a.sn * a.cn * b.sn * b.cn + g.sn * a.cn * a.dn * b.sn - a.cn * a.cn * b.sn * b.sn;
                break;
            case 7: res = g.cn * b.cn + g.sn * b.sn * a.dn - a.cn; break;
            case 8: res = g.sn * b.cn + a.sn * b.dn - g.cn * b.sn * a.dn; break;
            default:
                res = g.dn * g.dn * z.sn * b.sn + z.cn * b.cn + g.sn * g.sn * z.dn * b.dn - g.cn * g.cn;
                break;
        }
        worst = std::max(worst, std::abs(res));
    }
    static const char* names[] = {"jacobi_step_i",  "jacobi_step_ii",  "jacobi_step_iii",
                                  "jacobi_step_iv", "jacobi_step_v",   "jacobi_step_vi",
                                  "jacobi_step_vii", "jacobi_step_viii", "jacobi_step_ix"};
    return finish(names[item - 1], worst, 1e-11, opt.samples, 1);
}

SuiteResult theta_modular_suite(const IdentityOptions& opt) {
    Rng r(opt.seed + 40);
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
        const EllipticModulus md = random_modulus(r);
        const cplx tau = md.tau, taup = -1.0 / tau;
        const ThetaParams p = theta_params(tau), pp = theta_params(taup);
        const cplx v = r.point(1.0, 0.3);
        const cplx lhs = theta(3, v / tau, pp);
        const cplx rhs = std::exp(I * M_PI * (v * v / tau - 0.25)) * std::sqrt(tau) * theta(3, v, p);
        worst = std::max(worst, rel(lhs, rhs));
    }
    return finish("theta_modular", worst, 1e-9, opt.samples, 1);
}

std::vector<SuiteResult> run_identities(const IdentityOptions& opt) {
    std::vector<SuiteResult> out;
    out.push_back(theta_addition_suite(opt));
    out.push_back(theta_duplication_suite(opt));
    out.push_back(tau_argument_suite(opt));
    for (int i = 1; i <= 3; ++i) out.push_back(theta_quotient_suite(opt, i));
    for (int i = 1; i <= 2; ++i) out.push_back(weierstrass_suite(opt, i));
    for (int i = 1; i <= 9; ++i) out.push_back(jacobi_step_suite(opt, i));
    out.push_back(theta_modular_suite(opt));
    return out;
}

}  // namespace dsurf
