#include "dsurf/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dsurf/errors.hpp"

namespace dsurf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 400;
constexpr double kMaxLogFactor = 700.0;
const cplx kI{0.0, 1.0};

void check_index(int j) {
    if (j < 0 || j > 3) throw DomainError("theta: index must be 0..3, got " + std::to_string(j));
}

// Series value and derivative for |Re v| <= 1/2, |Im v| <= Im(tau)/2.
ThetaValue series(int j, cplx v, const ThetaParams& p) {
    const double a = kPi * p.tau.imag();  // -log q
    const double iv = std::abs(v.imag());
    const double stop = p.trunc_eps * 1e-2;
    ThetaValue out;
    if (j == 0 || j == 3) {
        const double sgn = (j == 0) ? -1.0 : 1.0;
        cplx s = 1.0, ds = 0.0;
        double alt = 1.0;
        for (int n = 1; n <= kMaxTerms; ++n) {
            alt *= sgn;
            double logenv = -a * n * n + 2.0 * kPi * n * iv;
            double coef = 2.0 * alt * std::exp(-a * n * n);
            cplx arg = 2.0 * kPi * n * v;
            s += coef * std::cos(arg);
            ds -= coef * 2.0 * kPi * n * std::sin(arg);
            double env = std::exp(logenv) * (1.0 + 2.0 * kPi * n);
            if (env < stop * std::max(std::abs(s), 1e-300) || logenv < -700.0) break;
        }
        out.value = s;
        out.deriv = ds;
    } else {
        const double sgn = (j == 1) ? -1.0 : 1.0;
        cplx s = 0.0, ds = 0.0;
        double alt = 1.0;
        for (int n = 0; n <= kMaxTerms; ++n) {
            double h = n + 0.5;
            double logenv = -a * h * h + 2.0 * kPi * h * iv;
            double coef = 2.0 * alt * std::exp(-a * h * h);
            double w = (2.0 * n + 1.0) * kPi;
            cplx arg = w * v;
            if (j == 1) {
                s += coef * std::sin(arg);
                ds += coef * w * std::cos(arg);
            } else {
                s += coef * std::cos(arg);
                ds -= coef * w * std::sin(arg);
            }
            alt *= sgn;
            double env = std::exp(logenv) * (1.0 + w);
            if (env < stop * std::max(std::abs(s), 1e-300) || logenv < -700.0) break;
        }
        out.value = s;
        out.deriv = ds;
    }
    return out;
}

}  // namespace

ThetaParams theta_params(cplx tau) {
    if (!(tau.imag() > 0.0) || tau.real() != 0.0)
        throw DomainError("theta_params: tau must be pure imaginary with Im(tau) > 0");
    ThetaParams p;
    p.tau = tau;
    p.q = std::exp(-kPi * tau.imag());
    return p;
}

ThetaValue theta_with_prime(int j, cplx v, const ThetaParams& p) {
    check_index(j);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("theta: non-finite argument");
    // v = v1 + n tau, then v1 = v2 + m.
    const double n = std::nearbyint(v.imag() / p.tau.imag());
    const cplx v1 = v - n * p.tau;
    const double m = std::nearbyint(v1.real());
    const cplx v2 = v1 - m;

    const cplx expo = -kI * kPi * n * n * p.tau - 2.0 * kPi * kI * n * v1;
    if (expo.real() > kMaxLogFactor)
        throw ConvergenceError("theta: quasi-periodic factor overflows double precision");
    double sign = 1.0;
    if ((j == 0 || j == 1) && std::fmod(std::abs(n), 2.0) == 1.0) sign = -sign;
    if ((j == 1 || j == 2) && std::fmod(std::abs(m), 2.0) == 1.0) sign = -sign;
    const cplx factor = sign * std::exp(expo);

    ThetaValue base = series(j, v2, p);
    ThetaValue out;
    out.value = factor * base.value;
    out.deriv = factor * (base.deriv - 2.0 * kPi * kI * n * base.value);
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()) ||
        !std::isfinite(out.deriv.real()) || !std::isfinite(out.deriv.imag()))
        throw ConvergenceError("theta: non-finite result");
    return out;
}

cplx theta(int j, cplx v, const ThetaParams& p) { return theta_with_prime(j, v, p).value; }

cplx theta_prime(int j, cplx v, const ThetaParams& p) { return theta_with_prime(j, v, p).deriv; }

JacobiComplex jacobi_complex(cplx u, const EllipticModulus& mod) {
    // Poles of sn, cn, dn sit at iK' + 2aK + 2biK'.
    const double a = u.real() / (2.0 * mod.K);
    const double b = (u.imag() - mod.Kp) / (2.0 * mod.Kp);
    if (std::abs(a - std::nearbyint(a)) < 1e-14 && std::abs(b - std::nearbyint(b)) < 1e-14)
        throw PoleError("jacobi_complex: argument is a pole");
    const ThetaParams p = theta_params(mod.taup);
    const cplx v = (u - mod.K) / (2.0 * kI * mod.Kp);
    const cplx t0 = theta(0, v, p), t1 = theta(1, v, p), t2 = theta(2, v, p), t3 = theta(3, v, p);
    const cplx z0 = theta(0, 0.0, p), z2 = theta(2, 0.0, p), z3 = theta(3, 0.0, p);
    if (t3 == 0.0) throw PoleError("jacobi_complex: argument is a pole");
    JacobiComplex out;
    out.sn = t0 * z3 / (t3 * z0);
    out.cn = t1 * z2 / (kI * t3 * z0);
    out.dn = t2 * z2 / (t3 * z3);
    for (cplx c : {out.sn, out.cn, out.dn})
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw PoleError("jacobi_complex: argument is a pole");
    return out;
}

WeierstrassConstants weierstrass_constants(const EllipticModulus& mod) {
    WeierstrassConstants w;
    const double k = mod.k, kp = mod.kp;
    const double c = 2.0 * k * k - 1.0;
    w.e1 = 2.0 / 3.0 * c;
    w.e2 = cplx(-c / 3.0, -2.0 * k * kp);
    w.e3 = cplx(-c / 3.0, 2.0 * k * kp);
    w.omega = mod.Kp;
    w.omegap = cplx(mod.Kp, mod.K) / 2.0;
    w.zeta_omega_over_omega = 2.0 * mod.Ep / mod.Kp - (w.e1.real() + 1.0);
    return w;
}

namespace {

// Coordinates of z in the basis {2K', iK + K'}.
bool near_lattice(cplx z, const EllipticModulus& mod) {
    const double b = z.imag() / mod.K;
    const double a = (z.real() - b * mod.Kp) / (2.0 * mod.Kp);
    const double tol = 1e-13;
    return std::abs(a - std::nearbyint(a)) < tol && std::abs(b - std::nearbyint(b)) < tol;
}

}  // namespace

cplx weierstrass_p(cplx z, const EllipticModulus& mod) {
    const WeierstrassConstants w = weierstrass_constants(mod);
    if (near_lattice(z, mod)) throw PoleError("weierstrass_p: z is a lattice point");
    // At z = omega (mod lattice) the formula is 0/0 with limit e1.
    if (near_lattice(z - w.omega, mod)) return w.e1;
    const JacobiComplex j = jacobi_complex(2.0 * kI * z + kI * mod.Kp, mod);
    const cplx d = j.dn - kI * mod.k * j.sn;
    return d * d + w.e1;
}

}  // namespace dsurf
