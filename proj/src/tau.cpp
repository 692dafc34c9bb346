#include "dsurf/tau.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dsurf/steps.hpp"

namespace dsurf {
namespace {

const cplx I(0.0, 1.0);

// i^m for any integer m.
cplx ipow(long m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double psi_of(const TauContext& ctx, long m, double t) {
    return static_cast<double>(m) * ctx.gamma_step + ctx.beta_rate * t;
}

double chain(const TauContext& ctx) {
    return ctx.family == Family::dn ? 1.0 / (ctx.mod.k * ctx.mod.Kp) : 1.0 / ctx.mod.Kp;
}

// theta_3 + c2 theta_2 on the 2 tau' lattice, with its v-derivative.
ThetaValue combo(const TauContext& ctx, cplx v) {
    const cplx c2 = ctx.family == Family::dn ? I : cplx(1.0, 0.0);
    const ThetaValue a = theta_with_prime(3, v, ctx.th2);
    const ThetaValue b = theta_with_prime(2, v, ctx.th2);
    return {a.value + c2 * b.value, a.deriv + c2 * b.deriv};
}

}  // namespace

TauContext make_tau_context(const EllipticModulus& mod, Family family, bool twisted, double gamma, double beta) {
    TauContext c;
    c.mod = mod;
    c.family = family;
    c.twisted = twisted;
    c.lambda0 = family == Family::dn ? 0.5 * mod.k * mod.Kp : 0.5 * mod.Kp;
    c.gamma_step = gamma;
    c.beta_rate = beta;
    c.alpha_step = alpha_step(mod, family, twisted, gamma);
    c.epsilon = twisted ? -1 : 1;
    c.th1 = theta_params(mod.taup);
    c.th2 = theta_params(2.0 * mod.taup);
    const WeierstrassConstants w = weierstrass_constants(mod);
    c.wp_scalar = weierstrass_p(cplx(0.5 * mod.Kp, 0.0), mod).real() + w.zeta_omega_over_omega;
    return c;
}

TauFunctions tau_functions(const TauContext& ctx, long m, double t, cplx lambda, cplx z) {
    const double psi = psi_of(ctx, m, t);
    const double phi = phi_angle(ctx.mod, ctx.family, ctx.alpha_step, ctx.beta_rate, m, t);
    const double c = chain(ctx);
    cplx base = (psi - ctx.mod.K) / (2.0 * I * ctx.mod.Kp) + I * c * z;
    if (ctx.family == Family::cn) base += 0.5 + ctx.mod.taup;
    const ThetaValue minus = combo(ctx, base - c * lambda);
    const ThetaValue plus = combo(ctx, base + c * lambda);
    cplx pf = std::exp(-0.5 * I * phi), pg = std::exp(0.5 * I * phi);
    if (ctx.twisted) {
        pf *= ipow(m);
        pg *= ipow(-m);
    }
    TauFunctions r;
    r.f = pf * minus.value;
    r.g = pg * plus.value;
    r.f_lambda = -c * pf * minus.deriv;
    r.g_lambda = c * pg * plus.deriv;
    r.f_z = I * c * pf * minus.deriv;
    r.g_z = I * c * pg * plus.deriv;
    return r;
}

TauFunctions tau_conjugates(const TauContext& ctx, long m, double t, cplx lambda, cplx z) {
    const TauFunctions a = tau_functions(ctx, m, t, std::conj(lambda), std::conj(z));
    return {std::conj(a.f),        std::conj(a.g),   std::conj(a.f_lambda),
            std::conj(a.g_lambda), std::conj(a.f_z), std::conj(a.g_z)};
}

double tau_eta(const TauContext& ctx, long m, double t) {
    const EllipticModulus& md = ctx.mod;
    const double offset = (ctx.family == Family::dn ? 0.5 : 1.5) * M_PI / md.Ep;
    return psi_of(ctx, m, t) - offset -
           static_cast<double>(m) * md.k * md.k * md.Kp / md.Ep * sn2_integral(ctx.gamma_step, md);
}

double tau_iR(const TauContext& ctx, long m, double t) {
    // alpha_m = exp((i/2) eta_m int (p(w) + zeta(w)/w) dw) with w = lambda/k (dn) or lambda (cn).
    const double dw = ctx.family == Family::dn ? 1.0 / ctx.mod.k : 1.0;
    return -0.5 * dw * tau_eta(ctx, m, t) * ctx.wp_scalar;
}

TauSample tau_sample(const TauContext& ctx, long m, double t, double lambda, double z) {
    const TauFunctions a = tau_functions(ctx, m, t, lambda, z);
    const TauFunctions s = tau_conjugates(ctx, m, t, lambda, z);
    TauSample r;
    r.f = a.f;
    r.g = a.g;
    r.F = a.f * s.f + a.g * s.g;
    r.H = 0.5 * I * (a.g_lambda * s.f - a.g * s.f_lambda);
    r.dlogF_dz = (a.f_z * s.f + a.f * s.f_z + a.g_z * s.g + a.g * s.g_z) / r.F;
    r.iR = tau_iR(ctx, m, t);
    r.eta = tau_eta(ctx, m, t);
    return r;
}

cplx tau_half_angle(const TauContext& ctx, long m, double t) {
    const cplx lam(ctx.lambda0, 0.0), z(0.0, ctx.lambda0);
    const TauFunctions a = tau_functions(ctx, m, t, lam, z);
    const TauFunctions s = tau_conjugates(ctx, m, t, lam, z);
    return -I * a.g / s.f;
}

TauClosedForms tau_closed_forms(const TauContext& ctx, long m, double t, double z) {
    const EllipticModulus& md = ctx.mod;
    const double c = chain(ctx);
    const cplx vm = (psi_of(ctx, m, t) - md.K) / (2.0 * I * md.Kp);
    const cplx vz = vm + I * c * z;
    const double phi = phi_angle(md, ctx.family, ctx.alpha_step, ctx.beta_rate, m, t);
    const double sgn = ctx.twisted ? parity(m) : 1.0;
    TauClosedForms r;
    cplx vplus, pref;
    if (ctx.family == Family::dn) {
        r.F = 2.0 * theta(3, vz, ctx.th1) * theta(0, 0.0, ctx.th1);
        vplus = vz + 0.5;
        pref = sgn * c;
    } else {
        const cplx beta_m = std::exp(-2.0 * M_PI * I * vm + 2.0 * M_PI * c * z + M_PI * md.K / md.Kp);
        r.F = 2.0 * beta_m * theta(3, vz, ctx.th1) * theta(3, 0.0, ctx.th1);
        vplus = vz + 1.0 + md.taup;
        pref = ctx.twisted ? -parity(m) * I * c : -I * c;
    }
    const ThetaValue t2 = theta_with_prime(2, vplus, ctx.th2);
    const ThetaValue t3 = theta_with_prime(3, vplus, ctx.th2);
    r.H = pref * std::exp(I * phi) * (t2.value * t3.deriv - t3.value * t2.deriv);
    return r;
}

TauCurvePoint gamma_from_tau(const TauContext& ctx, long m, double t) {
    const TauSample x = tau_sample(ctx, m, t, ctx.lambda0, 0.0);
    const cplx fs = std::conj(x.f), gs = std::conj(x.g);
    const cplx H = x.H, F = x.F;
    TauCurvePoint p;
    p.Gamma = {((H + std::conj(H)) / F).real(), ((H - std::conj(H)) / (I * F)).real(),
               x.iR - 0.5 * x.dlogF_dz.real()};
    p.B = {((fs * x.g + x.f * gs) / F).real(), ((fs * x.g - x.f * gs) / (I * F)).real(),
           ((x.f * fs - x.g * gs) / F).real()};
    return p;
}

BilinearResiduals bilinear_checks(const TauContext& ctx, long m, double t, double h) {
    const double eps = ctx.epsilon;
    const double l0 = ctx.lambda0;
    const TauSample s0 = tau_sample(ctx, m, t, l0, 0.0);
    const TauSample s1 = tau_sample(ctx, m + 1, t, l0, 0.0);
    const cplx f0 = s0.f, g0 = s0.g, f1 = s1.f, g1 = s1.g;
    const cplx f0s = std::conj(f0), g0s = std::conj(g0), f1s = std::conj(f1), g1s = std::conj(g1);
    const cplx norm = s0.F * s1.F;

    BilinearResiduals r;
    const cplx psi_fh = f0s * f1s * (f0 * g1 - f1 * g0) + g0 * g1 * (f0s * g1s - f1s * g0s);
    r.fh = std::abs((s0.F * s1.H - s0.H * s1.F - eps / I * psi_fh) / norm);

    const cplx psi_fr = f1 * f0s * g0 * g1s - f1s * f0 * g0s * g1;
    // (1/2) D_z F_m . F_{m+1} = (1/2) F_m F_{m+1} (dlogF_m - dlogF_{m+1}).
    const cplx dz = 0.5 * norm * (s0.dlogF_dz - s1.dlogF_dz);
    r.fr = std::abs((dz + (s1.iR - s0.iR) * norm - 2.0 * eps / I * psi_fr) / norm);

    // f_lambda = i f_z, f*_lambda = -i f*_z, g_lambda = -i g_z, g*_lambda = i g*_z by differences.
    auto at = [&](double dl, double dzv) {
        const TauFunctions a = tau_functions(ctx, m, t, l0 + dl, dzv);
        const TauFunctions b = tau_conjugates(ctx, m, t, l0 + dl, dzv);
        return std::array<cplx, 4>{a.f, b.f, a.g, b.g};
    };
    // Five-point stencil: theta factors oscillate fast at large |psi|.
    const auto lp = at(h, 0), lm = at(-h, 0), zp = at(0, h), zm = at(0, -h), c0 = at(0, 0);
    const auto lp2 = at(2 * h, 0), lm2 = at(-2 * h, 0), zp2 = at(0, 2 * h), zm2 = at(0, -2 * h);
    const std::array<cplx, 4> factor{I, -I, -I, I};
    for (int j = 0; j < 4; ++j) {
        const cplx dl = (8.0 * (lp[j] - lm[j]) - (lp2[j] - lm2[j])) / (12.0 * h);
        const cplx dzj = (8.0 * (zp[j] - zm[j]) - (zp2[j] - zm2[j])) / (12.0 * h);
        const double scale = std::abs(c0[j]) * chain(ctx) + std::abs(dl);
        r.cr = std::max(r.cr, std::abs(dl - factor[j] * dzj) / scale);
    }
    return r;
}

}  // namespace dsurf
