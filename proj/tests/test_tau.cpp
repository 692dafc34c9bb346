#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dsurf/tau.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace dsurf;
using dsurf::testing::rel_residual;

namespace {

const cplx I{0, 1};

struct Case {
    double k;
    Family family;
    bool twisted;
    double gamma;
    double beta;
};

std::vector<Case> cases() {
    std::vector<Case> out;
    for (double k : {0.3, 0.6, 0.9})
        for (Family f : {Family::dn, Family::cn})
            for (bool tw : {false, true})
                for (double g : {0.7, -0.45}) out.push_back({k, f, tw, g, 1.3});
    return out;
}

TauContext ctx_of(const Case& c) {
    return make_tau_context(make_modulus(c.k), c.family, c.twisted, c.gamma, c.beta);
}

oracle::CurveSpec spec_of(const Case& c) {
    return {c.k, c.family == Family::cn, c.twisted, c.gamma, c.beta};
}

const double kTimes[] = {0.0, 0.37, 1.7};

}  // namespace

TEST(TauFunctions, HalfAngleRatioGivesTheField) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        for (long m = -6; m <= 6; ++m)
            for (double t : kTimes) {
                double psi = m * c.gamma + c.beta * t;
                auto j = oracle::jac(c.k, psi);
                cplx expect = c.family == Family::dn ? cplx(j.dn, -c.k * j.sn) : cplx(j.cn, j.sn);
                EXPECT_LT(std::abs(tau_half_angle(ctx, m, t) - expect), 1e-11) << c.k << " m=" << m;
            }
    }
}

TEST(TauFunctions, ConjugationSymmetryOfThetaPairs) {
    // dn: theta_j(v+|2tau')* = theta_j(v-|2tau'); cn: the theta_2 line flips sign.
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (double k : {0.3, 0.6, 0.9}) {
        EllipticModulus md = make_modulus(k);
        ThetaParams p2 = theta_params(2.0 * md.taup);
        for (int i = 0; i < 100; ++i) {
            double psi = 4 * u(g), lam = u(g), z = u(g);
            cplx vm = (psi - md.K) / (2.0 * I * md.Kp);
            double c = 1.0 / (k * md.Kp);
            cplx vp = vm + c * lam + I * c * z, vn = vm - c * lam + I * c * z;
            EXPECT_LT(rel_residual(std::conj(theta(3, vp, p2)), theta(3, vn, p2)), 1e-11);
            EXPECT_LT(rel_residual(std::conj(theta(2, vp, p2)), theta(2, vn, p2)), 1e-11);
            c = 1.0 / md.Kp;
            vp = vm + 0.5 + md.taup + c * lam + I * c * z;
            vn = vm + 0.5 + md.taup - c * lam + I * c * z;
            EXPECT_LT(rel_residual(std::conj(theta(3, vp, p2)), theta(3, vn, p2)), 1e-11);
            EXPECT_LT(rel_residual(std::conj(theta(2, vp, p2)), -theta(2, vn, p2)), 1e-11);
        }
    }
}

TEST(TauFunctions, FIsRealPositiveAndMatchesProductForm) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        for (long m = -8; m <= 8; ++m)
            for (double t : kTimes)
                for (double z : {0.0, 0.2, -0.3}) {
                    TauSample s = tau_sample(ctx, m, t, ctx.lambda0, z);
                    EXPECT_GT(s.F.real(), 0.0);
                    EXPECT_LT(std::abs(s.F.imag()), 1e-11 * std::abs(s.F));
                    TauClosedForms cf = tau_closed_forms(ctx, m, t, z);
                    EXPECT_LT(rel_residual(s.F, cf.F), 1e-11);
                    EXPECT_LT(rel_residual(s.H, cf.H, {s.F}), 1e-11) << int(c.family) << c.twisted << " m=" << m;
                }
    }
}

TEST(TauFunctions, EtaReproducesClosedFormIR) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        const EllipticModulus& md = ctx.mod;
        double I2 = oracle::sn2_int(c.k, c.gamma);
        for (long m = -5; m <= 5; ++m)
            for (double t : kTimes) {
                double psi = m * c.gamma + c.beta * t;
                double iR = tau_iR(ctx, m, t);
                double eta = tau_eta(ctx, m, t);
                if (c.family == Family::dn) {
                    EXPECT_NEAR(iR, -md.Ep / (c.k * md.Kp) * eta, 1e-10);
                    EXPECT_NEAR(iR, -md.Ep / (c.k * md.Kp) * psi + M_PI / (2 * c.k * md.Kp) + m * c.k * I2, 1e-10);
                } else {
                    EXPECT_NEAR(iR, -md.Ep / md.Kp * eta, 1e-10);
                    EXPECT_NEAR(iR, -md.Ep / md.Kp * psi + 3 * M_PI / (2 * md.Kp) + m * c.k * c.k * I2, 1e-10);
                }
            }
    }
}

TEST(TauCurve, OriginSample) {
    TauContext ctx = make_tau_context(make_modulus(0.6), Family::dn, false, 0.7, 1.0);
    TauCurvePoint p = gamma_from_tau(ctx, 0, 0.0);
    EXPECT_NEAR(p.Gamma.x, 1 / 0.6, 1e-12);
    EXPECT_NEAR(p.Gamma.y, 0.0, 1e-12);
    EXPECT_NEAR(p.Gamma.z, 0.0, 1e-12);
    EXPECT_NEAR(p.B.z, -1.0, 1e-12);
}

TEST(TauCurve, MatchesIndependentClosedForms) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        for (long m = -10; m <= 10; ++m)
            for (double t : kTimes) {
                TauCurvePoint p = gamma_from_tau(ctx, m, t);
                oracle::CurvePoint q = oracle::curve_point(spec_of(c), m, t);
                EXPECT_LT(oracle::vec_err(p.Gamma, q.Gamma), 1e-8) << int(c.family) << c.twisted << " m=" << m;
                EXPECT_LT(oracle::vec_err(p.B, q.B), 1e-8) << int(c.family) << c.twisted << " m=" << m;
            }
    }
}

TEST(TauCurve, EdgeIsSignedBinormalCross) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        for (long m = -6; m <= 6; ++m) {
            TauCurvePoint a = gamma_from_tau(ctx, m, 0.37), b = gamma_from_tau(ctx, m + 1, 0.37);
            Vec3 lhs = b.Gamma - a.Gamma;
            Vec3 rhs = double(ctx.epsilon) * cross(b.B, a.B);
            EXPECT_LT(oracle::vec_err(lhs, rhs), 1e-9);
        }
    }
}

TEST(TauBilinear, ResidualsVanish) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        for (long m = -20; m <= 20; m += 3)
            for (double t : kTimes) {
                BilinearResiduals r = bilinear_checks(ctx, m, t);
                EXPECT_LT(r.fh, 1e-9) << int(c.family) << c.twisted << " m=" << m;
                EXPECT_LT(r.fr, 1e-9) << int(c.family) << c.twisted << " m=" << m;
                EXPECT_LT(r.cr, 1e-6) << int(c.family) << c.twisted << " m=" << m;
            }
    }
}

TEST(TauBilinear, WrongEpsilonIsDetected) {
    for (const Case& c : cases()) {
        TauContext ctx = ctx_of(c);
        ctx.epsilon = -ctx.epsilon;
        double worst = 0;
        for (long m = -3; m <= 3; ++m) worst = std::max(worst, bilinear_checks(ctx, m, 0.37).fh);
        EXPECT_GT(worst, 1e-3);
    }
}
