#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "dsurf/errors.hpp"
#include "dsurf/theta.hpp"
#include "test_support.hpp"

using namespace dsurf;
using dsurf::testing::rel_residual;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I{0, 1};

// Bilateral exponential sums, valid for modest Im v without reduction.
cplx naive(int j, cplx v, cplx tau) {
    cplx s = 0;
    for (int n = -40; n <= 40; ++n) {
        double h = n + 0.5;
        switch (j) {
            case 3: s += std::exp(I * kPi * (double(n * n) * tau + 2.0 * double(n) * v)); break;
            case 0: s += std::pow(-1.0, n) * std::exp(I * kPi * (double(n * n) * tau + 2.0 * double(n) * v)); break;
            case 2: s += std::exp(I * kPi * (h * h * tau + 2.0 * h * v)); break;
            default: s += -I * std::pow(-1.0, n) * std::exp(I * kPi * (h * h * tau + 2.0 * h * v)); break;
        }
    }
    return s;
}

struct Sampler {
    std::mt19937_64 rng{2024};
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    cplx point(double im) { return {uniform(-1, 1), uniform(-im, im)}; }
};

}  // namespace

TEST(Theta, RejectsBadLattice) {
    EXPECT_THROW(theta_params(cplx(0, -1)), DomainError);
    EXPECT_THROW(theta_params(cplx(0.1, 1)), DomainError);
    EXPECT_THROW(theta(4, 0.1, theta_params(cplx(0, 1))), DomainError);
}

TEST(Theta, MatchesBilateralSum) {
    Sampler s;
    for (double k : {0.3, 0.6, 0.9}) {
        auto m = make_modulus(k);
        for (cplx tau : {m.tau, m.taup, 2.0 * m.taup}) {
            auto p = theta_params(tau);
            for (int i = 0; i < 40; ++i) {
                cplx v = s.point(1.5 * tau.imag());
                for (int j = 0; j < 4; ++j)
                    EXPECT_LT(rel_residual(theta(j, v, p), naive(j, v, tau)), 1e-12) << j << " " << v;
            }
        }
    }
}

TEST(Theta, ParityAndZero) {
    auto p = theta_params(cplx(0, 0.8));
    EXPECT_EQ(theta(1, 0.0, p), 0.0);
    for (cplx v : {cplx(0.3, 0.1), cplx(-0.7, 0.35)}) {
        EXPECT_LT(std::abs(theta(1, -v, p) + theta(1, v, p)), 1e-14);
        for (int j : {0, 2, 3}) EXPECT_LT(std::abs(theta(j, -v, p) - theta(j, v, p)), 1e-14);
    }
}

TEST(Theta, UnitTranslation) {
    Sampler s;
    auto p = theta_params(cplx(0, 1.3));
    for (int i = 0; i < 20; ++i) {
        cplx v = s.point(0.6);
        EXPECT_LT(rel_residual(theta(0, v + 1.0, p), theta(0, v, p)), 1e-13);
        EXPECT_LT(rel_residual(theta(3, v + 1.0, p), theta(3, v, p)), 1e-13);
        EXPECT_LT(rel_residual(theta(1, v + 1.0, p), -theta(1, v, p)), 1e-13);
    }
}

TEST(Theta, HalfTranslation) {
    Sampler s;
    auto p = theta_params(make_modulus(0.7).taup);
    for (int i = 0; i < 20; ++i) {
        cplx v = s.point(0.5);
        EXPECT_LT(rel_residual(theta(0, v + 0.5, p), theta(3, v, p)), 1e-13);
        EXPECT_LT(rel_residual(theta(2, v + 0.5, p), -theta(1, v, p)), 1e-13);
        EXPECT_LT(rel_residual(theta(3, v + 0.5, p), theta(0, v, p)), 1e-13);
    }
}

TEST(Theta, LatticeTranslation) {
    Sampler s;
    cplx tau(0, 0.9);
    auto p = theta_params(tau);
    for (int i = 0; i < 20; ++i) {
        cplx v = s.point(0.4);
        cplx f = std::exp(-I * kPi * tau - 2.0 * kPi * I * v);
        EXPECT_LT(rel_residual(theta(3, v + tau, p), f * theta(3, v, p)), 1e-12);
        EXPECT_LT(rel_residual(theta(2, v + tau, p), f * theta(2, v, p)), 1e-12);
        EXPECT_LT(rel_residual(theta(0, v + tau, p), -f * theta(0, v, p)), 1e-12);
        EXPECT_LT(rel_residual(theta(1, v + tau, p), -f * theta(1, v, p)), 1e-12);
    }
}

TEST(Theta, OverflowIsReported) {
    auto p = theta_params(cplx(0, 1));
    EXPECT_THROW(theta(3, cplx(0, 60), p), ConvergenceError);
}

TEST(ThetaPrime, EvenFunctionsVanishAtZero) {
    auto p = theta_params(cplx(0, 0.7));
    for (int j : {0, 2, 3}) EXPECT_LT(std::abs(theta_prime(j, 0.0, p)), 1e-15);
}

TEST(ThetaPrime, JacobiDerivativeIdentity) {
    for (double im : {0.4, 1.0, 2.5}) {
        cplx tau(0, im);
        auto p = theta_params(tau);
        // Derivative of the bilateral theta_1 sum at zero, summed directly.
        cplx direct = 0;
        for (int n = -40; n <= 40; ++n) {
            double h = n + 0.5;
            direct += -I * std::pow(-1.0, n) * std::exp(I * kPi * h * h * tau) * (2.0 * kPi * I * h);
        }
        cplx product = kPi * naive(0, 0.0, tau) * naive(2, 0.0, tau) * naive(3, 0.0, tau);
        EXPECT_LT(rel_residual(direct, product), 1e-13);
        EXPECT_LT(rel_residual(theta_prime(1, 0.0, p), product), 1e-13);
    }
}

TEST(ThetaPrime, FiniteDifference) {
    Sampler s;
    auto p = theta_params(make_modulus(0.6).taup);
    const double h = 1e-6;
    for (int i = 0; i < 50; ++i) {
        cplx v = s.point(3.0);
        for (int j = 0; j < 4; ++j) {
            cplx fd = (theta(j, v + h, p) - theta(j, v - h, p)) / (2 * h);
            cplx d = theta_prime(j, v, p);
            EXPECT_LT(std::abs(fd - d), 1e-8 * std::max(std::abs(d), std::abs(theta(j, v, p)))) << j << v;
        }
    }
}

TEST(JacobiComplex, MatchesRealJacobi) {
    for (double k : {0.3, 0.6, 0.9}) {
        auto m = make_modulus(k);
        for (int i = 0; i < 50; ++i) {
            double u = -9 + 18 * i / 49.0;
            auto z = jacobi_complex(u, m);
            auto r = jacobi(u, m);
            EXPECT_LT(std::abs(z.sn - r.sn), 1e-11);
            EXPECT_LT(std::abs(z.cn - r.cn), 1e-11);
            EXPECT_LT(std::abs(z.dn - r.dn), 1e-11);
        }
    }
}

TEST(JacobiComplex, SymmetryPoint) {
    auto m = make_modulus(0.55);
    auto z = jacobi_complex(m.K, m);
    EXPECT_LT(std::abs(z.sn - 1.0), 1e-15);
    EXPECT_LT(std::abs(z.cn), 1e-15);
}

TEST(JacobiComplex, ImaginaryTransformation) {
    // sn(iu, k) = i sc(u, k'), cn(iu, k) = nc(u, k'), dn(iu, k) = dc(u, k').
    for (double k : {0.3, 0.8}) {
        auto m = make_modulus(k);
        for (double u : {0.2, 0.9, -1.3}) {
            double c, d;
            double s = boost::math::jacobi_elliptic(m.kp, u, &c, &d);
            auto z = jacobi_complex(cplx(0, u), m);
            EXPECT_LT(std::abs(z.sn - I * s / c), 1e-11);
            EXPECT_LT(std::abs(z.cn - 1.0 / c), 1e-11);
            EXPECT_LT(std::abs(z.dn - d / c), 1e-11);
        }
    }
}

TEST(JacobiComplex, ThetaQuotientsAtComplexArgument) {
    Sampler s;
    for (double k : {0.3, 0.6, 0.9}) {
        auto m = make_modulus(k);
        auto p = theta_params(m.taup);
        for (int i = 0; i < 50; ++i) {
            double psi = s.uniform(-10, 10);
            cplx v = (psi - m.K) / (2.0 * I * m.Kp);
            auto r = jacobi(psi, m);
            cplx d = theta(3, v, p);
            EXPECT_LT(std::abs(theta(0, v, p) * theta(3, 0.0, p) / (d * theta(0, 0.0, p)) - r.sn), 1e-11);
            EXPECT_LT(std::abs(theta(1, v, p) * theta(2, 0.0, p) / (d * theta(0, 0.0, p)) - I * r.cn), 1e-11);
            EXPECT_LT(std::abs(theta(2, v, p) * theta(2, 0.0, p) / (d * theta(3, 0.0, p)) - r.dn), 1e-11);
        }
    }
}

TEST(JacobiComplex, PoleIsReported) {
    auto m = make_modulus(0.6);
    EXPECT_THROW(jacobi_complex(cplx(0, m.Kp), m), PoleError);
}

TEST(Weierstrass, Constants) {
    auto m = make_modulus(0.6);
    auto w = weierstrass_constants(m);
    EXPECT_LT(std::abs(w.e1 + w.e2 + w.e3), 1e-15);
    EXPECT_NEAR(w.e1.real(), 2.0 / 3.0 * (2 * 0.36 - 1), 1e-15);
    EXPECT_NEAR(w.zeta_omega_over_omega, kPi / (m.K * m.Kp) - 2 * m.E / m.K + 1 - w.e1.real(), 1e-12);
}

TEST(Weierstrass, HalfPeriodValues) {
    for (double k : {0.3, 0.6, 0.9}) {
        auto m = make_modulus(k);
        auto w = weierstrass_constants(m);
        EXPECT_LT(std::abs(weierstrass_p(m.Kp / 2, m) - (w.e1 + 1.0)), 1e-12);
        EXPECT_LT(std::abs(weierstrass_p(m.Kp, m) - w.e1), 1e-12);
        EXPECT_LT(std::abs(weierstrass_p(m.Kp * (1 - 1e-7), m) - w.e1), 1e-10);
        // The remaining half periods carry e2 and e3.
        cplx a = weierstrass_p(w.omegap, m), b = weierstrass_p(w.omega + w.omegap, m);
        EXPECT_LT(std::min(std::abs(a - w.e2), std::abs(a - w.e3)), 1e-10);
        EXPECT_LT(std::min(std::abs(b - w.e2), std::abs(b - w.e3)), 1e-10);
        EXPECT_GT(std::abs(a - b), 1e-3);
    }
}

TEST(Weierstrass, Periods) {
    Sampler s;
    auto m = make_modulus(0.7);
    for (int i = 0; i < 30; ++i) {
        cplx z(s.uniform(-1, 1), s.uniform(-1, 1));
        cplx p = weierstrass_p(z, m);
        EXPECT_LT(rel_residual(weierstrass_p(z + 2 * m.Kp, m), p), 1e-10);
        EXPECT_LT(rel_residual(weierstrass_p(z + cplx(m.Kp, m.K), m), p), 1e-10);
        EXPECT_LT(rel_residual(weierstrass_p(-z, m), p), 1e-10);
    }
}

TEST(Weierstrass, DifferentialEquation) {
    Sampler s;
    auto m = make_modulus(0.45);
    auto w = weierstrass_constants(m);
    const double h = 1e-5;
    for (int i = 0; i < 30; ++i) {
        cplx z(s.uniform(0.2, 1.0), s.uniform(-0.5, 0.5));
        cplx p = weierstrass_p(z, m);
        cplx dp = (weierstrass_p(z + h, m) - weierstrass_p(z - h, m)) / (2 * h);
        cplx rhs = 4.0 * (p - w.e1) * (p - w.e2) * (p - w.e3);
        EXPECT_LT(rel_residual(dp * dp, rhs), 1e-7);
    }
}

TEST(Weierstrass, PoleAtLatticePoints) {
    auto m = make_modulus(0.6);
    EXPECT_THROW(weierstrass_p(0.0, m), PoleError);
    EXPECT_THROW(weierstrass_p(2 * m.Kp, m), PoleError);
    EXPECT_THROW(weierstrass_p(cplx(m.Kp, m.K), m), PoleError);
}

TEST(Weierstrass, ZetaAtHalfOmega) {
    using boost::math::quadrature::gauss_kronrod;
    for (double k : {0.3, 0.6, 0.9}) {
        auto m = make_modulus(k);
        auto w = weierstrass_constants(m);
        double zeta_omega = w.zeta_omega_over_omega * w.omega;
        // zeta(w/2) = zeta(w) + int_{w/2}^{w} p.
        double integral = gauss_kronrod<double, 31>::integrate(
            [&](double x) { return weierstrass_p(x, m).real(); }, w.omega / 2, w.omega, 10, 1e-14);
        double lhs = zeta_omega + integral - zeta_omega / 2;
        EXPECT_NEAR(lhs, k, 1e-10);
        // p(w/2) + zeta(w)/w = 2E'/K'.
        EXPECT_NEAR(weierstrass_p(w.omega / 2, m).real() + w.zeta_omega_over_omega, 2 * m.Ep / m.Kp, 1e-10);
    }
}
