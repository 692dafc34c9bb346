#pragma once

#include <complex>

#include "dsurf/elliptic.hpp"
#include "dsurf/family.hpp"
#include "dsurf/theta.hpp"
#include "dsurf/vec3.hpp"

namespace dsurf {

// Parameters of the theta-built tau functions f_m, g_m.
//   psi_m = m gamma + beta t, phi_m = m alpha + beta k t (dn) or m alpha + beta t (cn)
//   lambda0 = k K'/2 (dn) or K'/2 (cn); epsilon = +1 untwisted, -1 twisted.
struct TauContext {
    EllipticModulus mod;
    Family family = Family::dn;
    bool twisted = false;
    double lambda0 = 0;
    double gamma_step = 0;
    double beta_rate = 0;
    double alpha_step = 0;
    int epsilon = 1;
    ThetaParams th1;  // tau'
    ThetaParams th2;  // 2 tau'
    double wp_scalar = 0;  // p(omega/2) + zeta(omega)/omega, omega = K'
};

TauContext make_tau_context(const EllipticModulus& mod, Family family, bool twisted, double gamma, double beta);

// f, g and their partial derivatives at complex (lambda, z).
struct TauFunctions {
    cplx f, g;
    cplx f_lambda, g_lambda;
    cplx f_z, g_z;
};

TauFunctions tau_functions(const TauContext& ctx, long m, double t, cplx lambda, cplx z);

// f*, g* (in the f, g slots): the reflection conj(f(conj lambda, conj z)).
TauFunctions tau_conjugates(const TauContext& ctx, long m, double t, cplx lambda, cplx z);

// F = f f* + g g*, H = (i/2)(g_lambda f* - g f*_lambda), iR (a real number) and eta.
struct TauSample {
    cplx f, g;
    cplx F, H;
    cplx dlogF_dz;
    double iR = 0;
    double eta = 0;
};

TauSample tau_sample(const TauContext& ctx, long m, double t, double lambda, double z);

double tau_eta(const TauContext& ctx, long m, double t);

// iR_m evaluated through p(w/2) + zeta(w)/w of the Weierstrass function.
double tau_iR(const TauContext& ctx, long m, double t);

// -i g_m / f*_m at lambda = lambda0, z = i lambda0; equals exp(i w_m/2).
cplx tau_half_angle(const TauContext& ctx, long m, double t);

// The printed product forms at lambda = lambda0:
//   dn: F = 2 theta_3(v_m(z)|tau') theta_0(0|tau')
//   cn: F = 2 beta_m theta_3(v_m(z)|tau') theta_3(0|tau')
//   H = c e^{i phi}(theta_2 theta_3' - theta_3 theta_2')(v+_m(z)|2tau'),
// with c = 1/(kK'), (-1)^m/(kK'), -i/K', (-1)^{m+1} i/K'.
struct TauClosedForms {
    cplx F, H;
};
TauClosedForms tau_closed_forms(const TauContext& ctx, long m, double t, double z);

struct TauCurvePoint {
    Vec3 Gamma;
    Vec3 B;
};

TauCurvePoint gamma_from_tau(const TauContext& ctx, long m, double t);

struct BilinearResiduals {
    double fh = 0;
    double fr = 0;
    double cr = 0;
};

// fh and fr are normalised by F_m F_{m+1}; cr compares five-point differences in lambda and z.
BilinearResiduals bilinear_checks(const TauContext& ctx, long m, double t, double h = 1e-4);

}  // namespace dsurf
