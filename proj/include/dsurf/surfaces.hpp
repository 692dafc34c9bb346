#pragma once

#include <vector>

#include "dsurf/elliptic.hpp"
#include "dsurf/family.hpp"
#include "dsurf/frames.hpp"
#include "dsurf/sine_gordon.hpp"
#include "dsurf/vec3.hpp"

namespace dsurf {

// Closed-form semi-discrete curve Gamma_m(t).
//   psi_m = m gamma + beta t, phi_m = m alpha + beta k t (dn) or m alpha + beta t (cn).
// frame_sign is the compound sign of the Frenet frame; it must equal
// sign(sn gamma) for the untwisted families and -sign(sn gamma) for the twisted ones.
struct SurfaceParams {
    EllipticModulus mod;
    Family family = Family::dn;
    bool twisted = false;
    double gamma_step = 0;
    double beta_rate = 1;
    double alpha_step = 0;
    Sign frame_sign = Sign::plus;
};

// Throws DegenerateError when sn(gamma) = 0 and DomainError for an inadmissible frame_sign.
SurfaceParams make_surface_params(const EllipticModulus& mod, Family family, bool twisted, double gamma,
                                  double beta, Sign frame_sign);

// The admissible frame sign for (family, twisted, gamma).
Sign admissible_frame_sign(const EllipticModulus& mod, bool twisted, double gamma);

// +1 untwisted, -1 twisted: Gamma_{m+1} - Gamma_m = epsilon B_{m+1} x B_m.
int surface_epsilon(const SurfaceParams& p);

// Edge length |sn gamma| (dn) or |k sn gamma| (cn).
double edge_length(const SurfaceParams& p);

double surface_psi(const SurfaceParams& p, long m, double t);
double surface_phi(const SurfaceParams& p, long m, double t);

Vec3 gamma_point(const SurfaceParams& p, long m, double t);
Vec3 b_point(const SurfaceParams& p, long m, double t);

// T = frame_sign (B_{m+1} x B_m)/(sn gamma or k sn gamma), N = B x T.
Frame frame_at(const SurfaceParams& p, long m, double t);

// dGamma_m/dt in closed form.
Vec3 flow_velocity(const SurfaceParams& p, long m, double t);

// The sine-Gordon field: (dn psi_m, -k sn psi_m) or (cn psi_m, sn psi_m), with dw/dt.
HalfAngle surface_field(const SurfaceParams& p, long m, double t);

// Matching semi-discrete SG parameters: Omega = gamma/(4K), A = beta/(4K).
SemiDiscreteParams surface_sg_params(const SurfaceParams& p);

// An angle kept as its cosine and sine.
struct AnglePair {
    double c = 1.0;
    double s = 0.0;
};

// The flow angle w_m = (w_m - w_{m+1})/2 untwisted, (w_m + w_{m+1})/2 twisted, for both families.
// dGamma/dt = frame_sign rho (cos w_m T + sin w_m N), rho = beta (dn) or beta k (cn).
AnglePair flow_angle(const SurfaceParams& p, long m, double t);

// K_{m+1} with K_{m+1} = +-(w_{m+2} - w_m)/2 (minus when twisted).
AnglePair curvature_angle(const SurfaceParams& p, long m, double t);

struct SnapshotReport {
    double edge_residual = 0;   // max |Gamma_{m+1} - Gamma_m - eps B_{m+1} x B_m|
    double speed_residual = 0;  // max ||Gamma_{m+1} - Gamma_m| - edge_length|
    double frame_residual = 0;  // max frame_defect
    double tolerance = 1e-10;
    bool ok = true;
};

struct CurveSnapshot {
    double t = 0;
    long m_first = 0;
    std::vector<Vec3> points;
    std::vector<Vec3> binormals;
    std::vector<Frame> frames;
    SnapshotReport report;
};

// Points for m in [m_first, m_last]; the report is filled, never thrown.
CurveSnapshot snapshot(const SurfaceParams& p, long m_first, long m_last, double t);

// Kaleidocycle: dn uses k = sin(pi/n), gamma = K, alpha = pi/n (closure period 2n);
// cn uses gamma = K, alpha = pi/2 with the given modulus (closure period 2).
SurfaceParams kaleidocycle_params(int n, Family family, double cn_modulus = 0.8, double beta = 1.0);

// Closure period in m.
long kaleidocycle_period(int n, Family family);

}  // namespace dsurf
