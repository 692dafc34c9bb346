#include "dsurf/surfaces.hpp"

#include <algorithm>
#include <cmath>

#include "dsurf/errors.hpp"
#include "dsurf/steps.hpp"

namespace dsurf {
namespace {

constexpr double kZeroEdge = 1e-14;

double sign_factor(const SurfaceParams& p, long m) { return p.twisted ? parity(m) : 1.0; }

// sn(gamma) or k sn(gamma): the signed edge scale.
double signed_edge(const SurfaceParams& p) {
    const double s = jacobi(p.gamma_step, p.mod).sn;
    return p.family == Family::dn ? s : p.mod.k * s;
}

}  // namespace

Sign admissible_frame_sign(const EllipticModulus& mod, bool twisted, double gamma) {
    const double s = jacobi(gamma, mod).sn;
    if (std::abs(s) < kZeroEdge) throw DegenerateError("sn(gamma) = 0 gives zero-length edges");
    const bool positive = twisted ? s < 0 : s > 0;
    return positive ? Sign::plus : Sign::minus;
}

SurfaceParams make_surface_params(const EllipticModulus& mod, Family family, bool twisted, double gamma,
                                  double beta, Sign frame_sign) {
    if (admissible_frame_sign(mod, twisted, gamma) != frame_sign)
        throw DomainError("frame sign does not match the sign of sn(gamma)");
    SurfaceParams p;
    p.mod = mod;
    p.family = family;
    p.twisted = twisted;
    p.gamma_step = gamma;
    p.beta_rate = beta;
    p.alpha_step = alpha_step(mod, family, twisted, gamma);
    p.frame_sign = frame_sign;
    return p;
}

int surface_epsilon(const SurfaceParams& p) { return p.twisted ? -1 : 1; }

double edge_length(const SurfaceParams& p) { return std::abs(signed_edge(p)); }

double surface_psi(const SurfaceParams& p, long m, double t) {
    return static_cast<double>(m) * p.gamma_step + p.beta_rate * t;
}

double surface_phi(const SurfaceParams& p, long m, double t) {
    return phi_angle(p.mod, p.family, p.alpha_step, p.beta_rate, m, t);
}

Vec3 gamma_point(const SurfaceParams& p, long m, double t) {
    const double k = p.mod.k;
    const double psi = surface_psi(p, m, t), phi = surface_phi(p, m, t);
    const JacobiTriple j = jacobi(psi, p.mod);
    const double sg = sign_factor(p, m);
    const double z = sn2_integral(psi, p.mod) - static_cast<double>(m) * sn2_integral(p.gamma_step, p.mod);
    if (p.family == Family::dn) {
        const double r = sg * j.dn / k;
        return {r * std::cos(phi), r * std::sin(phi), -k * z};
    }
    const double r = sg * k * j.cn;
    return {r * std::cos(phi), r * std::sin(phi), -k * k * z};
}

Vec3 b_point(const SurfaceParams& p, long m, double t) {
    const double k = p.mod.k;
    const double psi = surface_psi(p, m, t), phi = surface_phi(p, m, t);
    const JacobiTriple j = jacobi(psi, p.mod);
    const double sg = sign_factor(p, m);
    if (p.family == Family::dn) return {sg * std::cos(phi) * j.sn, sg * std::sin(phi) * j.sn, -j.cn};
    return {-sg * k * std::cos(phi) * j.sn, -sg * k * std::sin(phi) * j.sn, j.dn};
}

Frame frame_at(const SurfaceParams& p, long m, double t) {
    const double e = signed_edge(p);
    if (std::abs(e) < kZeroEdge) throw DegenerateError("frame_at: zero-length edge");
    const Vec3 B0 = b_point(p, m, t), B1 = b_point(p, m + 1, t);
    Frame f;
    f.B = B0;
    f.T = (sign_value(p.frame_sign) / e) * cross(B1, B0);
    f.N = cross(B0, f.T);
    return f;
}

Vec3 flow_velocity(const SurfaceParams& p, long m, double t) {
    const double k = p.mod.k, beta = p.beta_rate;
    const double psi = surface_psi(p, m, t), phi = surface_phi(p, m, t);
    const JacobiTriple j = jacobi(psi, p.mod);
    const double sg = sign_factor(p, m);
    const double c = std::cos(phi), s = std::sin(phi);
    if (p.family == Family::dn) {
        return beta * Vec3{sg * (-s * j.dn - k * c * j.sn * j.cn), sg * (c * j.dn - k * s * j.sn * j.cn),
                           -k * j.sn * j.sn};
    }
    return (beta * k) * Vec3{sg * (-s * j.cn - c * j.sn * j.dn), sg * (c * j.cn - s * j.sn * j.dn),
                             -k * j.sn * j.sn};
}

HalfAngle surface_field(const SurfaceParams& p, long m, double t) {
    const double k = p.mod.k;
    const JacobiTriple j = jacobi(surface_psi(p, m, t), p.mod);
    // d/dt of w/2 is beta k cn (dn) or beta dn (cn); dw/dt is twice that.
    if (p.family == Family::dn) return {j.dn, -k * j.sn, -2.0 * p.beta_rate * k * j.cn};
    return {j.cn, j.sn, 2.0 * p.beta_rate * j.dn};
}

SemiDiscreteParams surface_sg_params(const SurfaceParams& p) {
    const double K = p.mod.K;
    return make_semi_params(p.mod, p.family, p.gamma_step / (4.0 * K), p.beta_rate / (4.0 * K));
}

AnglePair flow_angle(const SurfaceParams& p, long m, double t) {
    const HalfAngle a = surface_field(p, m, t), b = surface_field(p, m + 1, t);
    AnglePair w;
    if (!p.twisted) {
        w.c = a.c * b.c + a.s * b.s;
        w.s = a.s * b.c - a.c * b.s;  // sin((w_m - w_{m+1})/2)
    } else {
        w.c = a.c * b.c - a.s * b.s;
        w.s = a.s * b.c + a.c * b.s;  // sin((w_m + w_{m+1})/2)
    }
    return w;
}

AnglePair curvature_angle(const SurfaceParams& p, long m, double t) {
    const HalfAngle a = surface_field(p, m, t), b = surface_field(p, m + 2, t);
    AnglePair w{a.c * b.c + a.s * b.s, b.s * a.c - b.c * a.s};
    if (p.twisted) w.s = -w.s;
    return w;
}

CurveSnapshot snapshot(const SurfaceParams& p, long m_first, long m_last, double t) {
    CurveSnapshot s;
    s.t = t;
    s.m_first = m_first;
    const int eps = surface_epsilon(p);
    const double len = edge_length(p);
    for (long m = m_first; m <= m_last; ++m) {
        s.points.push_back(gamma_point(p, m, t));
        s.binormals.push_back(b_point(p, m, t));
        s.frames.push_back(frame_at(p, m, t));
        s.report.frame_residual = std::max(s.report.frame_residual, frame_defect(s.frames.back()));
    }
    for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
        const Vec3 edge = s.points[i + 1] - s.points[i];
        const Vec3 bb = static_cast<double>(eps) * cross(s.binormals[i + 1], s.binormals[i]);
        s.report.edge_residual = std::max(s.report.edge_residual, norm(edge - bb));
        s.report.speed_residual = std::max(s.report.speed_residual, std::abs(norm(edge) - len));
    }
    const SnapshotReport& r = s.report;
    s.report.ok = r.edge_residual < r.tolerance && r.speed_residual < r.tolerance && r.frame_residual < r.tolerance;
    return s;
}

SurfaceParams kaleidocycle_params(int n, Family family, double cn_modulus, double beta) {
    if (family == Family::dn) {
        if (n < 3) throw DomainError("kaleidocycle: the dn family needs n >= 3");
        const EllipticModulus mod = make_modulus(std::sin(M_PI / n));
        return make_surface_params(mod, family, false, mod.K, beta, Sign::plus);
    }
    const EllipticModulus mod = make_modulus(cn_modulus);
    return make_surface_params(mod, family, false, mod.K, beta, Sign::plus);
}

long kaleidocycle_period(int n, Family family) { return family == Family::dn ? 2L * n : 2L; }

}  // namespace dsurf
