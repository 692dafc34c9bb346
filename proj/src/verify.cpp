#include "dsurf/verify.hpp"

#include <algorithm>
#include <cmath>

#include "dsurf/elliptic.hpp"
#include "dsurf/ksurf.hpp"
#include "dsurf/sine_gordon.hpp"
#include "dsurf/surfaces.hpp"
#include "dsurf/tau.hpp"
#include "dsurf/theta.hpp"

namespace dsurf {
namespace {

struct CurveFamily {
    Family family;
    bool twisted;
};

constexpr CurveFamily kFamilies[] = {
    {Family::dn, false}, {Family::dn, true}, {Family::cn, false}, {Family::cn, true}};
constexpr double kGammas[] = {0.7, -0.45, 2.3};

// Rotates the field angle w by dw.
HalfAngle rotated(const HalfAngle& h, double dw) {
    const double c = std::cos(dw / 2), s = std::sin(dw / 2);
    return {h.c * c - h.s * s, h.s * c + h.c * s, h.dwdt};
}

double vec_max(Vec3 a) { return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)}); }

template <class Fn>
void for_curves(const VerifyOptions& o, Fn fn) {
    for (double k : o.moduli) {
        const EllipticModulus mod = make_modulus(k);
        for (CurveFamily f : kFamilies)
            for (double g : kGammas)
                fn(make_surface_params(mod, f.family, f.twisted, g, 1.3, admissible_frame_sign(mod, f.twisted, g)));
    }
}

}  // namespace

std::vector<SuiteResult> verify_special_functions(const VerifyOptions& o) {
    double legendre = 0, quotient = 0;
    long n = 0;
    for (double k : o.moduli) {
        const EllipticModulus mod = make_modulus(k);
        legendre = std::max(legendre, std::abs(legendre_residual(mod)));
        for (int i = 0; i < 100; ++i) {
            const double u = -10.0 + 20.0 * (i + 0.5) / 100.0;
            const JacobiTriple r = jacobi(u, mod);
            const JacobiComplex c = jacobi_complex(u, mod);
            quotient = std::max({quotient, std::abs(c.sn - r.sn), std::abs(c.cn - r.cn), std::abs(c.dn - r.dn)});
            ++n;
        }
    }
    const long nm = static_cast<long>(o.moduli.size());
    return {make_suite("legendre_relation", legendre, 1e-12, nm, 1),
            make_suite("jacobi_theta_quotients", quotient, 1e-11, n, 3)};
}

std::vector<SuiteResult> verify_sine_gordon(const VerifyOptions& o) {
    std::vector<SuiteResult> out;
    double sensitivity_semi = 1e300, sensitivity_discrete = 1e300;
    for (Family f : {Family::dn, Family::cn}) {
        double semi = 0, discrete = 0;
        long ns = 0, nd = 0;
        for (double k : o.moduli) {
            const EllipticModulus mod = make_modulus(k);
            const SemiDiscreteParams p = make_semi_params(mod, f, 0.0917, 0.23);
            const SemiCoeffs c = semi_sg_coeffs(p);
            for (long m = -o.m_half; m <= o.m_half; ++m)
                for (double t : o.times) {
                    const SemiResiduals r = semi_residuals(p, m, t);
                    semi = std::max({semi, std::abs(r.sg), std::abs(r.mkdv)});
                    ++ns;
                }
            const HalfAngle a = semi_sample(p, 2, 0.37), b = rotated(semi_sample(p, 3, 0.37), 0.2);
            const SemiResiduals bad = semi_residuals(a, b, c);
            sensitivity_semi = std::min(sensitivity_semi, std::max(std::abs(bad.sg), std::abs(bad.mkdv)));

            const DiscreteParams d = make_discrete_params(mod, f, 0.0917, 0.061);
            const double gh = discrete_gamma_hat(d);
            for (long m = -o.grid / 2; m < o.grid / 2; ++m)
                for (long n = -o.grid / 2; n < o.grid / 2; ++n) {
                    discrete = std::max(discrete, std::abs(discrete_sg_residual(d, m, n)));
                    ++nd;
                }
            const HalfAngle A = rotated(discrete_sample(d, 2, 2), 0.2);
            sensitivity_discrete = std::min(
                sensitivity_discrete,
                std::abs(discrete_sg_residual(A, discrete_sample(d, 1, 1), discrete_sample(d, 2, 1),
                                              discrete_sample(d, 1, 2), gh)));
        }
        const std::string fam(to_string(f));
        out.push_back(make_suite("semi_discrete_sg_" + fam, semi, 1e-10, ns, 2));
        out.push_back(make_suite("discrete_sg_" + fam, discrete, 1e-9, nd, 1));
    }
    out.push_back(make_suite("semi_discrete_sg_sensitivity", sensitivity_semi, 1e-3, 2 * o.moduli.size(), 2, true));
    out.push_back(make_suite("discrete_sg_sensitivity", sensitivity_discrete, 1e-3, 2 * o.moduli.size(), 1, true));
    return out;
}

std::vector<SuiteResult> verify_curves(const VerifyOptions& o) {
    double edge = 0, speed = 0, torsion = 0, fd = 0, binormal = 0, decomp = 0;
    long n = 0;
    const double h = 1e-4;
    for_curves(o, [&](const SurfaceParams& p) {
        const double eps = surface_epsilon(p), len = edge_length(p);
        const JacobiTriple j = jacobi(p.gamma_step, p.mod);
        const double cos_nu = p.family == Family::dn ? j.cn : j.dn;
        const double rate = sign_value(p.frame_sign) * (p.family == Family::dn ? p.beta_rate : p.beta_rate * p.mod.k);
        for (long m = -o.m_half; m <= o.m_half; ++m)
            for (double t : o.times) {
                const Vec3 g0 = gamma_point(p, m, t), g1 = gamma_point(p, m + 1, t);
                const Vec3 b0 = b_point(p, m, t), b1 = b_point(p, m + 1, t);
                edge = std::max(edge, vec_max(g1 - g0 - eps * cross(b1, b0)));
                speed = std::max(speed, std::abs(norm(g1 - g0) - len));
                torsion = std::max(torsion, std::abs(dot(b0, b1) - cos_nu));
                const Vec3 v = flow_velocity(p, m, t);
                const Vec3 d = (gamma_point(p, m, t + h) - gamma_point(p, m, t - h)) / (2 * h);
                fd = std::max(fd, vec_max(v - d));
                const Frame f = frame_at(p, m, t);
                const AnglePair w = flow_angle(p, m, t);
                binormal = std::max(binormal, std::abs(dot(v, f.B)));
                decomp = std::max({decomp, std::abs(dot(v, f.T) - rate * w.c), std::abs(dot(v, f.N) - rate * w.s)});
                ++n;
            }
    });
    return {make_suite("curve_edge_identity", edge, 1e-10, n, 1),
            make_suite("curve_constant_speed", speed, 1e-10, n, 1),
            make_suite("curve_torsion_cosine", torsion, 1e-12, n, 1),
            make_suite("flow_finite_difference", fd, 1e-6, n, 1),
            make_suite("flow_binormal_orthogonality", binormal, 1e-10, n, 1),
            make_suite("flow_frame_decomposition", decomp, 1e-10, n, 2)};
}

std::vector<SuiteResult> verify_tau(const VerifyOptions& o) {
    double equiv = 0, fh = 0, fr = 0, cr = 0;
    long ne = 0, nb = 0;
    for_curves(o, [&](const SurfaceParams& p) {
        const TauContext ctx = make_tau_context(p.mod, p.family, p.twisted, p.gamma_step, p.beta_rate);
        for (long m = -o.m_half; m <= o.m_half; m += 4)
            for (double t : o.times) {
                const TauCurvePoint q = gamma_from_tau(ctx, m, t);
                equiv = std::max({equiv, vec_max(q.Gamma - gamma_point(p, m, t)), vec_max(q.B - b_point(p, m, t))});
                ++ne;
                const BilinearResiduals r = bilinear_checks(ctx, m, t);
                fh = std::max(fh, r.fh);
                fr = std::max(fr, r.fr);
                cr = std::max(cr, r.cr);
                ++nb;
            }
    });
    return {make_suite("tau_closed_form_equivalence", equiv, 1e-8, ne, 2),
            make_suite("tau_bilinear_fh", fh, 1e-9, nb, 1), make_suite("tau_bilinear_fr", fr, 1e-9, nb, 1),
            make_suite("tau_relation_finite_difference", cr, 1e-6, nb, 1)};
}

std::vector<SuiteResult> verify_kaleidocycles(const VerifyOptions& o) {
    double closure = 0;
    long n = 0;
    auto check = [&](const SurfaceParams& p, long period) {
        for (long m = -o.m_half; m <= o.m_half; ++m)
            for (double t : o.times) {
                closure = std::max(closure, distance(gamma_point(p, m + period, t), gamma_point(p, m, t)));
                ++n;
            }
    };
    for (int order : {3, 4, 5, 6, 8}) check(kaleidocycle_params(order, Family::dn), kaleidocycle_period(order, Family::dn));
    for (double k : o.moduli) check(kaleidocycle_params(2, Family::cn, k), kaleidocycle_period(2, Family::cn));
    return {make_suite("kaleidocycle_closure", closure, 1e-9, n, 1)};
}

std::vector<SuiteResult> verify_ksurfaces(const VerifyOptions& o) {
    double axioms = 0, compat = 0, sensitivity = 1e300, angle = 0;
    long ng = 0, nc = 0;
    const long half = o.grid / 2;
    for (double k : o.moduli)
        for (Family f : {Family::dn, Family::cn})
            for (auto [g, d] : {std::pair{0.4, 0.7}, std::pair{-0.55, 0.25}, std::pair{1.9, -1.1}}) {
                const KParams p = make_kparams(make_modulus(k), f, g, d);
                axioms = std::max(axioms, k_grid_report(p, make_kgrid(p, -half, -half, o.grid, o.grid)).max_residual());
                ++ng;
                const KTorsions t = k_torsions(p);
                const double nu1 = std::atan2(t.sin_nu1, t.cos_nu1), nu2 = std::atan2(t.sin_nu2, t.cos_nu2);
                const double t1 = tan_half(t.sin_nu1, t.cos_nu1), t2 = tan_half(t.sin_nu2, t.cos_nu2);
                const DiscreteParams sg = k_sg_params(p);
                for (long m = -half; m < half; ++m)
                    for (long n = -half; n < half; ++n) {
                        const HalfAngle A = discrete_sample(sg, m + 1, n + 1), B = discrete_sample(sg, m, n),
                                        C = discrete_sample(sg, m + 1, n), D = discrete_sample(sg, m, n + 1);
                        for (Sign s : {Sign::plus, Sign::minus}) {
                            const Sign r = s == Sign::plus ? Sign::minus : Sign::plus;
                            compat = std::max(compat, compat_matrices(A, B, C, D, nu1, nu2, s, s).residual);
                            compat = std::max(compat, compat_matrices(A, B, C, D, nu1, -nu2, s, r).residual);
                        }
                        angle = std::max(angle, std::abs(k_angle_identity(A, B, C, D, t1, t2)));
                        ++nc;
                    }
                const HalfAngle A = rotated(discrete_sample(sg, 1, 1), 0.2);
                sensitivity = std::min(sensitivity, compat_matrices(A, discrete_sample(sg, 0, 0), discrete_sample(sg, 1, 0),
                                                                    discrete_sample(sg, 0, 1), nu1, nu2, Sign::plus,
                                                                    Sign::plus)
                                                        .residual);
            }
    double periodic = 0;
    long np = 0;
    for (KCase id : {KCase::c1a, KCase::c1b, KCase::c1c, KCase::c2a, KCase::c2b, KCase::c2c})
        for (int order : {3, 4, 6}) {
            periodic = std::max(periodic, k_periodicity(k_case(id, order)).max_defect);
            ++np;
        }
    return {make_suite("ksurface_axioms", axioms, 1e-10, ng, 10),
            make_suite("ksurface_compatibility", compat, 1e-11, nc, 2),
            make_suite("ksurface_compatibility_sensitivity", sensitivity, 1e-3, ng, 1, true),
            make_suite("ksurface_angle_identity", angle, 1e-10, nc, 1),
            make_suite("ksurface_periodicity", periodic, 1e-9, np, 6)};
}

std::vector<SuiteResult> run_verify(const VerifyOptions& o) {
    std::vector<SuiteResult> out;
    auto append = [&out](std::vector<SuiteResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    append(verify_special_functions(o));
    append(verify_sine_gordon(o));
    append(verify_curves(o));
    append(verify_tau(o));
    append(verify_kaleidocycles(o));
    append(verify_ksurfaces(o));
    if (o.identities) append(run_identities(o.identity_options));
    return out;
}

bool all_pass(const std::vector<SuiteResult>& suites) {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

}  // namespace dsurf
