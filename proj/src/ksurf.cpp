#include "dsurf/ksurf.hpp"

#include <algorithm>
#include <cmath>

#include "dsurf/errors.hpp"

namespace dsurf {
namespace {

constexpr double kConstraintTol = 1e-12;

struct StepTrig {
    double ca, sa, cb, sb;
};

// Required (cos, sin) of alpha and beta.
StepTrig required_steps(const EllipticModulus& mod, Family family, double gamma, double delta) {
    const JacobiTriple g = jacobi(gamma, mod), d = jacobi(delta, mod);
    if (family == Family::dn) return {g.dn, mod.k * g.sn, -d.dn, mod.k * d.sn};
    return {g.cn, g.sn, -d.cn, d.sn};
}

cplx unit_half(const HalfAngle& w) {
    const cplx h{w.c, w.s};
    return h / std::abs(h);
}

cplx unit_quarter(const HalfAngle& w) {
    const QuarterAngle q = quarter_angle(w);
    const cplx h{q.c, q.s};
    return h / std::abs(h);
}

}  // namespace

KParams make_kparams(const EllipticModulus& mod, Family family, double gamma, double delta) {
    const StepTrig t = required_steps(mod, family, gamma, delta);
    return {mod, family, gamma, delta, std::atan2(t.sa, t.ca), std::atan2(t.sb, t.cb)};
}

KParams make_kparams_raw(const EllipticModulus& mod, Family family, double gamma, double delta, double alpha,
                         double beta) {
    return {mod, family, gamma, delta, alpha, beta};
}

double kparams_constraint_defect(const KParams& p) {
    const StepTrig t = required_steps(p.mod, p.family, p.gamma_step, p.delta_step);
    return std::max({std::abs(std::cos(p.alpha_step) - t.ca), std::abs(std::sin(p.alpha_step) - t.sa),
                     std::abs(std::cos(p.beta_step) - t.cb), std::abs(std::sin(p.beta_step) - t.sb)});
}

KPoint k_point(const KParams& p, long m, long n) {
    const double k = p.mod.k;
    const double dm = static_cast<double>(m), dn = static_cast<double>(n);
    const double psi = dm * p.gamma_step + dn * p.delta_step;
    const double phi = dm * p.alpha_step + dn * p.beta_step;
    const JacobiTriple j = jacobi(psi, p.mod);
    const double sg = parity(n), c = std::cos(phi), s = std::sin(phi);
    const double z = -sn2_integral(psi, p.mod) + dm * sn2_integral(p.gamma_step, p.mod) +
                     dn * sn2_integral(p.delta_step, p.mod);
    KPoint out;
    if (p.family == Family::dn) {
        const double r = sg * j.dn / k;
        out.F = {r * c, r * s, k * z};
        out.N = {sg * c * j.sn, sg * s * j.sn, -j.cn};
    } else {
        const double r = sg * k * j.cn;
        out.F = {r * c, r * s, k * k * z};
        out.N = {sg * k * c * j.sn, sg * k * s * j.sn, -j.dn};
    }
    return out;
}

KEdgeResiduals k_edge_residuals(const KParams& p, long m, long n) {
    const KPoint a = k_point(p, m, n), b = k_point(p, m + 1, n), d = k_point(p, m, n + 1);
    return {norm(b.F - a.F - cross(b.N, a.N)), norm(d.F - a.F + cross(d.N, a.N))};
}

KGrid make_kgrid_unchecked(const KParams& p, long m0, long n0, long M, long N) {
    if (M < 2 || N < 2) throw DomainError("make_kgrid: the grid needs at least 2 x 2 vertices");
    KGrid g;
    g.m0 = m0;
    g.n0 = n0;
    g.M = M;
    g.N = N;
    g.points.resize(static_cast<std::size_t>(M * N));
    g.normals.resize(g.points.size());
    for (long i = 0; i < M; ++i)
        for (long j = 0; j < N; ++j) {
            const KPoint q = k_point(p, m0 + i, n0 + j);
            g.points[g.index(i, j)] = q.F;
            g.normals[g.index(i, j)] = q.N;
        }
    return g;
}

KGrid make_kgrid(const KParams& p, long m0, long n0, long M, long N) {
    if (kparams_constraint_defect(p) > kConstraintTol)
        throw DomainError("make_kgrid: alpha and beta violate the angle constraints");
    return make_kgrid_unchecked(p, m0, n0, M, N);
}

double KGridReport::max_residual() const {
    return std::max({edge_m, edge_n, planarity, opposite_m, opposite_n, spread_A, spread_B, torsion_m, torsion_n,
                     unit_normal});
}

KGridReport k_grid_report(const KParams& p, const KGrid& g) {
    KGridReport r;
    const KTorsions tor = k_torsions(p);
    const long M = g.M, N = g.N;
    for (long i = 0; i < M; ++i)
        for (long j = 0; j < N; ++j) {
            const Vec3& F = g.F(i, j);
            const Vec3& Nv = g.normal(i, j);
            r.unit_normal = std::max(r.unit_normal, std::abs(norm(Nv) - 1.0));
            if (i + 1 < M) {
                const Vec3 e = g.F(i + 1, j) - F;
                r.edge_m = std::max(r.edge_m, norm(e - cross(g.normal(i + 1, j), Nv)));
                r.torsion_m = std::max(r.torsion_m, std::abs(dot(Nv, g.normal(i + 1, j)) - tor.cos_nu1));
            }
            if (j + 1 < N) {
                const Vec3 e = g.F(i, j + 1) - F;
                r.edge_n = std::max(r.edge_n, norm(e + cross(g.normal(i, j + 1), Nv)));
                r.torsion_n = std::max(r.torsion_n, std::abs(dot(Nv, g.normal(i, j + 1)) - tor.cos_nu2));
            }
            if (i + 1 < M && j + 1 < N) {
                const double a0 = distance(g.F(i + 1, j), F), a1 = distance(g.F(i + 1, j + 1), g.F(i, j + 1));
                const double b0 = distance(g.F(i, j + 1), F), b1 = distance(g.F(i + 1, j + 1), g.F(i + 1, j));
                r.opposite_m = std::max(r.opposite_m, std::abs(a0 - a1));
                r.opposite_n = std::max(r.opposite_n, std::abs(b0 - b1));
            }
            if (i > 0 && j > 0 && i + 1 < M && j + 1 < N) {
                const Vec3 e[4] = {g.F(i + 1, j) - F, g.F(i, j + 1) - F, g.F(i - 1, j) - F, g.F(i, j - 1) - F};
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b)
                        for (int c = b + 1; c < 4; ++c)
                            r.planarity = std::max(r.planarity, std::abs(triple(e[a], e[b], e[c])));
            }
        }
    for (long i = 0; i + 1 < M; ++i) {
        double lo = 1e300, hi = -1e300;
        for (long j = 0; j < N; ++j) {
            const double a = distance(g.F(i + 1, j), g.F(i, j));
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        r.spread_A = std::max(r.spread_A, hi - lo);
        r.A.push_back(distance(g.F(i + 1, 0), g.F(i, 0)));
    }
    for (long j = 0; j + 1 < N; ++j) {
        double lo = 1e300, hi = -1e300;
        for (long i = 0; i < M; ++i) {
            const double b = distance(g.F(i, j + 1), g.F(i, j));
            lo = std::min(lo, b);
            hi = std::max(hi, b);
        }
        r.spread_B = std::max(r.spread_B, hi - lo);
        r.B.push_back(distance(g.F(0, j + 1), g.F(0, j)));
    }
    return r;
}

KTorsions k_torsions(const KParams& p) {
    const JacobiTriple g = jacobi(p.gamma_step, p.mod), d = jacobi(p.delta_step, p.mod);
    if (p.family == Family::dn) return {g.cn, g.sn, d.cn, d.sn};
    return {g.dn, p.mod.k * g.sn, d.dn, p.mod.k * d.sn};
}

double tan_half(double sin_nu, double cos_nu) {
    const double den = 1.0 + cos_nu;
    if (std::abs(den) < 1e-14) throw DomainError("tan_half: cos nu = -1");
    return sin_nu / den;
}

DiscreteParams k_sg_params(const KParams& p) {
    const double K4 = 4.0 * p.mod.K;
    return make_discrete_params(p.mod, p.family, p.gamma_step / K4, p.delta_step / K4);
}

CompatResult compat_matrices(const HalfAngle& wA, const HalfAngle& wB, const HalfAngle& wC, const HalfAngle& wD,
                             double nu1, double nu2, Sign sign_L, Sign sign_Lh) {
    const cplx hA = unit_half(wA), hB = unit_half(wB), hC = unit_half(wC), hD = unit_half(wD);
    const double c1 = std::cos(nu1 / 2), s1 = sign_value(sign_L) * std::sin(nu1 / 2);
    const double c2 = std::cos(nu2 / 2), s2 = sign_value(sign_Lh) * std::sin(nu2 / 2);
    // e = e^{-i(X - Y)/2} for L, e^{i(X + Y)/2} for Lh.
    auto L = [&](cplx hx, cplx hy) {
        const cplx e = std::conj(hx) * hy;
        return Mat2{c1 * e, s1, -s1, c1 * std::conj(e)};
    };
    auto Lh = [&](cplx hx, cplx hy) {
        const cplx e = hx * hy;
        return Mat2{c2, s2 * e, -s2 * std::conj(e), c2};
    };
    CompatResult r;
    r.lhs = L(hC, hB) * Lh(hA, hC);
    r.rhs = Lh(hD, hB) * L(hA, hD);
    r.residual = frobenius(r.lhs - r.rhs);
    return r;
}

double k_angle_identity(const HalfAngle& wA, const HalfAngle& wB, const HalfAngle& wC, const HalfAngle& wD,
                        double tan1, double tan2) {
    const cplx qa = unit_quarter(wA), qb = unit_quarter(wB), qc = unit_quarter(wC), qd = unit_quarter(wD);
    const double sin_v = (qa * qb * std::conj(qc) * std::conj(qd)).imag();
    const double sin_u = (qa * qb * qc * qd).imag();
    return -sin_v - tan1 * tan2 * sin_u;
}

const char* to_string(KCase c) {
    switch (c) {
        case KCase::c1a: return "1a";
        case KCase::c1b: return "1b";
        case KCase::c1c: return "1c";
        case KCase::c2a: return "2a";
        case KCase::c2b: return "2b";
        case KCase::c2c: return "2c";
    }
    return "?";
}

KCaseSpec k_case(KCase id, int p, double cn_modulus) {
    KCaseSpec s;
    s.id = id;
    s.order = p;
    const bool dn_case = id == KCase::c1a || id == KCase::c1b || id == KCase::c1c;
    if (dn_case && p < 3) throw DomainError("k_case: the dn cases need p >= 3");
    const EllipticModulus mod = make_modulus(dn_case ? std::sin(M_PI / p) : cn_modulus);
    const double K = mod.K;
    const long P = p;
    switch (id) {
        case KCase::c1a:
            s.params = make_kparams(mod, Family::dn, K, K);
            s.shifts = {{2 * P, 2 * P}};
            break;
        case KCase::c1b:
            s.params = make_kparams(mod, Family::dn, K, 2 * K);
            s.shifts = {{2 * P, 2}};
            break;
        case KCase::c1c:
            // delta is free here; K/3 keeps the n-direction generic.
            s.params = make_kparams(mod, Family::dn, 2 * K, K / 3);
            s.shifts = {{1, 0}};
            break;
        case KCase::c2a:
            s.params = make_kparams(mod, Family::cn, K, K);
            s.shifts = {{4, 0}, {0, 4}, {2, 2}};
            break;
        case KCase::c2b:
            s.params = make_kparams(mod, Family::cn, K, 2 * K);
            s.shifts = {{4, 0}, {0, 2}, {4, 2}};
            break;
        case KCase::c2c:
            s.params = make_kparams(mod, Family::cn, 2 * K, K);
            s.shifts = {{2, 0}, {0, 4}, {1, 2}};
            break;
    }
    return s;
}

KPeriodicityReport k_periodicity(const KCaseSpec& spec, long window) {
    KPeriodicityReport r;
    r.id = spec.id;
    for (const KShift& sh : spec.shifts)
        for (long m = 0; m < window; ++m)
            for (long n = 0; n < window; ++n) {
                const Vec3 a = k_point(spec.params, m, n).F;
                const Vec3 b = k_point(spec.params, m + sh.first, n + sh.second).F;
                r.max_defect = std::max(r.max_defect, distance(a, b));
            }
    r.ok = r.max_defect < r.tolerance;
    return r;
}

}  // namespace dsurf
