#include "dsurf/sine_gordon.hpp"

#include <cmath>
#include <complex>

#include "dsurf/errors.hpp"

namespace dsurf {
namespace {

constexpr double kPoleTol = 1e-14;

HalfAngle field(Family f, const JacobiTriple& j, double k) {
    if (f == Family::dn) return {j.dn, k * j.sn, std::nullopt};
    return {j.cn, j.sn, std::nullopt};
}

std::complex<double> unit(const QuarterAngle& q) { return {q.c, q.s}; }

}  // namespace

QuarterAngle quarter_angle(const HalfAngle& w) {
    QuarterAngle q;
    if (w.c >= 0.0) {
        q.c = std::sqrt(0.5 * (1.0 + w.c));
        q.s = w.s / (2.0 * q.c);
    } else {
        q.s = std::copysign(std::sqrt(0.5 * (1.0 - w.c)), w.s);
        q.c = w.s / (2.0 * q.s);
    }
    return q;
}

double default_phase(Family f) { return f == Family::dn ? 0.5 : 0.0; }

SemiDiscreteParams make_semi_params(const EllipticModulus& mod, Family family, double Omega, double A) {
    return {mod, family, Omega, default_phase(family), A};
}

HalfAngle semi_sample(const SemiDiscreteParams& p, long m, double t) {
    const double K = p.mod.K, k = p.mod.k;
    const double xi = static_cast<double>(m) * p.Omega + p.xi0 + p.A * t;
    const JacobiTriple j = jacobi(4.0 * K * xi, p.mod);
    HalfAngle h = field(p.family, j, k);
    h.dwdt = (p.family == Family::dn) ? 8.0 * K * p.A * k * j.cn : 8.0 * K * p.A * j.dn;
    return h;
}

SemiCoeffs semi_sg_coeffs(const SemiDiscreteParams& p) {
    const double K = p.mod.K, k = p.mod.k;
    const JacobiTriple j = jacobi(2.0 * K * p.Omega, p.mod);
    const double scale = 8.0 * K * p.A;
    SemiCoeffs c;
    if (p.family == Family::dn) {
        if (std::abs(j.cn) < kPoleTol || std::abs(j.sn) < kPoleTol)
            throw PoleError("semi_sg_coeffs: 2K Omega hits a zero of sn or cn");
        c.sg = -scale * j.sn * j.dn / j.cn;
        c.mkdv = scale * j.cn / (j.sn * j.dn);
    } else {
        if (std::abs(j.cn) < kPoleTol || std::abs(j.sn) < kPoleTol)
            throw PoleError("semi_sg_coeffs: 2K Omega hits a zero of sn or cn");
        c.sg = -k * k * scale * j.sn * j.cn / j.dn;
        // The residual-nulling mKdV constant has no k^2 factor.
        c.mkdv = scale * j.dn / (j.sn * j.cn);
    }
    return c;
}

SemiResiduals semi_residuals(const HalfAngle& wm, const HalfAngle& wm1, const SemiCoeffs& c) {
    if (!wm.dwdt || !wm1.dwdt) throw DomainError("semi_residuals: samples carry no time derivative");
    const double sin_sum = wm1.s * wm.c + wm1.c * wm.s;
    const double sin_diff = wm1.s * wm.c - wm1.c * wm.s;
    SemiResiduals r;
    r.sg = (*wm1.dwdt - *wm.dwdt) - c.sg * sin_sum;
    r.mkdv = (*wm1.dwdt + *wm.dwdt) - c.mkdv * sin_diff;
    return r;
}

SemiResiduals semi_residuals(const SemiDiscreteParams& p, long m, double t) {
    return semi_residuals(semi_sample(p, m, t), semi_sample(p, m + 1, t), semi_sg_coeffs(p));
}

DiscreteParams make_discrete_params(const EllipticModulus& mod, Family family, double Omega, double P) {
    return {mod, family, Omega, P, default_phase(family)};
}

HalfAngle discrete_sample(const DiscreteParams& p, long m, long n) {
    const double xi = static_cast<double>(m) * p.Omega + static_cast<double>(n) * p.P + p.xi0;
    return field(p.family, jacobi(4.0 * p.mod.K * xi, p.mod), p.mod.k);
}

double discrete_gamma_hat(const DiscreteParams& p) {
    const double K = p.mod.K, k = p.mod.k;
    const JacobiTriple a = jacobi(2.0 * K * p.Omega, p.mod);
    const JacobiTriple b = jacobi(2.0 * K * p.P, p.mod);
    if (p.family == Family::dn) {
        if (std::abs(a.cn) < kPoleTol || std::abs(b.cn) < kPoleTol)
            throw PoleError("discrete_gamma_hat: cn(2K Omega) or cn(2K P) vanishes");
        return -(a.sn * a.dn / a.cn) * (b.sn * b.dn / b.cn);
    }
    return -k * k * (a.sn * a.cn / a.dn) * (b.sn * b.cn / b.dn);
}

double discrete_sg_residual(const HalfAngle& a, const HalfAngle& b, const HalfAngle& c,
                            const HalfAngle& d, double gamma_hat) {
    const auto qa = unit(quarter_angle(a)), qb = unit(quarter_angle(b));
    const auto qc = unit(quarter_angle(c)), qd = unit(quarter_angle(d));
    const double sin_v = (qa * qb * std::conj(qc) * std::conj(qd)).imag();
    const double sin_u = (qa * qb * qc * qd).imag();
    return sin_v - gamma_hat * sin_u;
}

double discrete_sg_residual(const DiscreteParams& p, long m, long n) {
    return discrete_sg_residual(discrete_sample(p, m + 1, n + 1), discrete_sample(p, m, n),
                                discrete_sample(p, m + 1, n), discrete_sample(p, m, n + 1),
                                discrete_gamma_hat(p));
}

}  // namespace dsurf
