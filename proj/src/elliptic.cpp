#include "dsurf/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dsurf/errors.hpp"

namespace dsurf {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxAgm = 40;

// K and E from the AGM of (1, k'), with k supplied separately so that
// k' close to 1 does not lose the small k.
void agm_complete(double k, double kp, double& K, double& E) {
    double a = 1.0, b = kp, c = k;
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int n = 0; n < kMaxAgm && std::abs(c) > kEps * a; ++n) {
        double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    K = std::numbers::pi / (2.0 * a);
    E = K * (1.0 - sum);
}

double complementary(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

// Sign-preserving reduction u = 2K j + r with |r| <= K.
long reduce_half_period(double u, double K, double& r) {
    double jd = std::nearbyint(u / (2.0 * K));
    r = u - 2.0 * K * jd;
    return static_cast<long>(jd);
}

// Descending Landen for |u| <= K.
JacobiTriple landen(double u, double k, double kp) {
    if (u == 0.0) return {0.0, 1.0, 1.0};
    std::array<double, kMaxAgm + 1> a{}, c{};
    a[0] = 1.0;
    c[0] = k;
    double b = kp;
    int n = 0;
    while (n < kMaxAgm && std::abs(c[n]) > kEps * a[n]) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i > 0; --i) {
        phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
    }
    JacobiTriple out;
    out.sn = std::sin(phi);
    out.cn = std::cos(phi);
    // dn^2 = k'^2 + k^2 cn^2 is a sum of non-negative terms.
    out.dn = std::sqrt(kp * kp + k * k * out.cn * out.cn);
    return out;
}

}  // namespace

double complete_k(double k) {
    if (!(k > 0.0 && k < 1.0)) throw DomainError("complete_k: modulus must lie in (0,1)");
    double K, E;
    agm_complete(k, complementary(k), K, E);
    return K;
}

double complete_e(double k) {
    if (!(k > 0.0 && k < 1.0)) throw DomainError("complete_e: modulus must lie in (0,1)");
    double K, E;
    agm_complete(k, complementary(k), K, E);
    return E;
}

EllipticModulus make_modulus(double k) {
    if (!(k > 0.0 && k < 1.0)) throw DomainError("make_modulus: modulus must lie in (0,1)");
    EllipticModulus m;
    m.k = k;
    m.kp = complementary(k);
    agm_complete(m.k, m.kp, m.K, m.E);
    agm_complete(m.kp, m.k, m.Kp, m.Ep);
    m.tau = {0.0, m.Kp / m.K};
    m.taup = {0.0, m.K / m.Kp};
    m.q = std::exp(-std::numbers::pi * m.K / m.Kp);
    return m;
}

double legendre_residual(const EllipticModulus& m) {
    return m.E * m.Kp + m.Ep * m.K - m.K * m.Kp - std::numbers::pi / 2.0;
}

double carlson_rf(double x, double y, double z) {
    if (x < 0 || y < 0 || z < 0 || (x == 0) + (y == 0) + (z == 0) > 1)
        throw DomainError("carlson_rf: invalid arguments");
    double a0 = (x + y + z) / 3.0;
    double q = std::pow(3.0 * kEps, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
    double a = a0, fac = 1.0;
    while (fac * q >= std::abs(a)) {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * sy + sx * sz + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
        fac *= 0.25;
    }
    double X = 1.0 - x / a;
    double Y = 1.0 - y / a;
    double Z = -(X + Y);
    double e2 = X * Y - Z * Z, e3 = X * Y * Z;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

double carlson_rd(double x, double y, double z) {
    if (x < 0 || y < 0 || z <= 0 || (x == 0 && y == 0))
        throw DomainError("carlson_rd: invalid arguments");
    double a0 = (x + y + 3.0 * z) / 5.0;
    double q = std::pow(0.25 * kEps, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
    double a = a0, fac = 1.0, sum = 0.0;
    while (fac * q >= std::abs(a)) {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * sy + sx * sz + sy * sz;
        sum += fac / (sz * (z + lam));
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
        fac *= 0.25;
    }
    double X = 1.0 - x / a;
    double Y = 1.0 - y / a;
    double Z = -(X + Y) / 3.0;
    double xy = X * Y, z2 = Z * Z;
    double e2 = xy - 6.0 * z2;
    double e3 = (3.0 * xy - 8.0 * z2) * Z;
    double e4 = 3.0 * (xy - z2) * z2;
    double e5 = xy * z2 * Z;
    double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 -
                    9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
    return fac * series / (a * std::sqrt(a)) + 3.0 * sum;
}

JacobiTriple jacobi(double u, const EllipticModulus& mod) {
    double r;
    long j = reduce_half_period(u, mod.K, r);
    JacobiTriple t = landen(r, mod.k, mod.kp);
    if (j % 2 != 0) {
        t.sn = -t.sn;
        t.cn = -t.cn;
    }
    return t;
}

double sn2_integral(double u, const EllipticModulus& mod) {
    double r;
    long j = reduce_half_period(u, mod.K, r);
    JacobiTriple t = landen(r, mod.k, mod.kp);
    // int_0^r sn^2 = sn^3/3 * RD(cn^2, dn^2, 1); one half period adds 2(K-E)/k^2.
    double part = 0.0;
    if (t.sn != 0.0) part = t.sn * t.sn * t.sn / 3.0 * carlson_rd(t.cn * t.cn, t.dn * t.dn, 1.0);
    double per = 2.0 / 3.0 * carlson_rd(0.0, mod.kp * mod.kp, 1.0);
    return static_cast<double>(j) * per + part;
}

double jacobi_epsilon(double u, const EllipticModulus& mod) {
    return u - mod.k * mod.k * sn2_integral(u, mod);
}

}  // namespace dsurf
