#include "dsurf/frames.hpp"

#include <algorithm>
#include <cmath>

#include "dsurf/errors.hpp"

namespace dsurf {
namespace {

const cplx kI{0.0, 1.0};

cplx unit(const QuarterAngle& q) { return {q.c, q.s}; }

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 operator*(cplx s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
Mat2 adjoint(const Mat2& x) { return {std::conj(x.a), std::conj(x.c), std::conj(x.b), std::conj(x.d)}; }
cplx det(const Mat2& x) { return x.a * x.d - x.b * x.c; }
double frobenius(const Mat2& x) {
    return std::sqrt(std::norm(x.a) + std::norm(x.b) + std::norm(x.c) + std::norm(x.d));
}

double su2_defect(const Mat2& x) {
    const Mat2 p = x * adjoint(x) - Mat2{};
    return std::max(frobenius(p), std::abs(det(x) - 1.0));
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
}

Mat3 transpose(const Mat3& x) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = x[j][i];
    return r;
}

double det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double orthogonality_defect(const Mat3& x) {
    const Mat3 p = transpose(x) * x;
    double d = std::abs(det(x) - 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(p[i][j] - (i == j ? 1.0 : 0.0)));
    return d;
}

Mat3 frame_matrix(const Frame& f) {
    return {{{f.T.x, f.N.x, f.B.x}, {f.T.y, f.N.y, f.B.y}, {f.T.z, f.N.z, f.B.z}}};
}

Frame frame_from_matrix(const Mat3& m) {
    return {{m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]}, {m[0][2], m[1][2], m[2][2]}};
}

double frame_defect(const Frame& f) { return orthogonality_defect(frame_matrix(f)); }

Mat2 phi_iso(Vec3 v) { return {-kI * v.z, -kI * v.x - v.y, -kI * v.x + v.y, kI * v.z}; }

Vec3 phi_inverse(const Mat2& m) {
    // Averages the redundant entries of an su(2) element.
    const double x1 = -0.5 * (m.b + m.c).imag();
    const double x2 = 0.5 * (m.c - m.b).real();
    const double x3 = 0.5 * (m.d - m.a).imag();
    return {x1, x2, x3};
}

Mat2 basis_e(int j) {
    switch (j) {
        case 1: return phi_iso({1, 0, 0});
        case 2: return phi_iso({0, 1, 0});
        case 3: return phi_iso({0, 0, 1});
        default: throw DomainError("basis_e: index must be 1, 2 or 3");
    }
}

SU2 transfer_su2(const HalfAngle& wm, const HalfAngle& wm1, double nu, TransferVariant variant, Sign sign) {
    const cplx q0 = unit(quarter_angle(wm));
    const cplx q1 = unit(quarter_angle(wm1));
    const double c = std::cos(0.5 * nu);
    const double s = sign_value(sign) * std::sin(0.5 * nu);
    if (variant == TransferVariant::plus_k)
        return {c * std::conj(q1) * q0, s * std::conj(q1 * q0), -s * q1 * q0, c * q1 * std::conj(q0)};
    // L^{+-} with both fields negated, so that K_{m+1} = -(w_{m+2} - w_m)/2 holds.
    return {c * q1 * std::conj(q0), s * q1 * q0, -s * std::conj(q1 * q0), c * std::conj(q1) * q0};
}

Mat3 transfer_so3(double cos_curv, double sin_curv, double cos_nu, double sin_nu) {
    return {{{cos_curv, -sin_curv, 0.0},
             {cos_nu * sin_curv, cos_nu * cos_curv, sin_nu},
             {-sin_nu * sin_curv, -sin_nu * cos_curv, cos_nu}}};
}

Mat3 transfer_so3(double curv, double nu) {
    return transfer_so3(std::cos(curv), std::sin(curv), std::cos(nu), std::sin(nu));
}

Mat3 adjoint_so3(const SU2& L) {
    const Mat2 Li = adjoint(L);
    Mat3 r{};
    for (int j = 0; j < 3; ++j) {
        const Vec3 v = phi_inverse(L * basis_e(j + 1) * Li);
        r[0][j] = v.x;
        r[1][j] = v.y;
        r[2][j] = v.z;
    }
    return r;
}

Frame frenet_frame(const SU2& Phi, const HalfAngle& w_next, TransferVariant variant, Sign sign) {
    const double sg = sign_value(sign);
    const Mat2 Pi = adjoint(Phi);
    auto push = [&](Vec3 v) { return phi_inverse(Phi * phi_iso(v) * Pi); };
    const double c = w_next.c, s = w_next.s;
    Frame f;
    if (variant == TransferVariant::plus_k) {
        f.T = sg * push({-s, c, 0});
        f.N = sg * push({-c, -s, 0});
    } else {
        f.T = sg * push({s, c, 0});
        f.N = sg * push({-c, s, 0});
    }
    f.B = push({0, 0, 1});
    return f;
}

FrameGeometry extract_geometry(const std::vector<Frame>& frames) {
    FrameGeometry g;
    for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
        const Frame& a = frames[i];
        const Frame& b = frames[i + 1];
        const double ct = dot(b.T, a.T);
        if (ct < -1.0 + 1e-12) throw DegenerateError("extract_geometry: consecutive tangents are antiparallel");
        g.cos_curv.push_back(ct);
        g.sin_curv.push_back(-dot(b.N, a.T));
        g.cos_nu.push_back(dot(b.B, a.B));
        g.sin_nu.push_back(dot(b.B, a.N));
    }
    return g;
}

}  // namespace dsurf
