#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dsurf/errors.hpp"
#include "dsurf/frames.hpp"

using namespace dsurf;

namespace {

const cplx I{0, 1};

struct Rng {
    std::mt19937_64 g{77};
    double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
    Vec3 vec() { return {u(-2, 2), u(-2, 2), u(-2, 2)}; }
    HalfAngle field() {
        double a = u(-3.1, 3.1);
        return {std::cos(a), std::sin(a), std::nullopt};
    }
    SU2 su2() {
        // Unit quaternion -> SU(2).
        double q[4];
        double n = 0;
        for (double& x : q) {
            x = std::normal_distribution<double>()(g);
            n += x * x;
        }
        n = std::sqrt(n);
        cplx a(q[0] / n, q[1] / n), b(q[2] / n, q[3] / n);
        return {a, -std::conj(b), b, std::conj(a)};
    }
};

double max_abs_diff(const Mat2& x, const Mat2& y) { return frobenius(x - y); }

double max_abs_diff(const Mat3& x, const Mat3& y) {
    double d = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(x[i][j] - y[i][j]));
    return d;
}

double vdiff(Vec3 a, Vec3 b) { return norm(a - b); }

}  // namespace

TEST(Phi, BasisAndZero) {
    EXPECT_EQ(frobenius(phi_iso({0, 0, 0})), 0);
    Mat2 e1 = phi_iso({1, 0, 0});
    EXPECT_EQ(e1.a, cplx(0));
    EXPECT_EQ(e1.b, -I);
    EXPECT_EQ(e1.c, -I);
    EXPECT_EQ(e1.d, cplx(0));
    Mat2 e2 = phi_iso({0, 1, 0});
    EXPECT_EQ(e2.b, cplx(-1));
    EXPECT_EQ(e2.c, cplx(1));
    Mat2 e3 = phi_iso({0, 0, 1});
    EXPECT_EQ(e3.a, -I);
    EXPECT_EQ(e3.d, I);
}

TEST(Phi, CrossProductIsHalfCommutator) {
    Rng r;
    for (int i = 0; i < 100; ++i) {
        Vec3 a = r.vec(), b = r.vec();
        Mat2 pa = phi_iso(a), pb = phi_iso(b);
        Mat2 comm = 0.5 * (pa * pb - pb * pa);
        EXPECT_LT(max_abs_diff(phi_iso(cross(a, b)), comm), 1e-13);
        EXPECT_LT(vdiff(phi_inverse(phi_iso(a)), a), 1e-15);
    }
}

TEST(TransferSu2, IdentityCase) {
    HalfAngle w{std::cos(0.7), std::sin(0.7), std::nullopt};
    for (auto v : {TransferVariant::plus_k, TransferVariant::minus_k}) {
        SU2 L = transfer_su2(w, w, 0.0, v, Sign::plus);
        EXPECT_LT(max_abs_diff(L, Mat2{}), 1e-15);
        EXPECT_LT(su2_defect(L), 1e-15);
    }
}

TEST(TransferSu2, UnitaryWithUnitDeterminant) {
    Rng r;
    for (int i = 0; i < 100; ++i)
        for (auto v : {TransferVariant::plus_k, TransferVariant::minus_k})
            for (auto s : {Sign::plus, Sign::minus})
                EXPECT_LT(su2_defect(transfer_su2(r.field(), r.field(), r.u(-3, 3), v, s)), 1e-12);
}

TEST(TransferSu2, AdjointActionOnBasis) {
    Rng r;
    for (int i = 0; i < 100; ++i) {
        HalfAngle w0 = r.field(), w1 = r.field();
        double nu = r.u(-3, 3);
        for (auto s : {Sign::plus, Sign::minus}) {
            double sg = sign_value(s);
            SU2 L = transfer_su2(w0, w1, nu, TransferVariant::plus_k, s);
            Mat2 Li = adjoint(L);
            double cn = std::cos(nu), sn = std::sin(nu);
            Vec3 e1{cn * w0.c * w1.c + w0.s * w1.s, cn * w0.c * w1.s - w0.s * w1.c, sg * sn * w0.c};
            Vec3 e2{cn * w0.s * w1.c - w0.c * w1.s, cn * w0.s * w1.s + w0.c * w1.c, sg * sn * w0.s};
            Vec3 e3{-sg * sn * w1.c, -sg * sn * w1.s, cn};
            EXPECT_LT(max_abs_diff(L * basis_e(1) * Li, phi_iso(e1)), 1e-12);
            EXPECT_LT(max_abs_diff(L * basis_e(2) * Li, phi_iso(e2)), 1e-12);
            EXPECT_LT(max_abs_diff(L * basis_e(3) * Li, phi_iso(e3)), 1e-12);
        }
    }
}

TEST(TransferSo3, RotationStructure) {
    Rng r;
    EXPECT_LT(max_abs_diff(transfer_so3(0.0, 0.0), Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), 1e-300);
    for (int i = 0; i < 50; ++i) EXPECT_LT(orthogonality_defect(transfer_so3(r.u(-4, 4), r.u(-4, 4))), 1e-14);
}

TEST(TransferSo3, ConjugationOracle) {
    // Frames built from Phi and Phi L agree with Phi~ L~ for both variants and signs.
    Rng r;
    for (int i = 0; i < 100; ++i) {
        HalfAngle w0 = r.field(), w1 = r.field(), w2 = r.field();
        double nu = r.u(-3, 3);
        SU2 Phi = r.su2();
        for (auto v : {TransferVariant::plus_k, TransferVariant::minus_k})
            for (auto s : {Sign::plus, Sign::minus}) {
                SU2 L = transfer_su2(w0, w1, nu, v, s);
                Frame f0 = frenet_frame(Phi, w1, v, s);
                Frame f1 = frenet_frame(Phi * L, w2, v, s);
                double vs = (v == TransferVariant::plus_k) ? 1.0 : -1.0;
                // cos K and sin K for K = -(w2 - w0)/2 (plus_k has the opposite sign on sin K).
                double ck = w2.c * w0.c + w2.s * w0.s;
                double sk = vs * (w2.s * w0.c - w2.c * w0.s);
                Mat3 expect = frame_matrix(f0) * transfer_so3(ck, sk, std::cos(nu), std::sin(nu));
                EXPECT_LT(max_abs_diff(frame_matrix(f1), expect), 1e-10) << int(v) << int(s);
                EXPECT_LT(frame_defect(f0), 1e-12);
            }
    }
}

TEST(TransferSu2, SwappedPhasesGiveSumCurvature) {
    // Diagonal phases (w_{m+1}+w_m)/4 and off-diagonal (w_{m+1}-w_m)/4 with the
    // minus_k frames realise K_{m+1} = -(w_{m+2} + w_m)/2 instead.
    Rng r;
    for (int i = 0; i < 20; ++i) {
        HalfAngle w0 = r.field(), w1 = r.field(), w2 = r.field();
        double nu = r.u(-3, 3);
        cplx q0(quarter_angle(w0).c, quarter_angle(w0).s), q1(quarter_angle(w1).c, quarter_angle(w1).s);
        double c = std::cos(nu / 2), s = std::sin(nu / 2);
        SU2 L{c * q1 * q0, s * q1 * std::conj(q0), -s * std::conj(q1) * q0, c * std::conj(q1 * q0)};
        Frame f0 = frenet_frame(Mat2{}, w1, TransferVariant::minus_k, Sign::plus);
        Frame f1 = frenet_frame(L, w2, TransferVariant::minus_k, Sign::plus);
        auto g = extract_geometry({f0, f1});
        EXPECT_NEAR(g.cos_curv[0], w2.c * w0.c - w2.s * w0.s, 1e-12);
        EXPECT_NEAR(g.sin_curv[0], -(w2.s * w0.c + w2.c * w0.s), 1e-12);
    }
}

TEST(TransferSo3, AdjointAssemblyIsRotation) {
    Rng r;
    for (int i = 0; i < 50; ++i) {
        SU2 L = transfer_su2(r.field(), r.field(), r.u(-3, 3), TransferVariant::plus_k, Sign::plus);
        EXPECT_LT(orthogonality_defect(adjoint_so3(L)), 1e-12);
    }
}

TEST(FrameTransfer, BinormalCrossProduct) {
    Rng r;
    for (int i = 0; i < 100; ++i) {
        HalfAngle w0 = r.field(), w1 = r.field(), w2 = r.field();
        double nu = r.u(-3, 3);
        SU2 Phi = r.su2();
        for (auto v : {TransferVariant::plus_k, TransferVariant::minus_k})
            for (auto s : {Sign::plus, Sign::minus}) {
                Frame f0 = frenet_frame(Phi, w1, v, s);
                Frame f1 = frenet_frame(Phi * transfer_su2(w0, w1, nu, v, s), w2, v, s);
                EXPECT_LT(vdiff(cross(f1.B, f0.B), std::sin(nu) * f0.T), 1e-10);
            }
    }
}

TEST(ExtractGeometry, ConstantFrames) {
    Frame f{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto g = extract_geometry({f, f, f});
    ASSERT_EQ(g.cos_curv.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(g.cos_curv[i], 1);
        EXPECT_EQ(g.sin_curv[i], 0);
        EXPECT_EQ(g.cos_nu[i], 1);
        EXPECT_EQ(g.sin_nu[i], 0);
    }
}

TEST(ExtractGeometry, RecoversTransferAngles) {
    Rng r;
    Frame f{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 20; ++i) {
        double k = r.u(-2.5, 2.5), nu = r.u(-3, 3);
        Frame g = frame_from_matrix(frame_matrix(f) * transfer_so3(k, nu));
        auto geo = extract_geometry({f, g});
        EXPECT_NEAR(geo.cos_curv[0], std::cos(k), 1e-14);
        EXPECT_NEAR(geo.sin_curv[0], std::sin(k), 1e-14);
        EXPECT_NEAR(geo.cos_nu[0], std::cos(nu), 1e-14);
        EXPECT_NEAR(geo.sin_nu[0], std::sin(nu), 1e-14);
        f = g;
    }
}

TEST(ExtractGeometry, AntiparallelTangentsAreDegenerate) {
    Frame a{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Frame b{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
    EXPECT_THROW(extract_geometry({a, b}), DegenerateError);
}
