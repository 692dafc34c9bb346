#pragma once

#include <array>
#include <complex>
#include <vector>

#include "dsurf/family.hpp"
#include "dsurf/sine_gordon.hpp"
#include "dsurf/vec3.hpp"

namespace dsurf {

using cplx = std::complex<double>;

// General 2x2 complex matrix; SU(2) elements and su(2) algebra elements share it.
struct Mat2 {
    cplx a{1}, b{0}, c{0}, d{1};  // [[a, b], [c, d]]
};
using SU2 = Mat2;

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(cplx s, const Mat2& x);
Mat2 adjoint(const Mat2& x);
cplx det(const Mat2& x);
double frobenius(const Mat2& x);

// Max deviation from unitarity and from det = 1.
double su2_defect(const Mat2& x);

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 operator*(const Mat3& x, const Mat3& y);
Mat3 transpose(const Mat3& x);
double orthogonality_defect(const Mat3& x);
double det(const Mat3& x);

struct Frame {
    Vec3 T, N, B;
};

// Columns (T | N | B).
Mat3 frame_matrix(const Frame& f);
Frame frame_from_matrix(const Mat3& m);
double frame_defect(const Frame& f);

// phi(x) = x1 E1 + x2 E2 + x3 E3 = [[-i x3, -i x1 - x2], [-i x1 + x2, i x3]].
Mat2 phi_iso(Vec3 v);
Vec3 phi_inverse(const Mat2& m);
Mat2 basis_e(int j);  // j = 1, 2, 3

// plus_k: curvature K_{m+1} = (w_{m+2} - w_m)/2, matrices L^{+-}.
// minus_k: curvature K_{m+1} = -(w_{m+2} - w_m)/2, matrices hat L^{+-}.
enum class TransferVariant { plus_k, minus_k };

SU2 transfer_su2(const HalfAngle& wm, const HalfAngle& wm1, double nu, TransferVariant variant, Sign sign);

// The SO(3) transfer matrix with Phi~_{m+1} = Phi~_m L~_m.
Mat3 transfer_so3(double curv, double nu);
Mat3 transfer_so3(double cos_curv, double sin_curv, double cos_nu, double sin_nu);

// Matrix of X -> L X L^{-1} on the basis (E1, E2, E3).
Mat3 adjoint_so3(const SU2& L);

// Frame of Phi from the next field sample w_{m+1}.
Frame frenet_frame(const SU2& Phi, const HalfAngle& w_next, TransferVariant variant, Sign sign);

// Index i describes the pair (frames[i], frames[i+1]), i.e. K_{i+1} and nu_{i+1}.
struct FrameGeometry {
    std::vector<double> cos_curv, sin_curv;
    std::vector<double> cos_nu, sin_nu;
};

FrameGeometry extract_geometry(const std::vector<Frame>& frames);

}  // namespace dsurf
