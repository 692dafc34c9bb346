#pragma once

#include <complex>

#include "dsurf/elliptic.hpp"

namespace dsurf {

using cplx = std::complex<double>;

// Theta functions with period 1 in v and nome q = exp(i pi tau).
// Index map: 0 is the conventional theta_4, 1..3 are the usual ones.
//   theta_3(v) = sum q^{n^2} e^{2 pi i n v}
//   theta_0(v) = sum (-1)^n q^{n^2} e^{2 pi i n v}
//   theta_2(v) = sum q^{(n+1/2)^2} e^{(2n+1) pi i v}
//   theta_1(v) = 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v)
struct ThetaParams {
    cplx tau;
    double q = 0;
    double trunc_eps = 1e-16;
};

// tau must be pure imaginary with positive imaginary part.
ThetaParams theta_params(cplx tau);

cplx theta(int j, cplx v, const ThetaParams& p);
cplx theta_prime(int j, cplx v, const ThetaParams& p);

struct ThetaValue {
    cplx value;
    cplx deriv;
};
ThetaValue theta_with_prime(int j, cplx v, const ThetaParams& p);

struct JacobiComplex {
    cplx sn, cn, dn;
};

// Theta quotients on the tau' lattice with v = (u - K)/(2iK').
JacobiComplex jacobi_complex(cplx u, const EllipticModulus& mod);

struct WeierstrassConstants {
    cplx e1, e2, e3;
    double omega = 0;          // K'
    cplx omegap;               // (iK + K')/2
    double zeta_omega_over_omega = 0;
};

WeierstrassConstants weierstrass_constants(const EllipticModulus& mod);

// p(z) = (dn(2iz + iK') - ik sn(2iz + iK'))^2 + e1, periods 2K' and iK + K'.
cplx weierstrass_p(cplx z, const EllipticModulus& mod);

}  // namespace dsurf
