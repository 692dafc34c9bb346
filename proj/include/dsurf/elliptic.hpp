#pragma once

#include <complex>

namespace dsurf {

// Modulus k in (0,1) together with every constant derived from it.
struct EllipticModulus {
    double k = 0;
    double kp = 0;   // sqrt(1 - k^2)
    double K = 0;    // K(k)
    double Kp = 0;   // K(k')
    double E = 0;    // E(k)
    double Ep = 0;   // E(k')
    std::complex<double> tau;   // i K'/K
    std::complex<double> taup;  // i K/K'
    double q = 0;               // exp(i pi taup) = exp(-pi K/K')
};

// Throws DomainError unless 0 < k < 1.
EllipticModulus make_modulus(double k);

// Complete integrals of the first and second kind by the AGM.
double complete_k(double k);
double complete_e(double k);

// Carlson symmetric integrals.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

struct JacobiTriple {
    double sn = 0;
    double cn = 1;
    double dn = 1;
};

// sn, cn, dn of a real argument (reduction by 2K, then descending Landen).
JacobiTriple jacobi(double u, const EllipticModulus& mod);

// Integral of sn^2 from 0 to u. Odd in u.
double sn2_integral(double u, const EllipticModulus& mod);

// Jacobi epsilon function: integral of dn^2 from 0 to u.
double jacobi_epsilon(double u, const EllipticModulus& mod);

// Legendre relation residual E K' + E' K - K K' - pi/2.
double legendre_residual(const EllipticModulus& mod);

}  // namespace dsurf
