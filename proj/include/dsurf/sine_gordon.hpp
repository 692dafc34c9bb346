#pragma once

#include <optional>

#include "dsurf/elliptic.hpp"
#include "dsurf/family.hpp"

namespace dsurf {

// A field value w stored as (cos w/2, sin w/2); the angle itself is never kept.
struct HalfAngle {
    double c = 1.0;
    double s = 0.0;
    std::optional<double> dwdt;
};

// (cos w/4, sin w/4) with sign(sin w/4) = sign(s) on the principal band.
struct QuarterAngle {
    double c = 1.0;
    double s = 0.0;
};

QuarterAngle quarter_angle(const HalfAngle& w);

// xi_m = m Omega + xi0 + A t.
struct SemiDiscreteParams {
    EllipticModulus mod;
    Family family = Family::dn;
    double Omega = 0;
    double xi0 = 0;
    double A = 0;
};

// Default phase: 1/2 for dn (so 4K xi_m = psi_m + 2K), 0 for cn.
double default_phase(Family f);

SemiDiscreteParams make_semi_params(const EllipticModulus& mod, Family family, double Omega, double A);

HalfAngle semi_sample(const SemiDiscreteParams& p, long m, double t);

// (alpha~, beta~) for dn, (gamma~, delta~) for cn.
struct SemiCoeffs {
    double sg = 0;
    double mkdv = 0;
};
SemiCoeffs semi_sg_coeffs(const SemiDiscreteParams& p);

struct SemiResiduals {
    double sg = 0;
    double mkdv = 0;
};

// Residuals of  w'_{m+1} - w'_m = c_sg sin((w_{m+1}+w_m)/2)
// and           w'_{m+1} + w'_m = c_mkdv sin((w_{m+1}-w_m)/2).
SemiResiduals semi_residuals(const HalfAngle& wm, const HalfAngle& wm1, const SemiCoeffs& c);
SemiResiduals semi_residuals(const SemiDiscreteParams& p, long m, double t);

// xi_{m,n} = m Omega + n P + xi0.
struct DiscreteParams {
    EllipticModulus mod;
    Family family = Family::dn;
    double Omega = 0;
    double P = 0;
    double xi0 = 0;
};

DiscreteParams make_discrete_params(const EllipticModulus& mod, Family family, double Omega, double P);

HalfAngle discrete_sample(const DiscreteParams& p, long m, long n);

double discrete_gamma_hat(const DiscreteParams& p);

// sin((A+B-C-D)/4) - gamma_hat sin((A+B+C+D)/4) with A = w_{m+1,n+1}, B = w_{m,n},
// C = w_{m+1,n}, D = w_{m,n+1}.
double discrete_sg_residual(const HalfAngle& a, const HalfAngle& b, const HalfAngle& c,
                            const HalfAngle& d, double gamma_hat);
double discrete_sg_residual(const DiscreteParams& p, long m, long n);

}  // namespace dsurf
