#pragma once

#include "dsurf/elliptic.hpp"
#include "dsurf/family.hpp"

namespace dsurf {

// Step angle alpha of phi_m tied to the psi-step gamma:
//   dn: cos alpha = +-dn(gamma), sin alpha = k sn(gamma)
//   cn: cos alpha = +-cn(gamma), sin alpha = sn(gamma)
// with the minus sign for the twisted families.
double alpha_step(const EllipticModulus& mod, Family family, bool twisted, double gamma);

// phi_m = m alpha + beta k t (dn) or m alpha + beta t (cn).
double phi_angle(const EllipticModulus& mod, Family family, double alpha, double beta, long m, double t);

}  // namespace dsurf
