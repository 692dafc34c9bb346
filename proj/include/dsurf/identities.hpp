#pragma once

#include <cstdint>
#include <vector>

#include "dsurf/report.hpp"

namespace dsurf {

struct IdentityOptions {
    std::uint64_t seed = 20240611;
    int samples = 100;
};

// Theta product formulas on one lattice (8 forms, both signs), relative residual.
SuiteResult theta_addition_suite(const IdentityOptions& opt);

// theta(x+y|tau') theta(x-y|tau') against the 2 tau' lattice (4 forms).
SuiteResult theta_duplication_suite(const IdentityOptions& opt);

// The duplication formulas specialised to the tau-function arguments
// v+-(lambda, z) = v +- lambda/(kK') + iz/(kK') (10 forms).
SuiteResult tau_argument_suite(const IdentityOptions& opt);

// sn, i cn and dn as theta quotients at v = (psi - K)/(2iK'), real psi.
SuiteResult theta_quotient_suite(const IdentityOptions& opt, int item);  // item 1..3

// zeta(w/2) - zeta(w)/2 = k (item 1) and p(w/2) + zeta(w)/w = 2E'/K' (item 2), random k.
SuiteResult weierstrass_suite(const IdentityOptions& opt, int item);

// Nine Jacobi identities between psi_{m-1}, psi_m, psi_{m+1} = psi_m + gamma.
SuiteResult jacobi_step_suite(const IdentityOptions& opt, int item);  // item 1..9

// theta_3(v/tau | -1/tau) = exp(pi i (v^2/tau - 1/4)) tau^{1/2} theta_3(v | tau).
SuiteResult theta_modular_suite(const IdentityOptions& opt);

// Every suite above, in a fixed order.
std::vector<SuiteResult> run_identities(const IdentityOptions& opt = {});

}  // namespace dsurf
