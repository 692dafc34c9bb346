#pragma once

#include <vector>

#include "dsurf/identities.hpp"
#include "dsurf/report.hpp"

namespace dsurf {

struct VerifyOptions {
    std::vector<double> moduli{0.3, 0.6, 0.9, 0.99};
    std::vector<double> times{0.0, 0.37, 0.8, 1.7, 2.5};
    long m_half = 20;  // m in [-m_half, m_half]
    long grid = 20;    // discrete SG and K-surface grids are grid x grid
    bool identities = true;
    IdentityOptions identity_options;
};

// Special functions: Legendre relation, Jacobi functions against theta quotients.
std::vector<SuiteResult> verify_special_functions(const VerifyOptions& o);

// Semi-discrete and discrete sine-Gordon residuals with their sensitivity checks.
std::vector<SuiteResult> verify_sine_gordon(const VerifyOptions& o);

// Curve geometry and isoperimetric flow for the four curve families.
std::vector<SuiteResult> verify_curves(const VerifyOptions& o);

// Theta-built tau functions against the closed-form curves, bilinear residuals.
std::vector<SuiteResult> verify_tau(const VerifyOptions& o);

// Kaleidocycle closure, dn n = 3, 4, 5, 6, 8 and cn.
std::vector<SuiteResult> verify_kaleidocycles(const VerifyOptions& o);

// K-surface axioms, compatibility, angle identity and periodicity cases.
std::vector<SuiteResult> verify_ksurfaces(const VerifyOptions& o);

// Everything above plus the identity corpus when o.identities is set.
std::vector<SuiteResult> run_verify(const VerifyOptions& o = {});

bool all_pass(const std::vector<SuiteResult>& suites);

}  // namespace dsurf
