#pragma once

#include <string>

namespace dsurf {

// One named group of residual checks. Sensitivity suites are lower-bounded:
// max_residual then holds the smallest residual seen and must exceed tolerance.
struct SuiteResult {
    std::string name;
    double max_residual = 0;
    double tolerance = 0;
    long samples = 0;     // evaluation points per identity or configuration
    long identities = 0;  // identities in the group
    bool pass = true;
    bool lower_bound = false;
};

inline SuiteResult make_suite(std::string name, double value, double tol, long samples, long identities,
                              bool lower_bound = false) {
    const bool pass = lower_bound ? value > tol : value < tol;
    return {std::move(name), value, tol, samples, identities, pass, lower_bound};
}

}  // namespace dsurf
