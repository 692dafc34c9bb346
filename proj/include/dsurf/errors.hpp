#pragma once

#include <stdexcept>
#include <string>

namespace dsurf {

// Argument outside the mathematical domain (e.g. k not in (0,1)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at a pole of a meromorphic function or a vanishing denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Geometric degeneracy: zero-length edges, antiparallel tangents.
class DegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Series overflow or loss of convergence.
class ConvergenceError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace dsurf
