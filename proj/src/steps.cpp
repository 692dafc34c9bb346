#include "dsurf/steps.hpp"

#include <cmath>

namespace dsurf {

double alpha_step(const EllipticModulus& mod, Family family, bool twisted, double gamma) {
    const JacobiTriple j = jacobi(gamma, mod);
    const double sgn = twisted ? -1.0 : 1.0;
    if (family == Family::dn) return std::atan2(mod.k * j.sn, sgn * j.dn);
    return std::atan2(j.sn, sgn * j.cn);
}

double phi_angle(const EllipticModulus& mod, Family family, double alpha, double beta, long m, double t) {
    const double rate = family == Family::dn ? beta * mod.k : beta;
    return static_cast<double>(m) * alpha + rate * t;
}

}  // namespace dsurf
