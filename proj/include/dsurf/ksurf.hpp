#pragma once

#include <utility>
#include <vector>

#include "dsurf/elliptic.hpp"
#include "dsurf/family.hpp"
#include "dsurf/frames.hpp"
#include "dsurf/sine_gordon.hpp"
#include "dsurf/vec3.hpp"

namespace dsurf {

// Discrete K-surface F_{m,n} with phi = alpha m + beta n, psi = gamma m + delta n.
//   dn: cos alpha = dn gamma, sin alpha = k sn gamma, cos beta = -dn delta, sin beta = k sn delta
//   cn: cos alpha = cn gamma, sin alpha = sn gamma,   cos beta = -cn delta, sin beta = sn delta
struct KParams {
    EllipticModulus mod;
    Family family = Family::dn;
    double gamma_step = 0;
    double delta_step = 0;
    double alpha_step = 0;
    double beta_step = 0;
};

// Derives alpha and beta from gamma and delta.
KParams make_kparams(const EllipticModulus& mod, Family family, double gamma, double delta);

// Takes alpha and beta as given; the surface axioms then generally fail.
KParams make_kparams_raw(const EllipticModulus& mod, Family family, double gamma, double delta, double alpha,
                         double beta);

// Max deviation of (cos, sin) of alpha and beta from their required values.
double kparams_constraint_defect(const KParams& p);

struct KPoint {
    Vec3 F;
    Vec3 N;
};

KPoint k_point(const KParams& p, long m, long n);

// |F_{m+1,n} - F - N_{m+1,n} x N| and |F_{m,n+1} - F + N_{m,n+1} x N|.
struct KEdgeResiduals {
    double res_m = 0;
    double res_n = 0;
};

KEdgeResiduals k_edge_residuals(const KParams& p, long m, long n);

// Row-major samples: index (i, j) is (m0 + i, n0 + j).
struct KGrid {
    long m0 = 0, n0 = 0;
    long M = 0, N = 0;
    std::vector<Vec3> points;
    std::vector<Vec3> normals;

    std::size_t index(long i, long j) const { return static_cast<std::size_t>(i * N + j); }
    const Vec3& F(long i, long j) const { return points[index(i, j)]; }
    const Vec3& normal(long i, long j) const { return normals[index(i, j)]; }
};

// Validates the angle constraints; throws DomainError for M or N < 2 or a raw parameter set.
KGrid make_kgrid(const KParams& p, long m0, long n0, long M, long N);

// Same as make_kgrid without the constraint check.
KGrid make_kgrid_unchecked(const KParams& p, long m0, long n0, long M, long N);

struct KGridReport {
    double edge_m = 0;        // max res_m over the grid
    double edge_n = 0;        // max res_n
    double planarity = 0;     // max |triple product| of star edges at interior vertices
    double opposite_m = 0;    // max ||F_{m+1,n}-F_{m,n}| - |F_{m+1,n+1}-F_{m,n+1}||
    double opposite_n = 0;    // max ||F_{m,n+1}-F_{m,n}| - |F_{m+1,n+1}-F_{m+1,n}||
    double spread_A = 0;      // max over m of the spread of A_m across n
    double spread_B = 0;      // max over n of the spread of B_n across m
    double torsion_m = 0;     // max |<N, N_{m+1,n}> - cos nu1|
    double torsion_n = 0;     // max |<N, N_{m,n+1}> - cos nu2|
    double unit_normal = 0;   // max ||N| - 1|
    std::vector<double> A;    // A_m along the first column
    std::vector<double> B;    // B_n along the first row

    double max_residual() const;
};

KGridReport k_grid_report(const KParams& p, const KGrid& g);

// Torsion angles of the two lattice directions.
//   dn: (cos, sin) nu1 = (cn gamma, sn gamma), nu2 = (cn delta, sn delta)
//   cn: (cos, sin) nu1 = (dn gamma, k sn gamma), nu2 = (dn delta, k sn delta)
struct KTorsions {
    double cos_nu1 = 1, sin_nu1 = 0;
    double cos_nu2 = 1, sin_nu2 = 0;
};

KTorsions k_torsions(const KParams& p);

// tan(nu/2) = sin nu / (1 + cos nu); throws DomainError at cos nu = -1.
double tan_half(double sin_nu, double cos_nu);

// Discrete SG parameters Omega = gamma/(4K), P = delta/(4K) of the same family.
DiscreteParams k_sg_params(const KParams& p);

// Gauge-transformed compatibility matrices on one quad with corners
// A = w_{m+1,n+1}, B = w_{m,n}, C = w_{m+1,n}, D = w_{m,n+1}.
//   L^{+-}  = [[c1 e^{-i(C-B)/2}, +-s1], [-+s1, c1 e^{i(C-B)/2}]]
//   Lh^{+-} = [[c2, +-s2 e^{i(D+B)/2}], [-+s2 e^{-i(D+B)/2}, c2]]
// lhs = L_{m,n} Lh_{m+1,n}, rhs = Lh_{m,n} L_{m,n+1}; nu1 goes with sign_L, nu2 with sign_Lh.
struct CompatResult {
    Mat2 lhs;
    Mat2 rhs;
    double residual = 0;  // Frobenius norm of lhs - rhs
};

CompatResult compat_matrices(const HalfAngle& wA, const HalfAngle& wB, const HalfAngle& wC, const HalfAngle& wD,
                             double nu1, double nu2, Sign sign_L, Sign sign_Lh);

// -sin V - tan(nu1/2) tan(nu2/2) sin U with U = (A+B+C+D)/4, V = (A+B-C-D)/4.
double k_angle_identity(const HalfAngle& wA, const HalfAngle& wB, const HalfAngle& wC, const HalfAngle& wD,
                        double tan1, double tan2);

enum class KCase { c1a, c1b, c1c, c2a, c2b, c2c };

const char* to_string(KCase c);

// Lattice translation (dm, dn) that must leave F invariant.
using KShift = std::pair<long, long>;

struct KCaseSpec {
    KCase id = KCase::c1a;
    int order = 3;  // p of the dn cases, with k' = cos(pi/p)
    KParams params;
    std::vector<KShift> shifts;
};

// dn cases use k = sin(pi/p) (p >= 3); cn cases use cn_modulus.
KCaseSpec k_case(KCase id, int p = 3, double cn_modulus = 0.8);

struct KPeriodicityReport {
    KCase id = KCase::c1a;
    double max_defect = 0;
    double tolerance = 1e-9;
    bool ok = true;
};

// Max |F_{m+dm,n+dn} - F_{m,n}| over a window x window block starting at the origin.
KPeriodicityReport k_periodicity(const KCaseSpec& spec, long window = 12);

}  // namespace dsurf
