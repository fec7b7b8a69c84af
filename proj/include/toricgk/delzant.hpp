// Linear-algebra side of the Delzant construction: the map sigma: R^d -> R^n
// (e_j -> u_j), its kernel, the induced map on bivectors, lifts of C along a
// vertex right inverse, and the standard data of the C^d model.

#ifndef TORICGK_DELZANT_HPP
#define TORICGK_DELZANT_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/gk_engine.hpp"
#include "toricgk/polytope.hpp"
#include "toricgk/rational.hpp"

namespace toricgk {

struct ReductionData
{
    DelzantPolytope polytope;
    IntMatrix sigma;          // n x d, column j is u_j
    IntMatrix kernel_basis;   // d x (d - n), saturated
    RatMatrix right_inverse;  // d x n, sigma * right_inverse = I
    int chosen_vertex = 0;    // index into polytope.vertices()
    std::vector<int> vertex_facets;
};

/**
 * PolytopeError if the polytope fails validate_delzant(); std::out_of_range
 * for a bad vertex index. The default vertex is the first one, i.e. the
 * lexicographically lowest active facet set.
 *
 * For the active set S of the vertex, U_S is unimodular and the kernel basis
 * has one column per j outside S: e_j - sum_{i in S} (U_S^-1 u_j)_i e_i.
 */
ReductionData build_reduction(const DelzantPolytope& p, std::optional<int> vertex = std::nullopt);

/// sigma C0 sigma^T.
AntiSymMatrix wedge_pushforward(const ReductionData& r, const AntiSymMatrix& C0);

/// right_inverse C right_inverse^T; pushes forward to C exactly.
AntiSymMatrix lift_C(const ReductionData& r, const AntiSymMatrix& C);

struct CdStandardData
{
    Eigen::MatrixXd psi0;  // diag(1 / (2 (nu_j - lambda_j)))
    double tau0 = 0.0;     // 1/2 sum (nu_j - lambda_j) ln(nu_j - lambda_j)
};

/// Standard data at nu in R^d, lambda the facet offsets. DomainError unless nu_j > lambda_j.
CdStandardData cd_standard_data(const DelzantPolytope& p, const Eigen::VectorXd& nu);

struct ReducedFixtureReport
{
    AntiSymMatrix pushed = AntiSymMatrix::zero(1);  // sigma-wedge(C0)
    bool pushforward_matches = false;                // pushed == C exactly
    int interior_type_pushed = 0;
    int interior_type_direct = 0;
    bool frames_identical = true;    // bitwise, at every sample
    bool poisson_identical = true;   // holomorphic Poisson coefficients, bitwise
    bool kahler = true;              // b = 0 and beta1 = 0 at every sample
    bool pass = false;
};

/**
 * Compare, at each sample of the polytope interior, the frame built from the
 * Guillemin Hessian and sigma-wedge(C0) with the frame built from C.
 */
ReducedFixtureReport reduced_structure_fixture(const ReductionData& r, const AntiSymMatrix& C0, const AntiSymMatrix& C,
                                               const std::vector<Eigen::VectorXd>& samples);

/// CP^2 lift c1 e1^e2 + c2 e1^e3 + c3 e2^e3.
AntiSymMatrix cp2_lift(const Rational& c1, const Rational& c2, const Rational& c3);

}  // namespace toricgk

#endif
