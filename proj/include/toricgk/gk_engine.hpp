// Tensor data of an anti-diagonal toric generalized Kahler structure at one
// interior point, in admissible coordinates (theta_1..theta_n, mu_1..mu_n).
//
// Matrix conventions (fixed for the whole library):
//
//   * Endomorphisms of TM (J_plus, J_minus, J_zero) are stored as ordinary
//     left-action matrices on column vectors in the ordered basis
//     (d/dtheta, d/dmu): column a holds the image of the a-th basis vector.
//     Composition RS is the matrix product R * S.
//   * 2-forms and symmetric 2-tensors (g, b, omega, b1) are stored by their
//     components T(a, b) = T(e_a, e_b).
//   * Bivectors (beta1) are stored by their components P(a, b) = P(dx^a, dx^b)
//     in the dual basis (dtheta, dmu).
//   * The map TM -> T*M of a 2-tensor is X -> T(X, .), whose left-action
//     matrix is the transpose of the component matrix; likewise for the map
//     T*M -> TM of a bivector. See as_map().
//
// Block forms that result, with phi = phi_s + C:
//
//   J_plus  = [[0, phi^T], [-phi^-T, 0]]     J_minus = [[0, phi], [-phi^-1, 0]]
//   J_zero  = [[0, phi_s], [-phi_s^-1, 0]]
//   g       = diag((phi^-1)_s, phi_s)         b     = diag((phi^-1)_a, phi_a)
//   omega   = [[0, -I], [I, 0]]               b1    = diag((phi^-1)_a, 0)
//   beta1   = [[0, -phi_a phi_s^-1], [-phi_s^-1 phi_a, 0]]
//
// Component matrices coincide with the block forms usually printed in the
// literature; the operator matrices are their transposes, because those
// printed forms compose maps in reverse order. printed_form() converts.

#ifndef TORICGK_GK_ENGINE_HPP
#define TORICGK_GK_ENGINE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/polytope.hpp"
#include "toricgk/rational.hpp"

namespace toricgk {

/// A constant anti-symmetric n x n matrix with exact rational entries.
class AntiSymMatrix
{
public:
    explicit AntiSymMatrix(RatMatrix entries);

    static AntiSymMatrix zero(int n);
    /// n = 2 matrix [[0, c], [-c, 0]].
    static AntiSymMatrix planar(const Rational& c);

    int dim() const { return static_cast<int>(exact_.rows()); }
    const RatMatrix& exact() const { return exact_; }
    const Eigen::MatrixXd& numeric() const { return numeric_; }
    int rank() const { return rank_; }
    bool is_zero() const { return rank_ == 0; }

    friend bool operator==(const AntiSymMatrix& a, const AntiSymMatrix& b) { return a.exact_ == b.exact_; }

private:
    RatMatrix exact_;
    Eigen::MatrixXd numeric_;
    int rank_ = 0;
};

struct GKFrame
{
    Eigen::VectorXd point;
    Eigen::MatrixXd phi_s;
    AntiSymMatrix C = AntiSymMatrix::zero(1);
    Eigen::MatrixXd phi;
    Eigen::MatrixXd F;  // connection matrix; zero in the anti-diagonal case
    Eigen::MatrixXd J_plus;
    Eigen::MatrixXd J_minus;
    Eigen::MatrixXd J_zero;
    Eigen::MatrixXd g;
    Eigen::MatrixXd b;
    Eigen::MatrixXd omega;
    Eigen::MatrixXd beta1;
    Eigen::MatrixXd b1;
    Eigen::MatrixXcd beta_hol;  // coefficient matrix K of beta = sum K_jk Z_j ^ Z_k

    int dim() const { return static_cast<int>(phi_s.rows()); }
};

/// Raised when frame inputs violate a precondition (shape, symmetry, definiteness).
class FrameError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Build every tensor of the frame from the Hessian phi_s (symmetric
 * positive-definite) and the constant matrix C.
 */
GKFrame assemble_frame(const Eigen::MatrixXd& phi_s, const AntiSymMatrix& C, const Eigen::VectorXd& point);

/// Every stored matrix equal entry for entry (no tolerance).
bool bitwise_equal(const GKFrame& a, const GKFrame& b);

/// Left-action matrix of the map induced by a 2-tensor or bivector.
inline Eigen::MatrixXd as_map(const Eigen::MatrixXd& components) { return components.transpose(); }

/// The block form in the reverse-composition notation (transpose of an operator matrix).
inline Eigen::MatrixXd printed_form(const Eigen::MatrixXd& op) { return op.transpose(); }

struct IdentityCheck
{
    std::string name;
    double residual = 0.0;   // max-abs entry of lhs - rhs
    double threshold = 0.0;  // tol * max(1, operand scale)
    bool pass = false;
};

struct IdentityReport
{
    std::vector<IdentityCheck> checks;
    bool pass = true;

    const IdentityCheck* find(const std::string& name) const;
    std::vector<std::string> failures() const;
};

/**
 * The operand scale of an identity is the largest, over its terms, of the
 * product of the max-abs entries of the factors in that term.
 *
 * Checks, each against tol times max(1, operand scale):
 *   J_plus_squared, J_minus_squared, J_zero_squared      J^2 = -I
 *   metric_from_omega        g = -1/2 omega (J+ + J-)
 *   b_from_omega             b = -1/2 omega (J+ - J-)
 *   J_minus_symplectic_adjoint   J- = -omega^-1 J+^* omega
 *   beta1_J0_commutation     beta1 J0^* = J0 beta1
 *   b_transform_operator     -1/2 (J+ + J-) = -J0 + beta1 b1
 *   b_transform_forms        -1/2 (w+ - w-) = b1 J0 - b1 beta1 b1 + J0^* b1
 *   beta1_two_routes         beta1 = (J+ - J-)(J+ + J-)^-1 omega^-1
 *   beta1_mu_mu_block_zero   beta1(dmu_j, dmu_k) = 0 (exact)
 * In b_transform_forms, w+- = g J+- with g rebuilt from omega and J+-, so a
 * corrupted g field is reported by metric_from_omega alone.
 */
IdentityReport verify_identities(const GKFrame& frame, double tol = 1e-10);

struct TamenessResult
{
    bool pass = false;
    double min_eig_phi_s = 0.0;
    double min_eig_tamed = 0.0;  // of phi_s + 1/4 F phi_s^-1 F
};

/// F is the anti-symmetric connection matrix; FrameError otherwise.
TamenessResult tameness_check(const Eigen::MatrixXd& phi_s, const Eigen::MatrixXd& F);

/**
 * Components of the metric for a general admissible connection with
 * constant matrix F: [[(phi^-1)_s, phi^-1 F / 2], [-F phi^-T / 2, phi_s]].
 */
Eigen::MatrixXd general_metric(const Eigen::MatrixXd& phi_s, const AntiSymMatrix& C, const Eigen::MatrixXd& F);

/// n - rank(C), rank taken exactly.
int interior_type(const AntiSymMatrix& C);

struct FaceType
{
    int ambient = 0;       // n - r_F
    int submanifold = 0;   // n - k - r_F
    int restricted_rank = 0;  // r_F = rank(B^T C B)
};

FaceType face_type(const DelzantPolytope& p, const FaceData& face, const AntiSymMatrix& C);

struct HolomorphicPoisson
{
    /// K with beta = sum_{j,k} K_jk Z_j ^ Z_k, where Z_j = d/dtheta_j + i d/du_j is the
    /// (1,0)-frame of J_zero and u = grad tau; K = C / 8.
    Eigen::MatrixXcd coefficients;
    /// Components of -1/4 (J0 beta1 + i beta1) in the (theta, mu) frame.
    Eigen::MatrixXcd components;
    /// max-abs difference between `components` and K expanded in the Z frame.
    double frame_residual = 0.0;
    bool agree = false;
};

HolomorphicPoisson holomorphic_poisson(const GKFrame& frame);

/// The 2-forms Q = beta1^-1 and b' = -1/2 Q (J+ + J-), by components.
struct Beta1Inverse
{
    Eigen::MatrixXd Q;
    Eigen::MatrixXd b_prime;
};

/// DomainError when beta1 is singular (C singular).
Beta1Inverse beta1_inverse(const GKFrame& frame);

/// Singular values above max-sigma * rel_tol count.
int numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-9);

struct MatrixFactsReport
{
    std::vector<IdentityCheck> checks;
    bool a_sym_invertible = false;
    bool b_sym_invertible = false;
    bool pass = true;
};

/**
 * For invertible A with inverse B:
 *   A_s B_s + A_a B_a = B_s A_s + B_a A_a = I,  A_s B_a + A_a B_s = B_s A_a + B_a A_s = 0,
 *   A B_s A^T = A_s,  A B_a A^T = -A_a,  B^T (B_s)^-1 B = (A_s)^-1 when A_s is invertible,
 *   A_s invertible iff B_s invertible, and A_s > 0 implies B_s > 0.
 * FrameError for singular A.
 */
MatrixFactsReport matrix_facts_suite(const Eigen::MatrixXd& A, double tol = 1e-12);

Eigen::MatrixXd sym_part(const Eigen::MatrixXd& m);
Eigen::MatrixXd anti_part(const Eigen::MatrixXd& m);
double max_abs(const Eigen::MatrixXd& m);

}  // namespace toricgk

#endif
