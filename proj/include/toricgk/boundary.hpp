// Numerical probes of boundary behaviour: evaluate matrix quantities along
// face_approach_sequence() and classify them by Cauchy decay. A "converges"
// verdict means the data are consistent with a smooth extension to the face;
// it is not a proof of smoothness.

#ifndef TORICGK_BOUNDARY_HPP
#define TORICGK_BOUNDARY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/gk_engine.hpp"
#include "toricgk/polytope.hpp"
#include "toricgk/potential.hpp"

namespace toricgk {

enum class Verdict
{
    converges,
    diverges,
    inconclusive
};

std::string to_string(Verdict v);

/// A matrix function of (phi_s, C, psi); psi is the reference Hessian.
struct Quantity
{
    std::string name;
    std::function<Eigen::MatrixXd(const Eigen::MatrixXd& phi_s, const Eigen::MatrixXd& C, const Eigen::MatrixXd& psi)>
        eval;
};

namespace quantities {

/// phi_s - psi_s
Quantity sym_difference();
/// psi phi^-1 psi^T - psi^T
Quantity inverse_sandwich();
/// phi^T phi_s^-1 phi - psi^T psi_s^-1 psi
Quantity conjugate_sandwich();
/// psi phi_s^-1 psi - psi psi_s^-1 psi
Quantity reference_sandwich();
/// -C phi_s^-1 C
Quantity c_sandwich();
/// phi_s itself; diverges at every face for Guillemin-type potentials.
Quantity control_hessian();

/// The quantities compactification_report() requires to converge.
std::vector<Quantity> standard();

}  // namespace quantities

struct BoundaryProbe
{
    FaceData face;
    std::vector<Eigen::VectorXd> sequence;
    std::vector<double> steps;
    std::string quantity_name;
    std::vector<Eigen::MatrixXd> values;
    Verdict verdict = Verdict::inconclusive;
    double rate = 0.0;          // worst ratio of successive value differences, last 4 steps
    double divided_rate = 0.0;  // same for the first divided differences
    double last_difference = 0.0;
    std::string note;
};

/// Largest acceptable contraction ratio for a "converges" verdict.
inline constexpr double kConvergenceRatio = 0.75;

/**
 * Classify a sampled sequence v_m at steps t_m. Differences below
 * 1e-12 * max(1, |v|) are treated as zero. Converges when the worst ratio
 * of successive differences over the last 4 steps is <= kConvergenceRatio
 * both for the values and for the divided differences
 * (v_{m+1} - v_m) / (t_m - t_{m+1}); diverges when the value differences
 * do not shrink over those steps or a value is not finite.
 */
void classify(BoundaryProbe& probe);

/**
 * Evaluate `q` along the approach sequence to `face`. phi_s is the Hessian
 * of `tau`; psi defaults to the Guillemin Hessian of `p`. A step at which
 * the quantity is undefined makes the verdict "diverges".
 */
BoundaryProbe probe_quantity(const DelzantPolytope& p, const SymplecticPotential& tau, const AntiSymMatrix& C,
                             const FaceData& face, const Quantity& q, int depth,
                             std::optional<double> t0 = std::nullopt,
                             const SymplecticPotential* reference = nullptr);

struct DetBoundReport
{
    std::vector<double> values;  // det(I + psi^-1 C) per sample
    double min_value = 0.0;
    bool pass = true;
};

/// Lower bound accepted by det_lower_bound_check().
inline constexpr double kDetBoundSlack = 1e-12;

/// det(I + psi^-1 C) for symmetric positive-definite psi.
double det_identity_plus(const Eigen::MatrixXd& psi, const Eigen::MatrixXd& C);

DetBoundReport det_lower_bound_check(const SymplecticPotential& tau, const AntiSymMatrix& C,
                                     const std::vector<Eigen::VectorXd>& samples);

struct CompactificationReport
{
    int depth = 0;
    bool convexity_pass = false;
    double convexity_min_eigenvalue = 0.0;
    std::vector<BoundaryProbe> probes;          // standard quantities, every proper face
    std::vector<BoundaryProbe> control_probes;  // control_hessian, every proper face
    bool control_flagged = false;               // control diverges at every face
    bool pass = false;                          // convexity and every standard probe converges
};

/**
 * Convexity precheck on seeded interior samples, then every standard
 * quantity and the control on every face of codimension >= 1.
 */
CompactificationReport compactification_report(const DelzantPolytope& p, const SymplecticPotential& tau,
                                               const AntiSymMatrix& C, int depth = 8,
                                               std::optional<double> t0 = std::nullopt);

}  // namespace toricgk

#endif
