// Poisson brackets of the U(n+1-k) moment components on the affine chart
// w in C^n of CP^n, for the holomorphic Poisson structure
//   beta = -1/2 sum_{j,l<k} c_lj w_j w_l d/dw_j ^ d/dw_l
// and beta1 = -4 Im(beta). Derivatives are analytic.

#ifndef TORICGK_CPN_BRACKET_HPP
#define TORICGK_CPN_BRACKET_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/rational.hpp"

namespace toricgk {

/// A real function on C^n through its value and its d/dw_a derivatives.
struct ChartFunction
{
    std::string name;
    double value = 0.0;
    Eigen::VectorXcd dw;  // d f / d w_a
};

/// mu^r_lj and mu^i_lj for l, j >= k (1-based), real parts for l <= j, imaginary for l < j.
std::vector<ChartFunction> moment_components(int n, int k, const Eigen::VectorXcd& w);

/// Re(w_1), a function that is not of the form Casimir / (1 + |w|^2).
ChartFunction non_casimir_control(int n, const Eigen::VectorXcd& w);

/// Coefficients B_ab of beta = sum B_ab d/dw_a (x) d/dw_b, an n x n anti-symmetric complex matrix.
Eigen::MatrixXcd beta_tensor(int n, int k, const Eigen::MatrixXd& c, const Eigen::VectorXcd& w);

/// beta1(df, dg) = -4 Im sum_ab B_ab (df/dw_a)(dg/dw_b).
double beta1_bracket(const Eigen::MatrixXcd& B, const ChartFunction& f, const ChartFunction& g);

struct CpnBracketReport
{
    int n = 0;
    int k = 0;
    int samples = 0;
    int components = 0;
    double max_bracket = 0.0;
    double max_control_bracket = 0.0;  // only when the control was requested
    bool pass = false;                  // max_bracket <= kBracketTolerance
};

inline constexpr double kBracketTolerance = 1e-12;

/**
 * c is the (k-1) x (k-1) anti-symmetric coefficient matrix; for k = 1 it is
 * empty. std::invalid_argument unless 0 < k < n.
 */
CpnBracketReport strong_hamiltonian_check_cpn(int n, int k, const RatMatrix& c,
                                              const std::vector<Eigen::VectorXcd>& samples,
                                              bool include_control = false);

/// Seeded samples with independent standard normal real and imaginary parts.
std::vector<Eigen::VectorXcd> sample_affine_points(int n, int count, std::uint64_t seed);

}  // namespace toricgk

#endif
