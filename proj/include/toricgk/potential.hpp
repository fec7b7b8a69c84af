// Symplectic potentials: the Guillemin term 1/2 sum l_j ln l_j (l_j the facet
// slack) plus a polynomial correction with rational coefficients.

#ifndef TORICGK_POTENTIAL_HPP
#define TORICGK_POTENTIAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/polytope.hpp"
#include "toricgk/rational.hpp"

namespace toricgk {

/// Raised when a point is not strictly inside the domain of a potential.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct Monomial
{
    Rational coeff;
    std::vector<int> exponents;
};

/// Sparse polynomial in x_1..x_n with rational coefficients.
class Polynomial
{
public:
    Polynomial() = default;
    Polynomial(int dim, std::vector<Monomial> terms);

    int dim() const { return dim_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    template <typename Real>
    Real evaluate(const std::vector<Real>& x) const;

    double evaluate(const Eigen::VectorXd& x) const;
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
    /// Exactly symmetric: the upper triangle is computed and mirrored.
    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const;

private:
    int dim_ = 0;
    std::vector<Monomial> terms_;
};

class SymplecticPotential
{
public:
    /**
     * The half-spaces the Guillemin term is built on. Usually the facets of
     * a DelzantPolytope, but any list works (the C^d orthant has no
     * bounded polytope).
     */
    SymplecticPotential(int dim, std::vector<Facet> facets, Polynomial correction);

    int dim() const { return dim_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const Polynomial& correction() const { return correction_; }

    /// Facet slacks at x; DomainError unless every slack is positive.
    std::vector<double> slacks(const Eigen::VectorXd& x) const;

    double value(const Eigen::VectorXd& x) const;

    /**
     * The same value in another floating type (builtin or a multiprecision
     * number); used by high-precision finite-difference checks.
     */
    template <typename Real>
    Real value_as(const std::vector<Real>& x) const;

    /// 1/2 sum_j u_j u_j^T / l_j(x) + Hess(correction)(x).
    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const;

private:
    int dim_;
    std::vector<Facet> facets_;
    Polynomial correction_;
    std::vector<Eigen::VectorXd> normals_;
    std::vector<double> offsets_;
};

SymplecticPotential guillemin_potential(const DelzantPolytope& p);
SymplecticPotential with_correction(const DelzantPolytope& p, Polynomial correction);

/// The C^d potential 1/2 sum (nu_j - lambda_j) ln(nu_j - lambda_j).
SymplecticPotential orthant_potential(const std::vector<Rational>& offsets);

double eval_potential(const SymplecticPotential& tau, const Eigen::VectorXd& x);
Eigen::MatrixXd hessian(const SymplecticPotential& tau, const Eigen::VectorXd& x);

struct ConvexityReport
{
    std::vector<double> min_eigenvalues;
    bool pass = true;
    bool vacuous = false;  // no samples were given
};

ConvexityReport check_strict_convexity(const SymplecticPotential& tau, const std::vector<Eigen::VectorXd>& samples,
                                       double tol);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Real>
Real from_rational(const Rational& q)
{
    if constexpr (std::is_floating_point_v<Real>)
        return q.convert_to<Real>();
    else
        return Real(numerator(q).str()) / Real(denominator(q).str());
}

}  // namespace detail

template <typename Real>
Real Polynomial::evaluate(const std::vector<Real>& x) const
{
    Real total = 0;
    for (const auto& t : terms_)
    {
        Real term = detail::from_rational<Real>(t.coeff);
        for (int i = 0; i < dim_; ++i)
            for (int e = 0; e < t.exponents[static_cast<std::size_t>(i)]; ++e)
                term *= x[static_cast<std::size_t>(i)];
        total += term;
    }
    return total;
}

template <typename Real>
Real SymplecticPotential::value_as(const std::vector<Real>& x) const
{
    using std::log;
    Real total = 0;
    for (const auto& f : facets_)
    {
        Real l = -detail::from_rational<Real>(f.offset);
        for (int i = 0; i < dim_; ++i)
            l += Real(static_cast<double>(f.normal(i))) * x[static_cast<std::size_t>(i)];
        if (!(l > 0))
            throw DomainError("potential evaluated outside the open polytope");
        total += l * log(l);
    }
    return total / 2 + correction_.evaluate(x);
}

}  // namespace toricgk

#endif
