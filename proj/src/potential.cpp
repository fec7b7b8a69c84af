#include "toricgk/potential.hpp"

#include <algorithm>
#include <limits>

namespace toricgk {

Polynomial::Polynomial(int dim, std::vector<Monomial> terms) : dim_(dim)
{
    for (auto& t : terms)
    {
        if (static_cast<int>(t.exponents.size()) != dim)
            throw std::invalid_argument("monomial exponent vector has wrong length");
        if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e < 0; }))
            throw std::invalid_argument("monomial exponents must be non-negative");
        if (t.coeff != 0)
            terms_.push_back(std::move(t));
    }
}

double Polynomial::evaluate(const Eigen::VectorXd& x) const
{
    std::vector<double> xs(x.data(), x.data() + x.size());
    return evaluate<double>(xs);
}

namespace {

/// d^k/dx^k x^e evaluated at x, for k in {0,1,2}.
double power_derivative(double x, int e, int k)
{
    if (k > e)
        return 0.0;
    double factor = 1.0;
    for (int i = 0; i < k; ++i)
        factor *= e - i;
    return factor * std::pow(x, e - k);
}

}  // namespace

Eigen::VectorXd Polynomial::gradient(const Eigen::VectorXd& x) const
{
    Eigen::VectorXd g = Eigen::VectorXd::Zero(dim_);
    for (const auto& t : terms_)
    {
        const double c = to_double(t.coeff);
        for (int a = 0; a < dim_; ++a)
        {
            double term = c;
            for (int i = 0; i < dim_; ++i)
                term *= power_derivative(x(i), t.exponents[static_cast<std::size_t>(i)], i == a ? 1 : 0);
            g(a) += term;
        }
    }
    return g;
}

Eigen::MatrixXd Polynomial::hessian(const Eigen::VectorXd& x) const
{
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim_, dim_);
    for (const auto& t : terms_)
    {
        const double c = to_double(t.coeff);
        for (int a = 0; a < dim_; ++a)
            for (int b = a; b < dim_; ++b)
            {
                double term = c;
                for (int i = 0; i < dim_; ++i)
                {
                    int order = (i == a) + (i == b);
                    term *= power_derivative(x(i), t.exponents[static_cast<std::size_t>(i)], order);
                }
                h(a, b) += term;
            }
    }
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < a; ++b)
            h(a, b) = h(b, a);
    return h;
}

SymplecticPotential::SymplecticPotential(int dim, std::vector<Facet> facets, Polynomial correction)
    : dim_(dim), facets_(std::move(facets)), correction_(std::move(correction))
{
    if (correction_.is_zero())
        correction_ = Polynomial(dim_, {});
    if (correction_.dim() != dim_)
        throw std::invalid_argument("correction polynomial dimension mismatch");
    for (const auto& f : facets_)
    {
        if (f.normal.size() != dim_)
            throw std::invalid_argument("facet normal dimension mismatch");
        normals_.push_back(f.normal.cast<double>());
        offsets_.push_back(to_double(f.offset));
    }
}

std::vector<double> SymplecticPotential::slacks(const Eigen::VectorXd& x) const
{
    if (x.size() != dim_)
        throw std::invalid_argument("point dimension mismatch");
    std::vector<double> out(facets_.size());
    for (std::size_t j = 0; j < facets_.size(); ++j)
    {
        out[j] = normals_[j].dot(x) - offsets_[j];
        if (!(out[j] > 0.0))
            throw DomainError("point is not strictly inside facet " + std::to_string(j));
    }
    return out;
}

double SymplecticPotential::value(const Eigen::VectorXd& x) const
{
    double total = 0.0;
    for (double l : slacks(x))
        total += l * std::log(l);
    return 0.5 * total + correction_.evaluate(x);
}

Eigen::MatrixXd SymplecticPotential::hessian(const Eigen::VectorXd& x) const
{
    const std::vector<double> l = slacks(x);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim_, dim_);
    for (std::size_t j = 0; j < l.size(); ++j)
    {
        const Eigen::VectorXd& u = normals_[j];
        const double w = 0.5 / l[j];
        for (int a = 0; a < dim_; ++a)
            for (int b = a; b < dim_; ++b)
                h(a, b) += w * u(a) * u(b);
    }
    Eigen::MatrixXd hc = correction_.hessian(x);
    for (int a = 0; a < dim_; ++a)
        for (int b = a; b < dim_; ++b)
        {
            h(a, b) += hc(a, b);
            h(b, a) = h(a, b);
        }
    return h;
}

SymplecticPotential guillemin_potential(const DelzantPolytope& p)
{
    return SymplecticPotential(p.dim(), p.facets(), Polynomial(p.dim(), {}));
}

SymplecticPotential with_correction(const DelzantPolytope& p, Polynomial correction)
{
    return SymplecticPotential(p.dim(), p.facets(), std::move(correction));
}

SymplecticPotential orthant_potential(const std::vector<Rational>& offsets)
{
    const int d = static_cast<int>(offsets.size());
    std::vector<Facet> facets;
    for (int j = 0; j < d; ++j)
    {
        IntVector u = IntVector::Zero(d);
        u(j) = 1;
        facets.push_back({u, offsets[static_cast<std::size_t>(j)]});
    }
    return SymplecticPotential(d, std::move(facets), Polynomial(d, {}));
}

double eval_potential(const SymplecticPotential& tau, const Eigen::VectorXd& x)
{
    return tau.value(x);
}

Eigen::MatrixXd hessian(const SymplecticPotential& tau, const Eigen::VectorXd& x)
{
    return tau.hessian(x);
}

ConvexityReport check_strict_convexity(const SymplecticPotential& tau, const std::vector<Eigen::VectorXd>& samples,
                                       double tol)
{
    ConvexityReport report;
    report.vacuous = samples.empty();
    for (const auto& x : samples)
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tau.hessian(x), Eigen::EigenvaluesOnly);
        double lo = eig.eigenvalues().minCoeff();
        report.min_eigenvalues.push_back(lo);
        if (!(lo > tol))
            report.pass = false;
    }
    return report;
}

}  // namespace toricgk
