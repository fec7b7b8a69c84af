#include "toricgk/delzant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "toricgk/potential.hpp"

namespace toricgk {

ReductionData build_reduction(const DelzantPolytope& p, std::optional<int> vertex)
{
    const DelzantReport report = validate_delzant(p);
    if (!report.pass)
        throw PolytopeError("polytope is not Delzant");

    const int n = p.dim();
    const int d = p.num_facets();
    const int v = vertex.value_or(0);
    if (v < 0 || v >= static_cast<int>(p.vertices().size()))
        throw std::out_of_range("vertex index " + std::to_string(v) + " is out of range");

    ReductionData r{p, p.normal_matrix(), IntMatrix::Zero(d, d - n), RatMatrix::Zero(d, n), v,
                    p.vertices()[static_cast<std::size_t>(v)].active};
    const std::vector<int>& S = r.vertex_facets;

    RatMatrix U(n, n);
    for (int i = 0; i < n; ++i)
        for (int row = 0; row < n; ++row)
            U(row, i) = Rational(r.sigma(row, S[static_cast<std::size_t>(i)]));
    const std::optional<RatMatrix> U_inv = inverse(U);
    if (!U_inv)
        throw std::logic_error("vertex normals are not a basis");

    for (int i = 0; i < n; ++i)
        for (int col = 0; col < n; ++col)
            r.right_inverse(S[static_cast<std::size_t>(i)], col) = (*U_inv)(i, col);

    int k = 0;
    for (int j = 0; j < d; ++j)
    {
        if (std::find(S.begin(), S.end(), j) != S.end())
            continue;
        const RatVector coeffs = (*U_inv) * to_rational(IntVector(r.sigma.col(j)));
        r.kernel_basis(j, k) = 1;
        for (int i = 0; i < n; ++i)
        {
            const Rational& c = coeffs(i);
            if (denominator(c) != 1)
                throw std::logic_error("vertex normals are not a lattice basis");
            r.kernel_basis(S[static_cast<std::size_t>(i)], k) = -numerator(c).convert_to<std::int64_t>();
        }
        ++k;
    }
    return r;
}

AntiSymMatrix wedge_pushforward(const ReductionData& r, const AntiSymMatrix& C0)
{
    if (C0.dim() != r.sigma.cols())
        throw std::invalid_argument("C0 must be " + std::to_string(r.sigma.cols()) + " x " +
                                    std::to_string(r.sigma.cols()));
    const RatMatrix s = to_rational(r.sigma);
    return AntiSymMatrix(s * C0.exact() * s.transpose());
}

AntiSymMatrix lift_C(const ReductionData& r, const AntiSymMatrix& C)
{
    if (C.dim() != r.sigma.rows())
        throw std::invalid_argument("C must be " + std::to_string(r.sigma.rows()) + " x " +
                                    std::to_string(r.sigma.rows()));
    AntiSymMatrix C0(r.right_inverse * C.exact() * r.right_inverse.transpose());
    if (!(wedge_pushforward(r, C0) == C))
        throw std::logic_error("lift does not push forward to C");
    return C0;
}

CdStandardData cd_standard_data(const DelzantPolytope& p, const Eigen::VectorXd& nu)
{
    const int d = p.num_facets();
    if (nu.size() != d)
        throw std::invalid_argument("nu must have one entry per facet");
    std::vector<Rational> offsets;
    for (const auto& f : p.facets())
        offsets.push_back(f.offset);

    CdStandardData out;
    out.psi0 = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j)
    {
        const double s = nu(j) - to_double(offsets[static_cast<std::size_t>(j)]);
        if (!(s > 0.0))
            throw DomainError("nu is not inside the orthant at coordinate " + std::to_string(j));
        out.psi0(j, j) = 1.0 / (2.0 * s);
        out.tau0 += 0.5 * s * std::log(s);
    }
    const SymplecticPotential orthant = orthant_potential(offsets);
    if (max_abs(orthant.hessian(nu) - out.psi0) > 1e-12 * std::max(1.0, max_abs(out.psi0)))
        throw std::logic_error("standard data disagree with the orthant potential Hessian");
    return out;
}

ReducedFixtureReport reduced_structure_fixture(const ReductionData& r, const AntiSymMatrix& C0, const AntiSymMatrix& C,
                                               const std::vector<Eigen::VectorXd>& samples)
{
    ReducedFixtureReport rep;
    rep.pushed = wedge_pushforward(r, C0);
    rep.pushforward_matches = rep.pushed == C;
    rep.interior_type_pushed = interior_type(rep.pushed);
    rep.interior_type_direct = interior_type(C);

    const SymplecticPotential tau = guillemin_potential(r.polytope);
    for (const auto& x : samples)
    {
        const Eigen::MatrixXd phi_s = tau.hessian(x);
        const GKFrame via_lift = assemble_frame(phi_s, rep.pushed, x);
        const GKFrame direct = assemble_frame(phi_s, C, x);
        rep.frames_identical = rep.frames_identical && bitwise_equal(via_lift, direct);
        rep.poisson_identical =
            rep.poisson_identical && holomorphic_poisson(via_lift).coefficients == holomorphic_poisson(direct).coefficients;
        rep.kahler = rep.kahler && via_lift.b.isZero(0.0) && via_lift.beta1.isZero(0.0);
    }
    rep.pass = rep.pushforward_matches && rep.interior_type_pushed == rep.interior_type_direct &&
               rep.frames_identical && rep.poisson_identical;
    return rep;
}

AntiSymMatrix cp2_lift(const Rational& c1, const Rational& c2, const Rational& c3)
{
    RatMatrix m = RatMatrix::Zero(3, 3);
    m(0, 1) = c1;
    m(0, 2) = c2;
    m(1, 2) = c3;
    m(1, 0) = -c1;
    m(2, 0) = -c2;
    m(2, 1) = -c3;
    return AntiSymMatrix(std::move(m));
}

}  // namespace toricgk
