#include "toricgk/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace toricgk {

using Eigen::MatrixXd;

std::string to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::converges:
        return "converges";
    case Verdict::diverges:
        return "diverges";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

namespace {

MatrixXd spd_inverse(const MatrixXd& m)
{
    Eigen::LLT<MatrixXd> llt(m);
    if (llt.info() != Eigen::Success)
        throw DomainError("matrix is not positive-definite");
    return llt.solve(MatrixXd::Identity(m.rows(), m.cols()));
}

MatrixXd general_inverse(const MatrixXd& m)
{
    Eigen::FullPivLU<MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw DomainError("matrix is singular");
    return lu.inverse();
}

}  // namespace

namespace quantities {

Quantity sym_difference()
{
    return {"phi_s_minus_psi_s",
            [](const MatrixXd& phi_s, const MatrixXd&, const MatrixXd& psi) { return MatrixXd(phi_s - sym_part(psi)); }};
}

Quantity inverse_sandwich()
{
    return {"psi_phi_inv_psiT_minus_psiT", [](const MatrixXd& phi_s, const MatrixXd& C, const MatrixXd& psi) {
                // Evaluated as (psi - phi) phi^-1 psi^T to avoid cancelling two large terms.
                const MatrixXd phi_inv = general_inverse(phi_s + C);
                return MatrixXd(((psi - phi_s) - C) * phi_inv * psi.transpose());
            }};
}

Quantity conjugate_sandwich()
{
    return {"phiT_phi_s_inv_phi_minus_psiT_psi_s_inv_psi",
            [](const MatrixXd& phi_s, const MatrixXd& C, const MatrixXd& psi) {
                const MatrixXd phi = phi_s + C;
                return MatrixXd(phi.transpose() * spd_inverse(phi_s) * phi -
                                psi.transpose() * spd_inverse(sym_part(psi)) * psi);
            }};
}

Quantity reference_sandwich()
{
    return {"psi_phi_s_inv_psi_minus_psi_psi_s_inv_psi",
            [](const MatrixXd& phi_s, const MatrixXd&, const MatrixXd& psi) {
                return MatrixXd(psi * spd_inverse(phi_s) * psi - psi * spd_inverse(sym_part(psi)) * psi);
            }};
}

Quantity c_sandwich()
{
    return {"minus_C_phi_s_inv_C", [](const MatrixXd& phi_s, const MatrixXd& C, const MatrixXd&) {
                return MatrixXd(-C * spd_inverse(phi_s) * C);
            }};
}

Quantity control_hessian()
{
    return {"phi_s", [](const MatrixXd& phi_s, const MatrixXd&, const MatrixXd&) { return phi_s; }};
}

std::vector<Quantity> standard()
{
    return {sym_difference(), inverse_sandwich(), conjugate_sandwich(), reference_sandwich(), c_sandwich()};
}

}  // namespace quantities

namespace {

/// Worst ratio d[i+1] / d[i] over the last 4 pairs; entries <= floor[i] count as zero.
double worst_ratio(const std::vector<double>& d, const std::vector<double>& floor, double* best = nullptr)
{
    const std::size_t k = d.size();
    double worst = 0.0;
    double least = std::numeric_limits<double>::infinity();
    for (std::size_t i = k - 5; i + 1 < k; ++i)
    {
        double r;
        if (d[i + 1] <= floor[i + 1])
            r = 0.0;
        else if (d[i] <= floor[i])
            r = std::numeric_limits<double>::infinity();
        else
            r = d[i + 1] / d[i];
        worst = std::max(worst, r);
        least = std::min(least, r);
    }
    if (best)
        *best = least;
    return worst;
}

}  // namespace

void classify(BoundaryProbe& probe)
{
    const auto& v = probe.values;
    const auto& t = probe.steps;
    probe.rate = probe.divided_rate = std::numeric_limits<double>::quiet_NaN();
    for (const auto& m : v)
        if (!m.allFinite())
        {
            probe.verdict = Verdict::diverges;
            probe.note = "non-finite value";
            return;
        }
    if (v.size() < 7)
    {
        probe.verdict = Verdict::inconclusive;
        probe.note = "at least 7 steps are needed";
        return;
    }

    double scale = 1.0;
    for (const auto& m : v)
        scale = std::max(scale, max_abs(m));
    const double value_floor = 1e-12 * scale;

    std::vector<double> dv, dv_floor;
    std::vector<MatrixXd> dd;
    for (std::size_t m = 0; m + 1 < v.size(); ++m)
    {
        const MatrixXd diff = v[m + 1] - v[m];
        dv.push_back(max_abs(diff));
        dv_floor.push_back(value_floor);
        dd.push_back(diff / (t[m] - t[m + 1]));
    }
    std::vector<double> ddv, ddv_floor;
    for (std::size_t m = 0; m + 1 < dd.size(); ++m)
    {
        ddv.push_back(max_abs(dd[m + 1] - dd[m]));
        // What value-level noise of size value_floor can produce in a difference of divided differences.
        ddv_floor.push_back(4.0 * value_floor / (t[m + 1] - t[m + 2]));
    }

    double least = 0.0;
    probe.rate = worst_ratio(dv, dv_floor, &least);
    probe.divided_rate = worst_ratio(ddv, ddv_floor);
    probe.last_difference = dv.back();

    if (probe.rate <= kConvergenceRatio && probe.divided_rate <= kConvergenceRatio)
        probe.verdict = Verdict::converges;
    else if (least >= 1.0)
    {
        probe.verdict = Verdict::diverges;
        probe.note = "successive differences do not shrink";
    }
    else
    {
        probe.verdict = Verdict::inconclusive;
        probe.note = "differences shrink too slowly or irregularly";
    }
}

BoundaryProbe probe_quantity(const DelzantPolytope& p, const SymplecticPotential& tau, const AntiSymMatrix& C,
                             const FaceData& face, const Quantity& q, int depth, std::optional<double> t0,
                             const SymplecticPotential* reference)
{
    if (C.dim() != p.dim() || tau.dim() != p.dim())
        throw std::invalid_argument("dimension mismatch between polytope, potential and C");
    const SymplecticPotential guillemin = guillemin_potential(p);
    const SymplecticPotential& ref = reference ? *reference : guillemin;

    BoundaryProbe probe;
    probe.face = face;
    probe.quantity_name = q.name;
    probe.sequence = face_approach_sequence(p, face, depth, t0);
    probe.steps = face_approach_steps(p, face, depth, t0);

    bool undefined = false;
    for (const auto& x : probe.sequence)
    {
        try
        {
            probe.values.push_back(q.eval(tau.hessian(x), C.numeric(), ref.hessian(x)));
        }
        catch (const DomainError& e)
        {
            const Eigen::Index n = p.dim();
            probe.values.push_back(MatrixXd::Constant(n, n, std::numeric_limits<double>::infinity()));
            if (!undefined)
                probe.note = std::string("undefined at a step: ") + e.what();
            undefined = true;
        }
    }
    if (undefined)
    {
        probe.verdict = Verdict::diverges;
        return probe;
    }
    classify(probe);
    return probe;
}

double det_identity_plus(const MatrixXd& psi, const MatrixXd& C)
{
    const Eigen::Index n = psi.rows();
    return (MatrixXd::Identity(n, n) + spd_inverse(psi) * C).determinant();
}

DetBoundReport det_lower_bound_check(const SymplecticPotential& tau, const AntiSymMatrix& C,
                                     const std::vector<Eigen::VectorXd>& samples)
{
    DetBoundReport r;
    r.min_value = std::numeric_limits<double>::infinity();
    for (const auto& x : samples)
    {
        const double d = det_identity_plus(tau.hessian(x), C.numeric());
        r.values.push_back(d);
        r.min_value = std::min(r.min_value, d);
        if (!(d >= 1.0 - kDetBoundSlack))
            r.pass = false;
    }
    if (samples.empty())
        r.min_value = std::numeric_limits<double>::quiet_NaN();
    return r;
}

CompactificationReport compactification_report(const DelzantPolytope& p, const SymplecticPotential& tau,
                                               const AntiSymMatrix& C, int depth, std::optional<double> t0)
{
    CompactificationReport r;
    r.depth = depth;

    std::vector<Eigen::VectorXd> samples = sample_interior(p, 64, 0);
    samples.push_back(to_double(p.center()));
    const ConvexityReport conv = check_strict_convexity(tau, samples, 0.0);
    r.convexity_pass = conv.pass;
    r.convexity_min_eigenvalue = *std::min_element(conv.min_eigenvalues.begin(), conv.min_eigenvalues.end());
    if (!conv.pass)
        return r;

    const std::vector<Quantity> qs = quantities::standard();
    const Quantity control = quantities::control_hessian();
    bool all_converge = true;
    bool control_all_diverge = true;
    for (const FaceData& face : enumerate_faces(p))
    {
        if (face.codim == 0)
            continue;
        for (const Quantity& q : qs)
        {
            r.probes.push_back(probe_quantity(p, tau, C, face, q, depth, t0));
            all_converge = all_converge && r.probes.back().verdict == Verdict::converges;
        }
        r.control_probes.push_back(probe_quantity(p, tau, C, face, control, depth, t0));
        control_all_diverge = control_all_diverge && r.control_probes.back().verdict == Verdict::diverges;
    }
    r.pass = all_converge && !r.probes.empty();
    r.control_flagged = control_all_diverge && !r.control_probes.empty();
    return r;
}

}  // namespace toricgk
