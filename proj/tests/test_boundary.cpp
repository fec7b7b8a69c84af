#include <doctest.h>

#include <cmath>
#include <random>

#include "toricgk/boundary.hpp"

using namespace toricgk;

namespace {

const FaceData& face_with(const std::vector<FaceData>& faces, std::vector<int> active)
{
    for (const auto& f : faces)
        if (f.active_facets == active)
            return f;
    throw std::runtime_error("face not found");
}

BoundaryProbe synthetic(const std::vector<double>& vals)
{
    BoundaryProbe p;
    double t = 0.1;
    for (double v : vals)
    {
        p.values.push_back(Eigen::MatrixXd::Constant(1, 1, v));
        p.steps.push_back(t);
        t /= 2;
    }
    return p;
}

}  // namespace

TEST_CASE("classification of synthetic sequences")
{
    std::vector<double> smooth, blowup, flat, sqrt_like;
    for (int m = 0; m < 8; ++m)
    {
        const double t = 0.1 * std::pow(0.5, m);
        smooth.push_back(1.0 + 3.0 * t + t * t);
        blowup.push_back(1.0 / t);
        flat.push_back(2.0);
        sqrt_like.push_back(std::sqrt(t));
    }
    auto a = synthetic(smooth);
    classify(a);
    CHECK(a.verdict == Verdict::converges);
    CHECK(a.rate == doctest::Approx(0.5).epsilon(0.05));

    auto b = synthetic(blowup);
    classify(b);
    CHECK(b.verdict == Verdict::diverges);

    auto c = synthetic(flat);
    classify(c);
    CHECK(c.verdict == Verdict::converges);

    // Values converge but the divided differences do not: not smooth.
    auto d = synthetic(sqrt_like);
    classify(d);
    CHECK(d.verdict != Verdict::converges);

    auto e = synthetic({1.0, 2.0});
    classify(e);
    CHECK(e.verdict == Verdict::inconclusive);

    auto f = synthetic({1, 1, 1, 1, 1, 1, std::nan("")});
    classify(f);
    CHECK(f.verdict == Verdict::diverges);
    CHECK(to_string(Verdict::converges) == "converges");
}

TEST_CASE("C phi_s^-1 C converges and phi_s diverges at a square edge")
{
    const auto p = fixtures::square();
    const auto tau = guillemin_potential(p);
    const auto faces = enumerate_faces(p);
    const auto C = AntiSymMatrix::planar(Rational(1));
    const auto& edge = face_with(faces, {0});

    const auto q = probe_quantity(p, tau, C, edge, quantities::c_sandwich(), 8);
    CHECK(q.verdict == Verdict::converges);
    CHECK(q.values.size() == 8);
    CHECK(q.quantity_name == "minus_C_phi_s_inv_C");

    const auto ctrl = probe_quantity(p, tau, C, edge, quantities::control_hessian(), 8);
    CHECK(ctrl.verdict == Verdict::diverges);
}

TEST_CASE("with C = 0 and the Guillemin potential the standard quantities vanish")
{
    const auto p = fixtures::cp2_triangle();
    const auto tau = guillemin_potential(p);
    const auto C = AntiSymMatrix::zero(2);
    for (const auto& f : enumerate_faces(p))
    {
        if (f.codim == 0)
            continue;
        for (const auto& q : quantities::standard())
        {
            const auto pr = probe_quantity(p, tau, C, f, q, 8);
            CHECK_MESSAGE(pr.verdict == Verdict::converges, q.name);
            for (const auto& v : pr.values)
                CHECK(v.cwiseAbs().maxCoeff() <= 1e-8);
        }
    }
}

TEST_CASE("determinant bound")
{
    const auto sq = fixtures::square();
    const auto tau = guillemin_potential(sq);
    const Eigen::MatrixXd psi = tau.hessian(Eigen::Vector2d(0.25, 0.25));  // 4 I
    // det(I + psi^-1 C) = 1 + c^2 / 16.
    CHECK(det_identity_plus(psi, AntiSymMatrix::planar(Rational(1)).numeric()) == doctest::Approx(1.0625));
    CHECK(det_identity_plus(psi, Eigen::MatrixXd::Zero(2, 2)) == doctest::Approx(1.0));

    const auto zero = det_lower_bound_check(tau, AntiSymMatrix::zero(2), sample_interior(sq, 50, 1));
    CHECK(zero.pass);
    CHECK(zero.min_value == doctest::Approx(1.0));

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    const auto cp2 = fixtures::cp2_triangle();
    const auto t2 = guillemin_potential(cp2);
    const auto samples = sample_interior(cp2, 200, 3);
    for (int s = 0; s < 20; ++s)
    {
        const auto r = det_lower_bound_check(t2, AntiSymMatrix::planar(Rational(num(rng), den(rng))), samples);
        CHECK(r.pass);
        CHECK(r.values.size() == samples.size());
        CHECK(r.min_value >= 1.0 - kDetBoundSlack);
    }
}

TEST_CASE("compactification report on the square")
{
    const auto p = fixtures::square();
    const auto r = compactification_report(p, guillemin_potential(p), AntiSymMatrix::planar(Rational(1)));
    CHECK(r.convexity_pass);
    CHECK(r.pass);
    CHECK(r.control_flagged);
    CHECK(r.depth == 8);
    CHECK(r.probes.size() == 8 * quantities::standard().size());
    CHECK(r.control_probes.size() == 8);
    for (const auto& pr : r.probes)
        CHECK_MESSAGE(pr.verdict == Verdict::converges, pr.quantity_name);
}

TEST_CASE("verdicts are stable under halving t0")
{
    const auto p = fixtures::cp2_triangle();
    const auto tau = guillemin_potential(p);
    const auto C = AntiSymMatrix::planar(Rational(3, 2));
    for (const auto& f : enumerate_faces(p))
    {
        if (f.codim == 0)
            continue;
        const double t0 = face_approach_steps(p, f, 1).front();
        for (const auto& q : quantities::standard())
        {
            const auto a = probe_quantity(p, tau, C, f, q, 8, t0);
            const auto b = probe_quantity(p, tau, C, f, q, 8, t0 / 2);
            CHECK(a.verdict == b.verdict);
        }
    }
}

TEST_CASE("a non-convex potential fails the precheck")
{
    const auto p = fixtures::square();
    const auto tau = with_correction(p, Polynomial(2, {{Rational(-10), {2, 0}}}));
    const auto r = compactification_report(p, tau, AntiSymMatrix::planar(Rational(1)));
    CHECK_FALSE(r.convexity_pass);
    CHECK_FALSE(r.pass);
    CHECK(r.convexity_min_eigenvalue < 0);
}

TEST_CASE("a smooth correction keeps the standard quantities convergent")
{
    const auto p = fixtures::square();
    const auto tau = with_correction(p, Polynomial(2, {{Rational(1, 8), {2, 0}}, {Rational(1, 16), {1, 1}}}));
    const auto r = compactification_report(p, tau, AntiSymMatrix::planar(Rational(2)));
    CHECK(r.convexity_pass);
    CHECK(r.pass);
    CHECK(r.control_flagged);
}
