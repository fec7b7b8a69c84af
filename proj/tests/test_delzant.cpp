#include <doctest.h>

#include <cmath>
#include <random>

#include "toricgk/delzant.hpp"
#include "toricgk/potential.hpp"

using namespace toricgk;

namespace {

AntiSymMatrix random_antisym(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    RatMatrix m = RatMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            m(i, j) = Rational(num(rng), den(rng));
            m(j, i) = -m(i, j);
        }
    return AntiSymMatrix(m);
}

}  // namespace

TEST_CASE("CP2 reduction data")
{
    const auto r = build_reduction(fixtures::cp2_triangle());
    IntMatrix sigma(2, 3);
    sigma << 1, 0, -1, 0, 1, -1;
    CHECK(r.sigma == sigma);
    REQUIRE(r.kernel_basis.cols() == 1);
    CHECK(r.kernel_basis(0, 0) == 1);
    CHECK(r.kernel_basis(1, 0) == 1);
    CHECK(r.kernel_basis(2, 0) == 1);
    CHECK(r.vertex_facets == std::vector<int>{0, 1});
    CHECK(RatMatrix(to_rational(r.sigma) * r.right_inverse) == RatMatrix::Identity(2, 2));
}

TEST_CASE("square reduction data")
{
    const auto r = build_reduction(fixtures::square());
    REQUIRE(r.kernel_basis.cols() == 2);
    IntMatrix expected(4, 2);
    expected << 1, 0, 1, 0, 0, 1, 0, 1;
    CHECK(r.kernel_basis == expected);
    CHECK(IntMatrix(r.sigma * r.kernel_basis).isZero());
    CHECK_THROWS_AS(build_reduction(fixtures::square(), 7), std::out_of_range);
}

TEST_CASE("non-Delzant polytopes are rejected")
{
    IntVector a(2), b(2), c(2);
    a << 1, 0;
    b << 0, 1;
    c << -1, -2;
    const DelzantPolytope bad(2, {Facet{a, 0}, Facet{b, 0}, Facet{c, -2}});
    CHECK_THROWS_AS(build_reduction(bad), PolytopeError);
}

TEST_CASE("CP2 pushforward of the three basic wedges")
{
    const auto r = build_reduction(fixtures::cp2_triangle());
    const auto check = [&](int c1, int c2, int c3) {
        const auto pushed = wedge_pushforward(r, cp2_lift(c1, c2, c3));
        CHECK(pushed == AntiSymMatrix::planar(Rational(c1 - c2 + c3)));
    };
    check(1, 0, 0);
    check(0, 1, 0);
    check(0, 0, 1);
    check(2, 5, -7);
    // e1^e2 + e1^e3 is in the kernel of the induced map: Kahler.
    CHECK(wedge_pushforward(r, cp2_lift(1, 1, 0)).is_zero());
}

TEST_CASE("lift roundtrip and kernel invariance")
{
    std::mt19937_64 rng(33);
    for (const auto& p : {fixtures::square(), fixtures::cp2_triangle(), fixtures::simplex(3)})
    {
        for (int vtx = 0; vtx < static_cast<int>(p.vertices().size()); ++vtx)
        {
            const auto r = build_reduction(p, vtx);
            for (int s = 0; s < 5; ++s)
            {
                const auto C = random_antisym(p.dim(), rng);
                const auto lifted = lift_C(r, C);
                CHECK(lifted.dim() == p.num_facets());
                CHECK(wedge_pushforward(r, lifted) == C);

                // Adding k ^ v for a kernel vector k does not change the pushforward.
                const RatVector k = to_rational(IntMatrix(r.kernel_basis)).col(0);
                RatVector v = RatVector::Zero(p.num_facets());
                v(s % p.num_facets()) = Rational(s + 1);
                const RatMatrix kv = k * v.transpose() - v * k.transpose();
                CHECK(wedge_pushforward(r, AntiSymMatrix(RatMatrix(lifted.exact() + kv))) == C);
            }
        }
    }
}

TEST_CASE("standard data of the C^d model")
{
    const auto p = fixtures::cp2_triangle();  // offsets 0, 0, -1
    Eigen::Vector3d nu(0.5, 0.25, -0.5);
    const auto d = cd_standard_data(p, nu);
    CHECK(d.psi0(0, 0) == doctest::Approx(1.0));
    CHECK(d.psi0(1, 1) == doctest::Approx(2.0));
    CHECK(d.psi0(2, 2) == doctest::Approx(1.0));
    CHECK(d.psi0(0, 1) == 0.0);
    CHECK(d.tau0 == doctest::Approx(0.5 * (0.5 * std::log(0.5) + 0.25 * std::log(0.25) + 0.5 * std::log(0.5))));
    CHECK_THROWS_AS(cd_standard_data(p, Eigen::Vector3d(0.0, 0.25, 0.0)), DomainError);
    CHECK_THROWS_AS(cd_standard_data(p, Eigen::Vector3d(0.5, 0.25, -1.5)), DomainError);

    const auto near = cd_standard_data(p, Eigen::Vector3d(1e-9, 0.25, 0.0));
    CHECK(near.psi0(0, 0) == doctest::Approx(5e8));
}

TEST_CASE("reduced structure fixtures")
{
    const auto p = fixtures::cp2_triangle();
    const auto r = build_reduction(p);
    const auto samples = sample_interior(p, 10, 4);

    const auto kahler = reduced_structure_fixture(r, cp2_lift(1, 1, 0), AntiSymMatrix::zero(2), samples);
    CHECK(kahler.pass);
    CHECK(kahler.kahler);
    CHECK(kahler.interior_type_pushed == 2);

    const auto combo = reduced_structure_fixture(r, cp2_lift(1, 2, 3), AntiSymMatrix::planar(Rational(2)), samples);
    CHECK(combo.pass);
    CHECK(combo.pushforward_matches);
    CHECK(combo.frames_identical);
    CHECK(combo.poisson_identical);
    CHECK_FALSE(combo.kahler);
    CHECK(combo.interior_type_pushed == 0);
    CHECK(combo.interior_type_direct == 0);

    const auto wrong = reduced_structure_fixture(r, cp2_lift(1, 0, 0), AntiSymMatrix::planar(Rational(2)), samples);
    CHECK_FALSE(wrong.pushforward_matches);
    CHECK_FALSE(wrong.pass);
}
