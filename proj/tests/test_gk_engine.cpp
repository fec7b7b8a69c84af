#include <doctest.h>

#include <complex>
#include <random>

#include "toricgk/gk_engine.hpp"
#include "toricgk/potential.hpp"

using namespace toricgk;

namespace {

RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows)
{
    RatMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows)
    {
        Eigen::Index j = 0;
        for (long v : r)
            m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

Eigen::MatrixXd random_spd(int n, std::mt19937_64& rng, double spread = 1.0)
{
    std::normal_distribution<double> nd;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = nd(rng);
    return a * a.transpose() * spread + Eigen::MatrixXd::Identity(n, n);
}

AntiSymMatrix random_antisym(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    RatMatrix m = RatMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            m(i, j) = Rational(num(rng), den(rng));
            m(j, i) = -m(i, j);
        }
    return AntiSymMatrix(m);
}

Eigen::MatrixXd diag2(double a, double b)
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("AntiSymMatrix validation and rank")
{
    CHECK_THROWS_AS(AntiSymMatrix(rat({{0, 1}, {1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(AntiSymMatrix(rat({{1, 0}, {0, -1}})), std::invalid_argument);
    CHECK_THROWS_AS(AntiSymMatrix(RatMatrix(2, 3)), std::invalid_argument);
    CHECK(AntiSymMatrix::planar(Rational(3)).rank() == 2);
    CHECK(AntiSymMatrix::zero(3).is_zero());
    const AntiSymMatrix c3(rat({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}));
    CHECK(c3.rank() == 2);
    CHECK(interior_type(c3) == 1);
    CHECK(interior_type(AntiSymMatrix::planar(Rational(1))) == 0);
    CHECK(interior_type(AntiSymMatrix::zero(4)) == 4);
}

TEST_CASE("rank of random anti-symmetric matrices is even")
{
    std::mt19937_64 rng(4);
    for (int s = 0; s < 100; ++s)
        CHECK(random_antisym(2 + s % 5, rng).rank() % 2 == 0);
}

TEST_CASE("frame on a hand-computed example")
{
    // phi_s = 4 I, C = [[0,1],[-1,0]]: phi = [[4,1],[-1,4]], det 17.
    const auto f = assemble_frame(diag2(4, 4), AntiSymMatrix::planar(Rational(1)), Eigen::Vector2d(0.25, 0.25));
    CHECK(f.phi(0, 1) == 1.0);
    CHECK(f.phi(1, 0) == -1.0);
    // phi^-1 = [[4,-1],[1,4]] / 17
    CHECK(f.g(0, 0) == doctest::Approx(4.0 / 17));
    CHECK(f.g(1, 1) == doctest::Approx(4.0 / 17));
    CHECK(f.g(0, 1) == doctest::Approx(0.0));
    CHECK(f.g(2, 2) == 4.0);
    CHECK(f.b(0, 1) == doctest::Approx(-1.0 / 17));
    CHECK(f.b(2, 3) == 1.0);
    CHECK(f.b(0, 2) == 0.0);
    CHECK(f.omega(0, 2) == -1.0);
    CHECK(f.omega(2, 0) == 1.0);
    // beta1 = [[0, -C/4], [-C/4, 0]] here.
    CHECK(f.beta1(0, 3) == doctest::Approx(-0.25));
    CHECK(f.beta1(2, 1) == doctest::Approx(-0.25));
    CHECK(f.beta1(2, 3) == 0.0);

    // Printed block form of J_plus: [[0, -phi^-1], [phi, 0]].
    const Eigen::MatrixXd printed = printed_form(f.J_plus);
    const Eigen::Matrix2d phi_inv = f.phi.inverse();
    CHECK((printed.block(0, 2, 2, 2) + phi_inv).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((printed.block(2, 0, 2, 2) - f.phi).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(printed.block(0, 0, 2, 2).isZero());

    CHECK(verify_identities(f).pass);
}

TEST_CASE("C = 0 gives the Kahler frame")
{
    const auto f = assemble_frame(diag2(2, 5), AntiSymMatrix::zero(2), Eigen::Vector2d(0.1, 0.2));
    CHECK(f.J_plus == f.J_minus);
    CHECK(f.J_plus == f.J_zero);
    CHECK(f.b.isZero());
    CHECK(f.beta1.isZero());
    CHECK(f.b1.isZero());
    CHECK(f.beta_hol.isZero());
    const auto r = verify_identities(f);
    CHECK(r.pass);
    REQUIRE(r.find("b_transform_operator"));
    CHECK(r.find("b_transform_operator")->pass);
}

TEST_CASE("frame input validation")
{
    const auto C = AntiSymMatrix::planar(Rational(1));
    CHECK_THROWS_AS(assemble_frame(diag2(1, -1), C, Eigen::Vector2d::Zero()), FrameError);
    Eigen::MatrixXd asym = diag2(1, 1);
    asym(0, 1) = 0.5;
    CHECK_THROWS_AS(assemble_frame(asym, C, Eigen::Vector2d::Zero()), FrameError);
    CHECK_THROWS_AS(assemble_frame(Eigen::MatrixXd::Identity(3, 3), C, Eigen::Vector3d::Zero()), FrameError);
    CHECK_THROWS_AS(assemble_frame(Eigen::MatrixXd(2, 3), C, Eigen::Vector2d::Zero()), FrameError);
}

TEST_CASE("identities hold on random frames")
{
    std::mt19937_64 rng(12);
    for (int s = 0; s < 60; ++s)
    {
        const int n = 2 + s % 4;
        const auto f = assemble_frame(random_spd(n, rng), random_antisym(n, rng), Eigen::VectorXd::Zero(n));
        const auto r = verify_identities(f);
        CHECK(r.pass);
        for (const auto& c : r.checks)
            CHECK_MESSAGE(c.pass, c.name);
        CHECK(r.checks.size() == 11);

        // Metric positive-definite, det(phi) >= det(phi_s).
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f.g);
        CHECK(es.eigenvalues().minCoeff() > 0);
        CHECK(f.phi.determinant() >= f.phi_s.determinant() * (1 - 1e-12));
        // beta1 mu-mu block zero, exactly.
        CHECK(f.beta1.block(n, n, n, n).isZero(0.0));
    }
}

TEST_CASE("fault injection is localized to one identity")
{
    const auto f = assemble_frame(diag2(4, 3), AntiSymMatrix::planar(Rational(2)), Eigen::Vector2d::Zero());
    SUBCASE("metric")
    {
        auto bad = f;
        bad.g(0, 0) += 1e-3;
        CHECK(verify_identities(bad).failures() == std::vector<std::string>{"metric_from_omega"});
    }
    SUBCASE("J_zero")
    {
        auto bad = f;
        bad.J_zero(0, 2) *= 1.01;
        const auto fails = verify_identities(bad).failures();
        CHECK(std::find(fails.begin(), fails.end(), "J_zero_squared") != fails.end());
        CHECK(std::find(fails.begin(), fails.end(), "metric_from_omega") == fails.end());
    }
    SUBCASE("beta1 mu-mu block")
    {
        auto bad = f;
        bad.beta1(2, 3) = 1e-300;
        const auto fails = verify_identities(bad).failures();
        CHECK(std::find(fails.begin(), fails.end(), "beta1_mu_mu_block_zero") != fails.end());
    }
}

TEST_CASE("tameness and the general metric")
{
    const Eigen::MatrixXd phi_s = diag2(2, 3);
    CHECK(tameness_check(phi_s, Eigen::MatrixXd::Zero(2, 2)).pass);
    CHECK_THROWS_AS(tameness_check(phi_s, Eigen::MatrixXd::Identity(2, 2)), FrameError);
    // phi_s = diag(2, 3), F = [[0, f], [-f, 0]]: tamed part diag(2 - f^2/12, 3 - f^2/8).
    Eigen::MatrixXd F5(2, 2);
    F5 << 0, 5, -5, 0;
    CHECK_FALSE(tameness_check(phi_s, F5).pass);
    CHECK(tameness_check(phi_s, F5).min_eig_tamed == doctest::Approx(3 - 25.0 / 8));
    Eigen::MatrixXd F4(2, 2);
    F4 << 0, 4, -4, 0;
    CHECK(tameness_check(phi_s, F4).pass);
    CHECK_FALSE(tameness_check(diag2(1, -1), Eigen::MatrixXd::Zero(2, 2)).pass);

    const auto C = AntiSymMatrix::planar(Rational(1, 2));
    const auto f = assemble_frame(phi_s, C, Eigen::Vector2d::Zero());
    CHECK((general_metric(phi_s, C, Eigen::MatrixXd::Zero(2, 2)) - f.g).cwiseAbs().maxCoeff() < 1e-15);

    std::mt19937_64 rng(8);
    std::normal_distribution<double> nd(0.0, 3.0);
    for (int s = 0; s < 200; ++s)
    {
        const double f = nd(rng);
        Eigen::MatrixXd F(2, 2);
        F << 0, f, -f, 0;
        const Eigen::MatrixXd ps = random_spd(2, rng, 0.2);
        const auto t = tameness_check(ps, F);
        const Eigen::MatrixXd G = general_metric(ps, C, F);
        CHECK((G - G.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
        if (std::abs(t.min_eig_tamed) > 1e-8)
            CHECK((es.eigenvalues().minCoeff() > 0) == t.pass);
        // Flipping F leaves definiteness unchanged.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(general_metric(ps, C, -F));
        if (std::abs(es.eigenvalues().minCoeff()) > 1e-8)
            CHECK((es2.eigenvalues().minCoeff() > 0) == (es.eigenvalues().minCoeff() > 0));
    }
}

TEST_CASE("face types")
{
    const auto sq = fixtures::square();
    const auto faces = enumerate_faces(sq);
    const auto C = AntiSymMatrix::planar(Rational(1));
    for (const auto& f : faces)
    {
        const auto t = face_type(sq, f, C);
        if (f.codim == 0)
        {
            CHECK(t.ambient == interior_type(C));
            CHECK(t.restricted_rank == 2);
        }
        else if (f.codim == 1)
        {
            CHECK(t.restricted_rank == 0);
            CHECK(t.ambient == 2);
            CHECK(t.submanifold == 1);
        }
        else
        {
            CHECK(t.ambient == 2);
            CHECK(t.submanifold == 0);
        }
        CHECK(t.restricted_rank <= C.rank());
    }
    for (const auto& f : faces)
        CHECK(face_type(sq, f, AntiSymMatrix::zero(2)).ambient == 2);
}

TEST_CASE("restricted rank never exceeds rank(C)")
{
    std::mt19937_64 rng(21);
    const auto p = fixtures::simplex(4);
    const auto faces = enumerate_faces(p);
    for (int s = 0; s < 20; ++s)
    {
        const auto C = random_antisym(4, rng);
        for (const auto& f : faces)
        {
            const auto t = face_type(p, f, C);
            CHECK(t.restricted_rank <= C.rank());
            CHECK(t.restricted_rank % 2 == 0);
            CHECK(t.restricted_rank <= 4 - f.codim);
        }
    }
}

TEST_CASE("holomorphic Poisson structure")
{
    std::mt19937_64 rng(2);
    for (int s = 0; s < 30; ++s)
    {
        const int n = 2 + s % 3;
        const auto C = random_antisym(n, rng);
        const auto f = assemble_frame(random_spd(n, rng), C, Eigen::VectorXd::Zero(n));
        const auto hp = holomorphic_poisson(f);
        CHECK(hp.agree);
        CHECK((hp.coefficients.real() - C.numeric() / 8).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(hp.coefficients.imag().isZero());
        // Imaginary part of -1/4 (J0 beta1 + i beta1) is -beta1 / 4.
        CHECK((hp.components.imag() + f.beta1 / 4).cwiseAbs().maxCoeff() < 1e-12);
    }
    const auto zero = holomorphic_poisson(
        assemble_frame(diag2(1, 2), AntiSymMatrix::zero(2), Eigen::Vector2d::Zero()));
    CHECK(zero.components.isZero());
}

TEST_CASE("holomorphic Poisson structure in the chart of CP1 x CP1")
{
    // Square [0,1/2]^2 with the Guillemin potential: u_j = 1/2 ln(mu_j / (1/2 - mu_j)),
    // z_j = e^{u_j + i theta_j}. Push K_jk Z_j ^ Z_k through dz_j(Z_k) = 2 delta_jk z_j.
    const double c = 1.5;
    const auto tau = guillemin_potential(fixtures::square());
    const Eigen::Vector2d mu(0.17, 0.31);
    const auto f = assemble_frame(tau.hessian(mu), AntiSymMatrix::planar(Rational(3, 2)), mu);
    const auto hp = holomorphic_poisson(f);

    // Z_j (z_j) by finite differences of the chart map along the frame vector.
    auto chart = [&](const Eigen::Vector4d& x) {
        Eigen::Vector2cd out;
        for (int j = 0; j < 2; ++j)
            out(j) = std::exp(std::complex<double>(0.5 * std::log(x(2 + j) / (0.5 - x(2 + j))), x(j)));
        return out;
    };
    Eigen::Vector4d base;
    base << 0.3, 0.6, mu(0), mu(1);
    const Eigen::Matrix2d phi_s_inv = f.phi_s.inverse();
    Eigen::Matrix2cd dz;  // dz(j, k) = dz_j(Z_k)
    const double h = 1e-7;
    for (int k = 0; k < 2; ++k)
    {
        Eigen::Vector4d re = Eigen::Vector4d::Zero(), im = Eigen::Vector4d::Zero();
        re(k) = 1.0;
        im.tail<2>() = phi_s_inv.col(k);
        const Eigen::Vector2cd dre = (chart(base + h * re) - chart(base - h * re)) / (2 * h);
        const Eigen::Vector2cd dim = (chart(base + h * im) - chart(base - h * im)) / (2 * h);
        dz.col(k) = dre + std::complex<double>(0, 1) * dim;
    }
    const Eigen::Vector2cd zb = chart(base);
    // beta(dz1, dz2) = sum K_jk (dz1(Z_j) dz2(Z_k) - dz1(Z_k) dz2(Z_j)).
    std::complex<double> val = 0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            val += hp.coefficients(j, k) * (dz(0, j) * dz(1, k) - dz(0, k) * dz(1, j));
    const std::complex<double> expected = -c * zb(0) * zb(1);
    CHECK(std::abs(val - expected) < 1e-6 * std::abs(expected));
}

TEST_CASE("beta1 inverse")
{
    const auto f = assemble_frame(diag2(4, 4), AntiSymMatrix::planar(Rational(1)), Eigen::Vector2d::Zero());
    const auto inv = beta1_inverse(f);
    CHECK((f.beta1 * inv.Q - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((inv.b_prime + inv.b_prime.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(beta1_inverse(assemble_frame(diag2(1, 1), AntiSymMatrix::zero(2), Eigen::Vector2d::Zero())),
                    DomainError);
}

TEST_CASE("matrix facts")
{
    CHECK(matrix_facts_suite(Eigen::MatrixXd::Identity(3, 3)).pass);
    Eigen::MatrixXd a(2, 2);
    a << 4, 1, -1, 4;
    const auto r = matrix_facts_suite(a);
    CHECK(r.pass);
    CHECK(r.a_sym_invertible);
    CHECK(r.b_sym_invertible);

    // A_s singular, A invertible: B_s is singular as well.
    Eigen::MatrixXd s(2, 2);
    s << 0, 1, -1, 0;
    const auto rs = matrix_facts_suite(s);
    CHECK(rs.pass);
    CHECK_FALSE(rs.a_sym_invertible);
    CHECK_FALSE(rs.b_sym_invertible);

    CHECK_THROWS_AS(matrix_facts_suite(Eigen::MatrixXd::Zero(2, 2)), FrameError);

    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 100; ++t)
    {
        Eigen::MatrixXd m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                m(i, j) = nd(rng);
        m += 3 * Eigen::MatrixXd::Identity(5, 5);
        const auto rep = matrix_facts_suite(m);
        for (const auto& c : rep.checks)
            CHECK_MESSAGE(c.pass, c.name);
    }
}

TEST_CASE("numeric rank and parts")
{
    Eigen::MatrixXd m(3, 3);
    m << 1, 2, 3, 2, 4, 6, 0, 1, 1;
    CHECK(numeric_rank(m) == 2);
    CHECK((sym_part(m) + anti_part(m) - m).isZero());
    CHECK(max_abs(m) == 6.0);
}

TEST_CASE("bitwise_equal")
{
    const auto a = assemble_frame(diag2(4, 3), AntiSymMatrix::planar(Rational(2)), Eigen::Vector2d::Zero());
    auto b = a;
    CHECK(bitwise_equal(a, b));
    b.g(1, 1) = std::nextafter(b.g(1, 1), 1e9);
    CHECK_FALSE(bitwise_equal(a, b));
}
