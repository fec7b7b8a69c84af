#include "toricgk/gk_engine.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

#include "toricgk/potential.hpp"

namespace toricgk {

using Eigen::MatrixXd;

AntiSymMatrix::AntiSymMatrix(RatMatrix entries) : exact_(std::move(entries))
{
    if (exact_.rows() != exact_.cols())
        throw std::invalid_argument("C must be square");
    if (exact_.rows() == 0)
        throw std::invalid_argument("C must have positive dimension");
    for (Eigen::Index i = 0; i < exact_.rows(); ++i)
        for (Eigen::Index j = 0; j < exact_.cols(); ++j)
            if (exact_(i, j) != -exact_(j, i))
                throw std::invalid_argument("C is not anti-symmetric at entry (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
    numeric_ = to_double(exact_);
    rank_ = toricgk::rank(exact_);
    if (rank_ % 2 != 0)
        throw std::logic_error("anti-symmetric matrix with odd rank");
}

AntiSymMatrix AntiSymMatrix::zero(int n)
{
    return AntiSymMatrix(RatMatrix::Zero(n, n));
}

AntiSymMatrix AntiSymMatrix::planar(const Rational& c)
{
    RatMatrix m = RatMatrix::Zero(2, 2);
    m(0, 1) = c;
    m(1, 0) = -c;
    return AntiSymMatrix(std::move(m));
}

MatrixXd sym_part(const MatrixXd& m)
{
    return 0.5 * (m + m.transpose());
}

MatrixXd anti_part(const MatrixXd& m)
{
    return 0.5 * (m - m.transpose());
}

double max_abs(const MatrixXd& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

MatrixXd blocks(const MatrixXd& a, const MatrixXd& b, const MatrixXd& c, const MatrixXd& d)
{
    const Eigen::Index n = a.rows();
    MatrixXd m(2 * n, 2 * n);
    m << a, b, c, d;
    return m;
}

/// Product of the max-abs entries of the factors of one term.
double term_scale(std::initializer_list<const MatrixXd*> factors)
{
    double s = 1.0;
    for (const MatrixXd* f : factors)
        s *= max_abs(*f);
    return s;
}

IdentityCheck compare(std::string name, const MatrixXd& lhs, const MatrixXd& rhs, double scale, double tol)
{
    IdentityCheck c;
    c.name = std::move(name);
    c.residual = max_abs(lhs - rhs);
    c.threshold = tol * std::max(1.0, scale);
    c.pass = c.residual <= c.threshold;
    return c;
}

void check_square(const MatrixXd& m, const char* what)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw FrameError(std::string(what) + " must be a non-empty square matrix");
}

}  // namespace

GKFrame assemble_frame(const MatrixXd& phi_s, const AntiSymMatrix& C, const Eigen::VectorXd& point)
{
    check_square(phi_s, "phi_s");
    const Eigen::Index n = phi_s.rows();
    if (C.dim() != n)
        throw FrameError("C has dimension " + std::to_string(C.dim()) + ", expected " + std::to_string(n));
    if (point.size() != n)
        throw FrameError("point has dimension " + std::to_string(point.size()) + ", expected " + std::to_string(n));
    if (max_abs(phi_s - phi_s.transpose()) > 1e-12 * std::max(1.0, max_abs(phi_s)))
        throw FrameError("phi_s is not symmetric");

    GKFrame f;
    f.point = point;
    f.phi_s = sym_part(phi_s);
    Eigen::LLT<MatrixXd> llt(f.phi_s);
    if (llt.info() != Eigen::Success)
        throw FrameError("phi_s is not positive-definite");

    const MatrixXd I = MatrixXd::Identity(n, n);
    const MatrixXd Z = MatrixXd::Zero(n, n);
    f.C = C;
    f.phi = f.phi_s + C.numeric();
    f.F = Z;

    // With C = 0 both inverses are the same symmetric matrix, so the Kahler case is exact.
    const MatrixXd phi_s_inv = sym_part(llt.solve(I));
    const MatrixXd phi_inv = C.is_zero() ? phi_s_inv : MatrixXd(Eigen::PartialPivLU<MatrixXd>(f.phi).inverse());

    f.J_plus = blocks(Z, f.phi.transpose(), -phi_inv.transpose(), Z);
    f.J_minus = blocks(Z, f.phi, -phi_inv, Z);
    f.J_zero = blocks(Z, f.phi_s, -phi_s_inv, Z);
    f.g = blocks(sym_part(phi_inv), Z, Z, f.phi_s);
    f.b = blocks(anti_part(phi_inv), Z, Z, C.numeric());
    f.omega = blocks(Z, -I, I, Z);
    f.beta1 = blocks(Z, -C.numeric() * phi_s_inv, -phi_s_inv * C.numeric(), Z);
    f.b1 = blocks(anti_part(phi_inv), Z, Z, Z);
    f.beta_hol = C.numeric().cast<std::complex<double>>() / 8.0;
    return f;
}

bool bitwise_equal(const GKFrame& a, const GKFrame& b)
{
    return a.point == b.point && a.phi_s == b.phi_s && a.C == b.C && a.phi == b.phi && a.F == b.F &&
           a.J_plus == b.J_plus && a.J_minus == b.J_minus && a.J_zero == b.J_zero && a.g == b.g && a.b == b.b &&
           a.omega == b.omega && a.beta1 == b.beta1 && a.b1 == b.b1 && a.beta_hol == b.beta_hol;
}

const IdentityCheck* IdentityReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::vector<std::string> IdentityReport::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass)
            out.push_back(c.name);
    return out;
}

IdentityReport verify_identities(const GKFrame& frame, double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    const Eigen::Index n2 = frame.J_plus.rows();
    const Eigen::Index n = n2 / 2;
    const MatrixXd I = MatrixXd::Identity(n2, n2);

    const MatrixXd& Jp = frame.J_plus;
    const MatrixXd& Jm = frame.J_minus;
    const MatrixXd& J0 = frame.J_zero;
    const MatrixXd W = as_map(frame.omega);
    const MatrixXd W_inv = W.inverse();
    const MatrixXd G = as_map(frame.g);
    const MatrixXd Bm = as_map(frame.b);
    const MatrixXd P = as_map(frame.beta1);
    const MatrixXd B1 = as_map(frame.b1);
    const MatrixXd Jsum = Jp + Jm;
    const MatrixXd Jdiff = Jp - Jm;

    IdentityReport r;
    auto add = [&](IdentityCheck c) {
        r.pass = r.pass && c.pass;
        r.checks.push_back(std::move(c));
    };

    add(compare("J_plus_squared", Jp * Jp, -I, term_scale({&Jp, &Jp}), tol));
    add(compare("J_minus_squared", Jm * Jm, -I, term_scale({&Jm, &Jm}), tol));
    add(compare("J_zero_squared", J0 * J0, -I, term_scale({&J0, &J0}), tol));

    const MatrixXd g_omega = -0.5 * W * Jsum;
    add(compare("metric_from_omega", G, g_omega, std::max(max_abs(G), term_scale({&W, &Jsum})), tol));
    add(compare("b_from_omega", Bm, -0.5 * W * Jdiff, std::max(max_abs(Bm), term_scale({&W, &Jdiff})), tol));

    const MatrixXd JpT = Jp.transpose();
    add(compare("J_minus_symplectic_adjoint", Jm, -W_inv * JpT * W,
                std::max(max_abs(Jm), term_scale({&W_inv, &JpT, &W})), tol));

    const MatrixXd J0T = J0.transpose();
    add(compare("beta1_J0_commutation", P * J0T, J0 * P, term_scale({&P, &J0}), tol));

    add(compare("b_transform_operator", -0.5 * Jsum, -J0 + P * B1,
                std::max({max_abs(Jsum), max_abs(J0), term_scale({&P, &B1})}), tol));

    const MatrixXd w_plus = g_omega * Jp;
    const MatrixXd w_minus = g_omega * Jm;
    const MatrixXd forms_rhs = B1 * J0 - B1 * P * B1 + J0T * B1;
    add(compare("b_transform_forms", -0.5 * (w_plus - w_minus), forms_rhs,
                std::max({term_scale({&W, &Jsum, &Jp}), term_scale({&W, &Jsum, &Jm}), term_scale({&B1, &J0}),
                          term_scale({&B1, &P, &B1})}),
                tol));

    const MatrixXd Jsum_inv = Eigen::PartialPivLU<MatrixXd>(Jsum).inverse();
    add(compare("beta1_two_routes", P, Jdiff * Jsum_inv * W_inv,
                std::max(max_abs(P), term_scale({&Jdiff, &Jsum_inv, &W_inv})), tol));

    IdentityCheck mumu;
    mumu.name = "beta1_mu_mu_block_zero";
    mumu.residual = max_abs(frame.beta1.bottomRightCorner(n, n));
    mumu.threshold = 0.0;
    mumu.pass = mumu.residual == 0.0;
    add(std::move(mumu));
    return r;
}

void check_connection(const MatrixXd& F, Eigen::Index n)
{
    if (F.rows() != n || F.cols() != n)
        throw FrameError("F dimension mismatch");
    if (max_abs(F + F.transpose()) > 1e-12 * std::max(1.0, max_abs(F)))
        throw FrameError("F must be anti-symmetric");
}

TamenessResult tameness_check(const MatrixXd& phi_s, const MatrixXd& F)
{
    check_square(phi_s, "phi_s");
    check_connection(F, phi_s.rows());
    TamenessResult r;
    const MatrixXd S = sym_part(phi_s);
    r.min_eig_phi_s = Eigen::SelfAdjointEigenSolver<MatrixXd>(S, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    Eigen::FullPivLU<MatrixXd> lu(S);
    if (!lu.isInvertible())
    {
        r.min_eig_tamed = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    const MatrixXd tamed = sym_part(S + 0.25 * F * lu.solve(F));
    r.min_eig_tamed = Eigen::SelfAdjointEigenSolver<MatrixXd>(tamed, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    r.pass = r.min_eig_phi_s > 0.0 && r.min_eig_tamed > 0.0;
    return r;
}

MatrixXd general_metric(const MatrixXd& phi_s, const AntiSymMatrix& C, const MatrixXd& F)
{
    check_square(phi_s, "phi_s");
    if (C.dim() != phi_s.rows())
        throw FrameError("C dimension mismatch");
    check_connection(F, phi_s.rows());
    const MatrixXd phi = phi_s + C.numeric();
    const MatrixXd phi_inv = Eigen::PartialPivLU<MatrixXd>(phi).inverse();
    return blocks(sym_part(phi_inv), 0.5 * phi_inv * F, -0.5 * F * phi_inv.transpose(), phi_s);
}

int interior_type(const AntiSymMatrix& C)
{
    return C.dim() - C.rank();
}

FaceType face_type(const DelzantPolytope& p, const FaceData& face, const AntiSymMatrix& C)
{
    if (C.dim() != p.dim())
        throw std::invalid_argument("C dimension does not match the polytope");
    const RatMatrix& B = face.subspace_basis;
    FaceType t;
    t.restricted_rank = B.cols() == 0 ? 0 : toricgk::rank(RatMatrix(B.transpose() * C.exact() * B));
    t.ambient = p.dim() - t.restricted_rank;
    t.submanifold = p.dim() - face.codim - t.restricted_rank;
    return t;
}

HolomorphicPoisson holomorphic_poisson(const GKFrame& frame)
{
    using cd = std::complex<double>;
    const Eigen::Index n = frame.dim();
    HolomorphicPoisson h;
    h.coefficients = frame.beta_hol;

    const MatrixXd P = as_map(frame.beta1);
    const Eigen::MatrixXcd beta_map = -0.25 * ((frame.J_zero * P).cast<cd>() + cd(0.0, 1.0) * P.cast<cd>());
    h.components = beta_map.transpose();

    // Z_j as columns in the (d/dtheta, d/dmu) basis: d/du_j = sum_k (phi_s^-1)_kj d/dmu_k.
    Eigen::MatrixXcd Zf(2 * n, n);
    Zf.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
    Zf.bottomRows(n) = cd(0.0, 1.0) * frame.phi_s.inverse().cast<cd>();

    Eigen::MatrixXcd expanded = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
        {
            const cd K = h.coefficients(j, k);
            if (K == cd(0.0, 0.0))
                continue;
            expanded += K * (Zf.col(j) * Zf.col(k).transpose() - Zf.col(k) * Zf.col(j).transpose());
        }
    h.frame_residual = (h.components - expanded).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, h.components.cwiseAbs().maxCoeff());
    h.agree = h.frame_residual <= 1e-10 * scale;
    return h;
}

Beta1Inverse beta1_inverse(const GKFrame& frame)
{
    const MatrixXd P = as_map(frame.beta1);
    if (numeric_rank(P) < P.rows())
        throw DomainError("beta1 is degenerate (C is singular), its inverse is undefined");
    const MatrixXd Q_map = P.inverse();
    Beta1Inverse out;
    out.Q = Q_map.transpose();
    out.b_prime = (-0.5 * Q_map * (frame.J_plus + frame.J_minus)).transpose();
    return out;
}

int numeric_rank(const MatrixXd& m, double rel_tol)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    const double top = s.size() ? s(0) : 0.0;
    if (top == 0.0)
        return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > top * rel_tol)
            ++r;
    return r;
}

MatrixFactsReport matrix_facts_suite(const MatrixXd& A, double tol)
{
    check_square(A, "A");
    Eigen::FullPivLU<MatrixXd> lu(A);
    if (!lu.isInvertible())
        throw FrameError("matrix is singular");
    const Eigen::Index n = A.rows();
    const MatrixXd I = MatrixXd::Identity(n, n);
    const MatrixXd Z = MatrixXd::Zero(n, n);
    const MatrixXd B = lu.inverse();
    const MatrixXd As = sym_part(A), Aa = anti_part(A), Bs = sym_part(B), Ba = anti_part(B);
    const MatrixXd AT = A.transpose(), BT = B.transpose();

    MatrixFactsReport r;
    auto add = [&](IdentityCheck c) {
        r.pass = r.pass && c.pass;
        r.checks.push_back(std::move(c));
    };
    const double s_ab = std::max(term_scale({&As, &Bs}), term_scale({&Aa, &Ba}));
    const double s_mixed = std::max(term_scale({&As, &Ba}), term_scale({&Aa, &Bs}));
    add(compare("sym_sym_plus_anti_anti_left", As * Bs + Aa * Ba, I, s_ab, tol));
    add(compare("sym_sym_plus_anti_anti_right", Bs * As + Ba * Aa, I, s_ab, tol));
    add(compare("sym_anti_plus_anti_sym_left", As * Ba + Aa * Bs, Z, s_mixed, tol));
    add(compare("sym_anti_plus_anti_sym_right", Bs * Aa + Ba * As, Z, s_mixed, tol));
    add(compare("congruence_sym", A * Bs * AT, As, std::max(term_scale({&A, &Bs, &AT}), max_abs(As)), tol));
    add(compare("congruence_anti", A * Ba * AT, -Aa, std::max(term_scale({&A, &Ba, &AT}), max_abs(Aa)), tol));

    r.a_sym_invertible = numeric_rank(As) == n;
    r.b_sym_invertible = numeric_rank(Bs) == n;
    IdentityCheck equiv;
    equiv.name = "sym_part_invertibility_equivalence";
    equiv.pass = r.a_sym_invertible == r.b_sym_invertible;
    equiv.residual = equiv.pass ? 0.0 : 1.0;
    add(std::move(equiv));

    if (r.a_sym_invertible && r.b_sym_invertible)
    {
        const MatrixXd As_inv = As.inverse();
        const MatrixXd Bs_inv = Bs.inverse();
        add(compare("inverse_sym_part", BT * Bs_inv * B, As_inv,
                    std::max(term_scale({&BT, &Bs_inv, &B}), max_abs(As_inv)), tol));
    }

    const bool a_pd = Eigen::LLT<MatrixXd>(As).info() == Eigen::Success;
    IdentityCheck pd;
    pd.name = "sym_part_positivity";
    pd.pass = !a_pd || Eigen::LLT<MatrixXd>(Bs).info() == Eigen::Success;
    pd.residual = pd.pass ? 0.0 : 1.0;
    add(std::move(pd));
    return r;
}

}  // namespace toricgk
