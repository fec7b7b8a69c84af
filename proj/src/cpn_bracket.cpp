#include "toricgk/cpn_bracket.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace toricgk {

using cd = std::complex<double>;

namespace {

const cd kI(0.0, 1.0);

void check_nk(int n, int k)
{
    if (!(0 < k && k < n))
        throw std::invalid_argument("need 0 < k < n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

}  // namespace

std::vector<ChartFunction> moment_components(int n, int k, const Eigen::VectorXcd& w)
{
    check_nk(n, k);
    if (w.size() != n)
        throw std::invalid_argument("affine point has the wrong dimension");
    const double D = 1.0 + w.squaredNorm();
    std::vector<ChartFunction> out;
    for (int l = k - 1; l < n; ++l)
        for (int j = l; j < n; ++j)
        {
            const cd wl = w(l), wj = w(j);
            const cd Nr = std::conj(wj) * wl + wj * std::conj(wl);
            ChartFunction fr;
            fr.name = "mu_r_" + std::to_string(l + 1) + "_" + std::to_string(j + 1);
            fr.value = Nr.real() / (4.0 * D);
            fr.dw = Eigen::VectorXcd::Zero(n);
            for (int a = 0; a < n; ++a)
            {
                cd num = -Nr * std::conj(w(a));
                if (a == l)
                    num += std::conj(wj) * D;
                if (a == j)
                    num += std::conj(wl) * D;
                fr.dw(a) = num / (4.0 * D * D);
            }
            out.push_back(std::move(fr));
            if (j == l)
                continue;

            const cd Ni = std::conj(wj) * wl - wj * std::conj(wl);
            ChartFunction fi;
            fi.name = "mu_i_" + std::to_string(l + 1) + "_" + std::to_string(j + 1);
            fi.value = (Ni / (4.0 * kI * D)).real();
            fi.dw = Eigen::VectorXcd::Zero(n);
            for (int a = 0; a < n; ++a)
            {
                cd num = -Ni * std::conj(w(a));
                if (a == l)
                    num += std::conj(wj) * D;
                if (a == j)
                    num -= std::conj(wl) * D;
                fi.dw(a) = num / (4.0 * kI * D * D);
            }
            out.push_back(std::move(fi));
        }
    return out;
}

ChartFunction non_casimir_control(int n, const Eigen::VectorXcd& w)
{
    ChartFunction f;
    f.name = "re_w_1";
    f.value = w(0).real();
    f.dw = Eigen::VectorXcd::Zero(n);
    f.dw(0) = 0.5;
    return f;
}

Eigen::MatrixXcd beta_tensor(int n, int k, const Eigen::MatrixXd& c, const Eigen::VectorXcd& w)
{
    check_nk(n, k);
    if (c.rows() != k - 1 || c.cols() != k - 1)
        throw std::invalid_argument("coefficient matrix must be (k-1) x (k-1)");
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);
    for (int a = 0; a < k - 1; ++a)
        for (int b = 0; b < k - 1; ++b)
            B(a, b) = c(a, b) * w(a) * w(b);
    return B;
}

double beta1_bracket(const Eigen::MatrixXcd& B, const ChartFunction& f, const ChartFunction& g)
{
    const cd s = (f.dw.transpose() * B * g.dw)(0, 0);
    return -4.0 * s.imag();
}

CpnBracketReport strong_hamiltonian_check_cpn(int n, int k, const RatMatrix& c,
                                              const std::vector<Eigen::VectorXcd>& samples, bool include_control)
{
    check_nk(n, k);
    if (c.rows() != k - 1 || c.cols() != k - 1)
        throw std::invalid_argument("coefficient matrix must be (k-1) x (k-1)");
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j)
            if (c(i, j) != -c(j, i))
                throw std::invalid_argument("coefficient matrix must be anti-symmetric");
    const Eigen::MatrixXd cn = to_double(c);

    CpnBracketReport r;
    r.n = n;
    r.k = k;
    r.samples = static_cast<int>(samples.size());
    for (const auto& w : samples)
    {
        const Eigen::MatrixXcd B = beta_tensor(n, k, cn, w);
        const std::vector<ChartFunction> mu = moment_components(n, k, w);
        r.components = static_cast<int>(mu.size());
        for (std::size_t a = 0; a < mu.size(); ++a)
            for (std::size_t b = a + 1; b < mu.size(); ++b)
                r.max_bracket = std::max(r.max_bracket, std::abs(beta1_bracket(B, mu[a], mu[b])));
        if (include_control)
        {
            const ChartFunction ctl = non_casimir_control(n, w);
            for (const auto& m : mu)
                r.max_control_bracket = std::max(r.max_control_bracket, std::abs(beta1_bracket(B, ctl, m)));
        }
    }
    r.pass = r.max_bracket <= kBracketTolerance;
    return r;
}

std::vector<Eigen::VectorXcd> sample_affine_points(int n, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Eigen::VectorXcd> out;
    for (int s = 0; s < count; ++s)
    {
        Eigen::VectorXcd w(n);
        for (int a = 0; a < n; ++a)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            w(a) = cd(re, im);
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace toricgk
