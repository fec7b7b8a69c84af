#include "toricgk/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace toricgk {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw ParseError("not an integer: '" + std::string(s) + "'");
    bool negative = s[0] == '-';
    if (s[0] == '+' || s[0] == '-')
        s.remove_prefix(1);
    // Leading zeros would make the Integer constructor read octal.
    s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
    Integer v(std::string{s});
    return negative ? Integer(-v) : v;
}

Integer pow10(long e)
{
    Integer r = 1;
    for (long i = 0; i < e; ++i)
        r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s)
{
    std::string mantissa(s);
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos)
    {
        std::string exp_text = mantissa.substr(e + 1);
        if (!is_integer_literal(exp_text))
            throw ParseError("bad exponent in '" + std::string(s) + "'");
        exponent = std::stol(exp_text);
        mantissa.resize(e);
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+'))
    {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos)
    {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("not a number: '" + std::string(s) + "'");
    Rational value{parse_integer(digits)};
    if (exponent >= 0)
        value *= Rational(pow10(exponent));
    else
        value /= Rational(pow10(-exponent));
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (is_integer_literal(text))
        return Rational(parse_integer(text));
    return parse_decimal(text);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

Eigen::MatrixXd to_double(const RatMatrix& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = to_double(m(i, j));
    return out;
}

Eigen::VectorXd to_double(const RatVector& v)
{
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = to_double(v(i));
    return out;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

RatVector to_rational(const IntVector& v)
{
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = Rational(v(i));
    return out;
}

RatMatrix rref(RatMatrix m, std::vector<int>* pivots)
{
    if (pivots)
        pivots->clear();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        Eigen::Index pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.row(row).swap(m.row(pivot));
        Rational inv = 1 / m(row, col);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
        {
            if (i == row || m(i, col) == 0)
                continue;
            Rational factor = m(i, col);
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
        }
        if (pivots)
            pivots->push_back(static_cast<int>(col));
        ++row;
    }
    return m;
}

int rank(const RatMatrix& m)
{
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

Rational determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    RatMatrix a = m;
    const Eigen::Index n = a.rows();
    Rational det = 1;
    for (Eigen::Index col = 0; col < n; ++col)
    {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col)
        {
            a.row(col).swap(a.row(pivot));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index i = col + 1; i < n; ++i)
        {
            if (a(i, col) == 0)
                continue;
            Rational factor = a(i, col) / a(col, col);
            for (Eigen::Index j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const Eigen::Index n = m.rows();
    RatMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = RatMatrix::Identity(n, n);
    std::vector<int> pivots;
    RatMatrix reduced = rref(aug, &pivots);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n)
        return std::nullopt;
    return RatMatrix(reduced.rightCols(n));
}

RatMatrix nullspace(const RatMatrix& m)
{
    std::vector<int> pivots;
    RatMatrix reduced = rref(m, &pivots);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index j = 0; j < cols; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)])
            free_cols.push_back(j);

    RatMatrix basis = RatMatrix::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k)
    {
        const Eigen::Index f = free_cols[k];
        const auto col = static_cast<Eigen::Index>(k);
        basis(f, col) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], col) = -reduced(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

IntVector primitive_integer(const RatVector& v)
{
    Integer lcm_den = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(v(i))));
    std::vector<Integer> scaled(static_cast<std::size_t>(v.size()));
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        Rational s = v(i) * Rational(lcm_den);
        scaled[static_cast<std::size_t>(i)] = numerator(s);
        g = boost::multiprecision::gcd(g, numerator(s));
    }
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        Integer q = g == 0 ? Integer(0) : Integer(scaled[static_cast<std::size_t>(i)] / g);
        out(i) = q.convert_to<std::int64_t>();
    }
    return out;
}

std::int64_t gcd_of(const IntVector& v)
{
    std::int64_t g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = std::gcd(g, v(i));
    return g;
}

}  // namespace toricgk
