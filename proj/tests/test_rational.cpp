#include <doctest.h>

#include "toricgk/rational.hpp"

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

}  // namespace

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational(" 1/4 ") == Rational(1, 4));
    CHECK(parse_rational("010") == Rational(10));
    CHECK(parse_rational("-007/08") == Rational(-7, 8));
    CHECK(parse_rational("0.0625") == Rational(1, 16));
    CHECK(parse_rational("-0") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed text")
{
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("to_string is canonical")
{
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("rank, determinant and inverse of small matrices")
{
    const RatMatrix a = rat({{2, 1}, {1, 1}});
    CHECK(rank(a) == 2);
    CHECK(determinant(a) == Rational(1));
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((*inv)(0, 0) == Rational(1));
    CHECK((*inv)(0, 1) == Rational(-1));
    CHECK((*inv)(1, 1) == Rational(2));
    CHECK(RatMatrix(a * *inv) == RatMatrix::Identity(2, 2));

    const RatMatrix s = rat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(s) == 2);
    CHECK(determinant(s) == Rational(0));
    CHECK_FALSE(inverse(s));
}

TEST_CASE("nullspace columns are annihilated and span the kernel")
{
    const RatMatrix sigma = rat({{1, 0, -1}, {0, 1, -1}});
    const RatMatrix k = nullspace(sigma);
    REQUIRE(k.cols() == 1);
    CHECK(RatMatrix(sigma * k).isZero());
    CHECK(k(0, 0) == k(1, 0));
    CHECK(k(1, 0) == k(2, 0));

    CHECK(nullspace(RatMatrix::Identity(3, 3)).cols() == 0);
    CHECK(nullspace(RatMatrix::Zero(2, 3)).cols() == 3);
}

TEST_CASE("rref pivots")
{
    std::vector<int> pivots;
    const RatMatrix r = rref(rat({{0, 2, 4}, {1, 1, 1}}), &pivots);
    CHECK(pivots == std::vector<int>{0, 1});
    CHECK(r(0, 0) == Rational(1));
    CHECK(r(1, 2) == Rational(2));
}

TEST_CASE("primitive_integer scales to the primitive ray vector")
{
    RatVector v(2);
    v << Rational(1, 2), Rational(1, 3);
    const IntVector p = primitive_integer(v);
    CHECK(p(0) == 3);
    CHECK(p(1) == 2);

    IntVector w(3);
    w << 4, -6, 8;
    CHECK(gcd_of(w) == 2);
}

TEST_CASE("to_double is correctly rounded")
{
    CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
    CHECK(to_double(Rational(-1, 8)) == -0.125);
}
