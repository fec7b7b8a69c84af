// Exact rational scalars and the small amount of exact linear algebra the
// lattice side of the library needs (rank, determinant, inverse, nullspace).

#ifndef TORICGK_RATIONAL_HPP
#define TORICGK_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace toricgk {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Thrown for malformed textual or JSON input.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Parse an exact rational from text. Accepted forms: "p/q", "p", and
 * decimal literals such as "-0.125" or "1e-3" (converted exactly).
 */
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

double to_double(const Rational& q);
Eigen::MatrixXd to_double(const RatMatrix& m);
Eigen::VectorXd to_double(const RatVector& v);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
RatMatrix rref(RatMatrix m, std::vector<int>* pivots = nullptr);

int rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Columns form a basis of {x : m x = 0}; n x 0 when the kernel is trivial.
RatMatrix nullspace(const RatMatrix& m);

/// Scale a rational vector to the primitive integer vector on its ray.
IntVector primitive_integer(const RatVector& v);

std::int64_t gcd_of(const IntVector& v);

}  // namespace toricgk

#endif
