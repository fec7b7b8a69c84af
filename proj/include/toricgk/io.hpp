// JSON input formats (polytopes, potentials, constant matrices, point lists)
// and the structural checks for emitted reports.

#ifndef TORICGK_IO_HPP
#define TORICGK_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "toricgk/gk_engine.hpp"
#include "toricgk/polytope.hpp"
#include "toricgk/potential.hpp"
#include "toricgk/rational.hpp"

namespace toricgk {

using Json = nlohmann::ordered_json;

/// Whole file as text; ParseError if it cannot be read.
std::string read_text_file(const std::string& path);

/// Text that starts with '[' or '{' is JSON itself; anything else is a path to a JSON file.
std::string json_text_or_file(const std::string& spec);

/// {"dim": n, "facets": [{"normal": [...], "offset": "p/q"}, ...], "name": "..."}
DelzantPolytope parse_polytope(std::string_view json_text);
DelzantPolytope load_polytope(const std::string& path);
Json polytope_to_json(const DelzantPolytope& p);

/// {"type": "guillemin", "correction": [{"coeffs": "p/q", "monomial": [e_1, ...]}]}
SymplecticPotential parse_potential(std::string_view json_text, const DelzantPolytope& p);

/// Square JSON matrix; entries are strings ("p/q", decimals) or JSON numbers, converted exactly.
RatMatrix parse_rational_matrix(std::string_view json_text);
AntiSymMatrix parse_antisym(std::string_view json_text);

/**
 * "x,y;x,y" (coordinates parsed as exact rationals, then rounded) or
 * "sample:N:seed" for sample_interior(p, N, seed).
 */
std::vector<Eigen::VectorXd> parse_points(const std::string& spec, const DelzantPolytope& p);

Json to_json(const Eigen::MatrixXd& m);
Json to_json(const Eigen::VectorXd& v);
Json to_json(const RatMatrix& m);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Eigen::MatrixXcd& m);  // {"re": [[...]], "im": [[...]]}

/// Problems found in a report object; empty when it matches the published schema.
std::vector<std::string> validate_report(const Json& report);

}  // namespace toricgk

#endif
