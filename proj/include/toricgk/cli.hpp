// Batch front end behind the toric-gk executable. run() never throws for bad
// input; it reports on `err` and returns an exit code.

#ifndef TORICGK_CLI_HPP
#define TORICGK_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/io.hpp"

namespace toricgk {

enum class Command
{
    validate,
    tensors,
    faces,
    boundary,
    reduce,
    check_identities,
    example_cp1xcp1,
    example_cp2,
    example_cpn_bracket
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);
std::vector<std::string> command_names();

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig
{
    Command command = Command::validate;
    std::string polytope_path;
    std::string potential;  // JSON text or path; empty means plain Guillemin
    std::string C;          // JSON text or path; empty means zero
    std::string C0;
    std::string points = "sample:5:0";
    std::optional<double> tol;
    int depth = 8;
    std::optional<double> t0;
    std::optional<int> vertex;
    std::string output_path;  // empty: report goes to the output stream
    std::string csv_path;

    // example-cp1xcp1
    std::string c = "1";
    std::string mu = "1/4,1/4";
    // example-cp2
    std::string c1 = "1", c2 = "0", c3 = "0";
    // example-cpn-bracket
    int n = 4;
    int k = 3;
    int samples = 50;
    std::uint64_t seed = 0;
    std::string coefficients;  // JSON (k-1) x (k-1); empty means seeded random
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct TensorComparison
{
    std::string tensor;
    double max_difference = 0.0;
    double tolerance = 0.0;  // absolute tolerance times max(1, max-abs closed-form entry)
    bool pass = false;
};

struct GoldenReport
{
    double p = 0.0;
    double det_phi = 0.0;
    Eigen::MatrixXd g_engine, g_closed, b_engine, b_closed;
    Eigen::MatrixXd Q_engine, Q_closed, b_prime_engine, b_prime_closed;  // empty when not requested
    std::vector<TensorComparison> comparisons;
    bool pass = false;
};

/**
 * Closed forms on the square [0, 1/2]^2 with the Guillemin potential and
 * C = [[0, c], [-c, 0]], against the engine. g and b to 1e-10, Q and b'
 * to 1e-9. DomainError if mu is not interior, or if c = 0 and with_dual.
 */
GoldenReport golden_cp1xcp1(double c, const Eigen::Vector2d& mu, bool with_dual = true);

}  // namespace toricgk

#endif
