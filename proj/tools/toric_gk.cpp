// toric-gk: command-line driver for the toricgk library.

#include <iostream>

#include <CLI11.hpp>

#include "toricgk/cli.hpp"

using toricgk::Command;
using toricgk::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, bool polytope)
{
    if (polytope)
    {
        sub->add_option("--polytope,polytope", cfg.polytope_path, "Polytope JSON file");
    }
    sub->add_option("--out", cfg.output_path, "Write the JSON report here instead of stdout");
}

void add_points(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--points", cfg.points, "'x,y;x,y' or sample:N:seed")->capture_default_str();
}

void add_C(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--C", cfg.C, "Anti-symmetric n x n matrix, JSON text or file");
}

void add_potential(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--potential", cfg.potential, "Potential spec, JSON text or file (default: Guillemin)");
}

void add_csv(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--csv", cfg.csv_path, "Also write a CSV table for plotting");
}

void add_tol(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--tol", cfg.tol, "Identity tolerance (default 1e-10)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Anti-diagonal toric generalized Kahler structures from Delzant polytope data"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* validate = app.add_subcommand("validate", "Check the Delzant condition at every vertex");
    add_common(validate, cfg, true);

    auto* faces = app.add_subcommand("faces", "List faces with their type data");
    add_common(faces, cfg, true);
    add_C(faces, cfg);
    add_csv(faces, cfg);

    auto* tensors = app.add_subcommand("tensors", "Assemble tensor frames at interior points");
    add_common(tensors, cfg, true);
    add_C(tensors, cfg);
    add_potential(tensors, cfg);
    add_points(tensors, cfg);
    add_tol(tensors, cfg);
    add_csv(tensors, cfg);

    auto* ids = app.add_subcommand("check-identities", "Verify the frame identities at interior points");
    add_common(ids, cfg, true);
    add_C(ids, cfg);
    add_potential(ids, cfg);
    add_points(ids, cfg);
    add_tol(ids, cfg);
    add_csv(ids, cfg);

    auto* boundary = app.add_subcommand("boundary", "Probe boundary behaviour on every face");
    add_common(boundary, cfg, true);
    add_C(boundary, cfg);
    add_potential(boundary, cfg);
    add_points(boundary, cfg);
    add_csv(boundary, cfg);
    boundary->add_option("--depth", cfg.depth, "Length of each approach sequence")->capture_default_str();
    boundary->add_option("--t0", cfg.t0, "First step of each approach sequence");

    auto* reduce = app.add_subcommand("reduce", "Reduction data, lifts and pushforwards of C");
    add_common(reduce, cfg, true);
    add_C(reduce, cfg);
    add_points(reduce, cfg);
    reduce->add_option("--C0", cfg.C0, "Anti-symmetric d x d matrix, JSON text or file");
    reduce->add_option("--vertex", cfg.vertex, "Vertex index for the right inverse (default 0)");

    auto* cp1 = app.add_subcommand("example-cp1xcp1", "Compare the CP1 x CP1 closed forms with the engine");
    add_common(cp1, cfg, false);
    cp1->add_option("--c", cfg.c, "Constant c of C = [[0, c], [-c, 0]]")->capture_default_str();
    cp1->add_option("--mu", cfg.mu, "Point mu1,mu2 in (0, 1/2)^2")->capture_default_str();

    auto* cp2 = app.add_subcommand("example-cp2", "Lifts c1 e1^e2 + c2 e1^e3 + c3 e2^e3 on CP2");
    add_common(cp2, cfg, false);
    add_points(cp2, cfg);
    cp2->add_option("--c1", cfg.c1)->capture_default_str();
    cp2->add_option("--c2", cfg.c2)->capture_default_str();
    cp2->add_option("--c3", cfg.c3)->capture_default_str();

    auto* cpn = app.add_subcommand("example-cpn-bracket", "Moment-component brackets on the affine chart of CPn");
    add_common(cpn, cfg, false);
    cpn->add_option("--n", cfg.n)->capture_default_str();
    cpn->add_option("--k", cfg.k)->capture_default_str();
    cpn->add_option("--samples", cfg.samples)->capture_default_str();
    cpn->add_option("--seed", cfg.seed)->capture_default_str();
    cpn->add_option("--coefficients", cfg.coefficients, "(k-1) x (k-1) anti-symmetric matrix (default: seeded)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : toricgk::kExitInputError;
    }

    for (CLI::App* sub : app.get_subcommands())
        cfg.command = *toricgk::parse_command(sub->get_name());
    return toricgk::run(cfg, std::cout, std::cerr);
}
