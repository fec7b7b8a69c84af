#include "toricgk/cli.hpp"

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "toricgk/boundary.hpp"
#include "toricgk/cpn_bracket.hpp"
#include "toricgk/delzant.hpp"
#include "toricgk/gk_engine.hpp"

namespace toricgk {

namespace {

const std::vector<std::pair<Command, std::string>>& command_table()
{
    static const std::vector<std::pair<Command, std::string>> table = {
        {Command::validate, "validate"},
        {Command::tensors, "tensors"},
        {Command::faces, "faces"},
        {Command::boundary, "boundary"},
        {Command::reduce, "reduce"},
        {Command::check_identities, "check-identities"},
        {Command::example_cp1xcp1, "example-cp1xcp1"},
        {Command::example_cp2, "example-cp2"},
        {Command::example_cpn_bracket, "example-cpn-bracket"},
    };
    return table;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name)
{
    for (const auto& [c, s] : command_table())
        if (s == name)
            return c;
    return std::nullopt;
}

std::string command_name(Command c)
{
    for (const auto& [cc, s] : command_table())
        if (cc == c)
            return s;
    return "unknown";
}

std::vector<std::string> command_names()
{
    std::vector<std::string> out;
    for (const auto& entry : command_table())
        out.push_back(entry.second);
    return out;
}

// ---------------------------------------------------------------------------
// Golden CP^1 x CP^1 fixture

GoldenReport golden_cp1xcp1(double c, const Eigen::Vector2d& mu, bool with_dual)
{
    for (int j = 0; j < 2; ++j)
        if (!(mu(j) > 0.0 && mu(j) < 0.5))
            throw DomainError("mu must lie in the open square (0, 1/2)^2");
    if (with_dual && c == 0.0)
        throw DomainError("Q and b' need c != 0 (beta1 is degenerate at c = 0)");

    const DelzantPolytope square = fixtures::square();
    const AntiSymMatrix C = AntiSymMatrix::planar(Rational(c));
    const GKFrame f = assemble_frame(guillemin_potential(square).hessian(mu), C, mu);

    const double m1 = mu(0) * (0.5 - mu(0));
    const double m2 = mu(1) * (0.5 - mu(1));
    GoldenReport r;
    r.p = 1.0 / (16.0 * m1 * m2);
    r.det_phi = f.phi.determinant();
    const double pc = r.p + c * c;

    r.g_closed = Eigen::MatrixXd::Zero(4, 4);
    r.g_closed(0, 0) = 4.0 * r.p / pc * m1;
    r.g_closed(1, 1) = 4.0 * r.p / pc * m2;
    r.g_closed(2, 2) = 1.0 / (4.0 * m1);
    r.g_closed(3, 3) = 1.0 / (4.0 * m2);

    r.b_closed = Eigen::MatrixXd::Zero(4, 4);
    r.b_closed(2, 3) = c;
    r.b_closed(3, 2) = -c;
    r.b_closed(0, 1) = -c / pc;
    r.b_closed(1, 0) = c / pc;

    r.g_engine = f.g;
    r.b_engine = f.b;

    auto compare = [&](const std::string& name, const Eigen::MatrixXd& engine, const Eigen::MatrixXd& closed,
                       double tol) {
        TensorComparison t;
        t.tensor = name;
        t.max_difference = max_abs(engine - closed);
        t.tolerance = tol * std::max(1.0, max_abs(closed));
        t.pass = t.max_difference <= t.tolerance;
        r.comparisons.push_back(t);
    };
    compare("g", r.g_engine, r.g_closed, 1e-10);
    compare("b", r.b_engine, r.b_closed, 1e-10);

    if (with_dual)
    {
        r.Q_closed = Eigen::MatrixXd::Zero(4, 4);
        r.Q_closed(0, 3) = 1.0 / (4.0 * c * m2);
        r.Q_closed(3, 0) = -r.Q_closed(0, 3);
        r.Q_closed(1, 2) = -1.0 / (4.0 * c * m1);
        r.Q_closed(2, 1) = -r.Q_closed(1, 2);

        r.b_prime_closed = Eigen::MatrixXd::Zero(4, 4);
        r.b_prime_closed(0, 1) = r.p / (c * pc);
        r.b_prime_closed(1, 0) = -r.b_prime_closed(0, 1);
        r.b_prime_closed(2, 3) = -r.p / c;
        r.b_prime_closed(3, 2) = r.p / c;

        const Beta1Inverse inv = beta1_inverse(f);
        r.Q_engine = inv.Q;
        r.b_prime_engine = inv.b_prime;
        compare("Q", r.Q_engine, r.Q_closed, 1e-9);
        compare("b_prime", r.b_prime_engine, r.b_prime_closed, 1e-9);
    }
    r.pass = std::all_of(r.comparisons.begin(), r.comparisons.end(), [](const auto& t) { return t.pass; });
    return r;
}

// ---------------------------------------------------------------------------

namespace {

/// Input problems detected while running a command.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v)
{
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

Json int_array(const std::vector<int>& v)
{
    Json j = Json::array();
    for (int x : v)
        j.push_back(x);
    return j;
}

Json base_report(Command c)
{
    Json j;
    j["tool"] = "toric-gk";
    j["schema_version"] = 1;
    j["command"] = command_name(c);
    j["pass"] = false;
    j["failures"] = Json::array();
    return j;
}

DelzantPolytope need_polytope(const RunConfig& cfg)
{
    if (cfg.polytope_path.empty())
        throw InputError("command '" + command_name(cfg.command) + "' needs --polytope");
    return load_polytope(cfg.polytope_path);
}

AntiSymMatrix load_C(const std::string& spec, int n, const char* what)
{
    if (spec.empty())
        return AntiSymMatrix::zero(n);
    AntiSymMatrix C = parse_antisym(json_text_or_file(spec));
    if (C.dim() != n)
        throw InputError(std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
    return C;
}

SymplecticPotential load_potential(const RunConfig& cfg, const DelzantPolytope& p)
{
    if (cfg.potential.empty())
        return guillemin_potential(p);
    return parse_potential(json_text_or_file(cfg.potential), p);
}

std::vector<Eigen::VectorXd> interior_points(const RunConfig& cfg, const DelzantPolytope& p)
{
    std::vector<Eigen::VectorXd> pts = parse_points(cfg.points, p);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!p.contains_strictly(pts[i]))
            throw InputError("point " + std::to_string(i) + " is not strictly inside the polytope");
    return pts;
}

double tolerance(const RunConfig& cfg, double fallback)
{
    const double t = cfg.tol.value_or(fallback);
    if (!(t > 0.0))
        throw InputError("--tol must be positive");
    return t;
}

Json identities_json(const IdentityReport& r)
{
    Json arr = Json::array();
    for (const auto& c : r.checks)
        arr.push_back({{"name", c.name}, {"residual", c.residual}, {"threshold", c.threshold}, {"pass", c.pass}});
    return arr;
}

Json frame_json(const GKFrame& f)
{
    Json j;
    j["point"] = to_json(f.point);
    j["phi_s"] = to_json(f.phi_s);
    j["phi"] = to_json(f.phi);
    j["J_plus"] = to_json(f.J_plus);
    j["J_minus"] = to_json(f.J_minus);
    j["J_zero"] = to_json(f.J_zero);
    j["g"] = to_json(f.g);
    j["b"] = to_json(f.b);
    j["omega"] = to_json(f.omega);
    j["beta1"] = to_json(f.beta1);
    j["b1"] = to_json(f.b1);
    j["beta_hol"] = to_json(f.beta_hol);
    return j;
}

Json probe_json(const BoundaryProbe& p)
{
    return {{"face", int_array(p.face.active_facets)},
            {"codim", p.face.codim},
            {"quantity", p.quantity_name},
            {"verdict", to_string(p.verdict)},
            {"rate", p.rate},
            {"divided_rate", p.divided_rate},
            {"last_difference", p.last_difference},
            {"note", p.note}};
}

Json fixture_json(const ReducedFixtureReport& r)
{
    return {{"pushed", to_json(r.pushed.exact())},
            {"pushforward_matches", r.pushforward_matches},
            {"interior_type_pushed", r.interior_type_pushed},
            {"interior_type_direct", r.interior_type_direct},
            {"frames_identical", r.frames_identical},
            {"poisson_identical", r.poisson_identical},
            {"kahler", r.kahler},
            {"pass", r.pass}};
}

void add_failure(Json& report, const std::string& what)
{
    report["failures"].push_back(what);
}

struct Csv
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string str() const
    {
        std::string s;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                s += (i ? "," : "") + cells[i];
            s += "\n";
        };
        line(header);
        for (const auto& r : rows)
            line(r);
        return s;
    }
};

std::vector<std::string> coord_header(int n)
{
    std::vector<std::string> h;
    for (int a = 1; a <= n; ++a)
        h.push_back("x" + std::to_string(a));
    return h;
}

void append_point(std::vector<std::string>& row, const Eigen::VectorXd& x)
{
    for (Eigen::Index a = 0; a < x.size(); ++a)
        row.push_back(fmt(x(a)));
}

// --- commands ----------------------------------------------------------------

Json cmd_validate(const RunConfig& cfg, Csv*)
{
    const DelzantPolytope p = need_polytope(cfg);
    const DelzantReport rep = validate_delzant(p);
    Json j = base_report(cfg.command);
    j["polytope"] = polytope_to_json(p);
    Json verts = Json::array();
    for (std::size_t i = 0; i < rep.vertices.size(); ++i)
    {
        const VertexCheck& v = rep.vertices[i];
        Json det = v.determinant ? Json(v.determinant->str()) : Json(nullptr);
        verts.push_back({{"point", to_json(v.point)},
                         {"active", int_array(v.active)},
                         {"simple", v.simple},
                         {"determinant", det},
                         {"pass", v.pass}});
        if (!v.pass)
        {
            std::string why = v.simple ? "|det| = " + Integer(abs(*v.determinant)).str() : "not simple";
            add_failure(j, "vertex " + std::to_string(i) + " (facets " + join(v.active) + "): " + why);
        }
    }
    j["vertices"] = verts;
    j["pass"] = rep.pass;
    return j;
}

Json cmd_faces(const RunConfig& cfg, Csv* csv)
{
    const DelzantPolytope p = need_polytope(cfg);
    const AntiSymMatrix C = load_C(cfg.C, p.dim(), "C");
    Json j = base_report(cfg.command);
    j["polytope"] = polytope_to_json(p);
    j["C"] = to_json(C.exact());
    j["interior_type"] = interior_type(C);
    if (csv)
        csv->header = {"face", "codim", "active_facets", "restricted_rank", "ambient_type", "submanifold_type"};
    Json faces = Json::array();
    int idx = 0;
    for (const FaceData& f : enumerate_faces(p))
    {
        const FaceType t = face_type(p, f, C);
        faces.push_back({{"active_facets", int_array(f.active_facets)},
                         {"codim", f.codim},
                         {"subspace_basis", to_json(f.subspace_basis)},
                         {"barycenter", to_json(f.barycenter)},
                         {"inward_direction", to_json(f.inward_direction)},
                         {"vertices", int_array(f.vertices)},
                         {"restricted_rank", t.restricted_rank},
                         {"ambient_type", t.ambient},
                         {"submanifold_type", t.submanifold}});
        if (csv)
            csv->rows.push_back({std::to_string(idx), std::to_string(f.codim), join(f.active_facets, " "),
                                 std::to_string(t.restricted_rank), std::to_string(t.ambient),
                                 std::to_string(t.submanifold)});
        ++idx;
    }
    j["faces"] = faces;
    j["pass"] = true;
    return j;
}

Json cmd_tensors(const RunConfig& cfg, Csv* csv, bool frames)
{
    const DelzantPolytope p = need_polytope(cfg);
    const SymplecticPotential tau = load_potential(cfg, p);
    const AntiSymMatrix C = load_C(cfg.C, p.dim(), "C");
    const double tol = tolerance(cfg, 1e-10);
    const std::vector<Eigen::VectorXd> pts = interior_points(cfg, p);
    const int n = p.dim();

    Json j = base_report(cfg.command);
    j["polytope"] = polytope_to_json(p);
    j["C"] = to_json(C.exact());
    j["tolerance"] = tol;
    if (csv)
    {
        csv->header = {"point"};
        for (const auto& h : coord_header(n))
            csv->header.push_back(h);
        if (frames)
        {
            for (const char* t : {"g", "b"})
                for (int r = 0; r < 2 * n; ++r)
                    for (int c = 0; c < 2 * n; ++c)
                        csv->header.push_back(std::string(t) + "_" + std::to_string(r) + "_" + std::to_string(c));
        }
    }

    Json items = Json::array();
    bool all = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        GKFrame f;
        try
        {
            f = assemble_frame(tau.hessian(pts[i]), C, pts[i]);
        }
        catch (const FrameError& e)
        {
            throw InputError("point " + std::to_string(i) + ": " + e.what());
        }
        const IdentityReport rep = verify_identities(f, tol);
        for (const auto& name : rep.failures())
            add_failure(j, "point " + std::to_string(i) + ": " + name);
        all = all && rep.pass;

        Json item = frames ? frame_json(f) : Json{{"point", to_json(pts[i])}};
        item["identities"] = identities_json(rep);
        item["pass"] = rep.pass;
        items.push_back(item);

        if (csv)
        {
            std::vector<std::string> row{std::to_string(i)};
            append_point(row, pts[i]);
            if (frames)
            {
                for (const Eigen::MatrixXd* m : {&f.g, &f.b})
                    for (int r = 0; r < 2 * n; ++r)
                        for (int c = 0; c < 2 * n; ++c)
                            row.push_back(fmt((*m)(r, c)));
            }
            else
            {
                if (i == 0)
                    for (const auto& c : rep.checks)
                        csv->header.push_back(c.name);
                for (const auto& c : rep.checks)
                    row.push_back(fmt(c.residual));
            }
            csv->rows.push_back(row);
        }
    }
    j[frames ? "frames" : "points"] = items;
    j["pass"] = all;
    return j;
}

Json cmd_boundary(const RunConfig& cfg, Csv* csv)
{
    const DelzantPolytope p = need_polytope(cfg);
    const SymplecticPotential tau = load_potential(cfg, p);
    const AntiSymMatrix C = load_C(cfg.C, p.dim(), "C");
    if (cfg.depth < 0)
        throw InputError("--depth must be non-negative");
    if (cfg.t0 && !(*cfg.t0 > 0.0))
        throw InputError("--t0 must be positive");
    const std::vector<Eigen::VectorXd> pts = interior_points(cfg, p);

    const CompactificationReport rep = compactification_report(p, tau, C, cfg.depth, cfg.t0);
    Json j = base_report(cfg.command);
    j["polytope"] = polytope_to_json(p);
    j["C"] = to_json(C.exact());
    j["depth"] = cfg.depth;
    j["convexity"] = {{"pass", rep.convexity_pass}, {"min_eigenvalue", rep.convexity_min_eigenvalue}};
    if (!rep.convexity_pass)
        add_failure(j, "potential is not strictly convex on the interior samples");

    Json probes = Json::array();
    for (const auto& pr : rep.probes)
    {
        probes.push_back(probe_json(pr));
        if (pr.verdict != Verdict::converges)
            add_failure(j, "face {" + join(pr.face.active_facets) + "}: " + pr.quantity_name + " " +
                               to_string(pr.verdict));
    }
    Json controls = Json::array();
    for (const auto& pr : rep.control_probes)
        controls.push_back(probe_json(pr));
    j["probes"] = probes;
    j["control_probes"] = controls;
    j["control_flagged"] = rep.control_flagged;
    if (rep.convexity_pass && !rep.control_flagged)
        add_failure(j, "control quantity phi_s was not flagged as divergent at every face");

    DetBoundReport det;
    if (rep.convexity_pass)
        det = det_lower_bound_check(tau, C, pts);
    else
        det.pass = false;
    j["det_bound"] = {{"samples", static_cast<int>(det.values.size())},
                      {"min_value", det.values.empty() ? Json(nullptr) : Json(det.min_value)},
                      {"pass", det.pass}};
    if (rep.convexity_pass && !det.pass)
        add_failure(j, "det(I + psi^-1 C) fell below 1");

    if (csv)
    {
        csv->header = {"point"};
        for (const auto& h : coord_header(p.dim()))
            csv->header.push_back(h);
        csv->header.push_back("det_I_plus_psi_inv_C");
        for (std::size_t i = 0; i < det.values.size(); ++i)
        {
            std::vector<std::string> row{std::to_string(i)};
            append_point(row, pts[i]);
            row.push_back(fmt(det.values[i]));
            csv->rows.push_back(row);
        }
    }
    j["pass"] = rep.pass && rep.control_flagged && det.pass;
    return j;
}

Json cmd_reduce(const RunConfig& cfg, Csv*)
{
    const DelzantPolytope p = need_polytope(cfg);
    if (!validate_delzant(p).pass)
        throw InputError("polytope is not Delzant; run 'validate' for details");
    if (cfg.vertex && (*cfg.vertex < 0 || *cfg.vertex >= static_cast<int>(p.vertices().size())))
        throw InputError("--vertex must be in [0, " + std::to_string(p.vertices().size()) + ")");
    const ReductionData R = build_reduction(p, cfg.vertex);

    Json j = base_report(cfg.command);
    j["polytope"] = polytope_to_json(p);
    j["vertex"] = R.chosen_vertex;
    j["vertex_facets"] = int_array(R.vertex_facets);
    j["sigma"] = to_json(R.sigma);
    j["kernel_basis"] = to_json(R.kernel_basis);
    j["right_inverse"] = to_json(R.right_inverse);

    bool ok = true;
    std::optional<AntiSymMatrix> C, C0;
    if (!cfg.C.empty())
    {
        C = load_C(cfg.C, p.dim(), "C");
        const AntiSymMatrix lifted = lift_C(R, *C);
        const bool roundtrip = wedge_pushforward(R, lifted) == *C;
        j["lift"] = {{"C", to_json(C->exact())}, {"C0", to_json(lifted.exact())}, {"roundtrip", roundtrip}};
        ok = ok && roundtrip;
        if (!roundtrip)
            add_failure(j, "lift does not push forward to C");
        if (cfg.C0.empty())
            C0 = lifted;
    }
    if (!cfg.C0.empty())
    {
        C0 = load_C(cfg.C0, p.num_facets(), "C0");
        j["pushforward"] = {{"C0", to_json(C0->exact())}, {"C", to_json(wedge_pushforward(R, *C0).exact())}};
    }
    if (C && C0)
    {
        const ReducedFixtureReport fx = reduced_structure_fixture(R, *C0, *C, interior_points(cfg, p));
        j["fixture"] = fixture_json(fx);
        ok = ok && fx.pass;
        if (!fx.pass)
            add_failure(j, "reduced structure differs from the direct construction");
    }
    j["pass"] = ok;
    return j;
}

std::vector<double> parse_coords(const std::string& text, std::size_t expected, const char* what)
{
    std::vector<double> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(to_double(parse_rational(item)));
    if (out.size() != expected)
        throw InputError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
    return out;
}

Json cmd_cp1xcp1(const RunConfig& cfg, Csv*)
{
    const Rational c = parse_rational(cfg.c);
    const std::vector<double> mu = parse_coords(cfg.mu, 2, "--mu");
    const GoldenReport g = golden_cp1xcp1(to_double(c), Eigen::Vector2d(mu[0], mu[1]), true);

    Json j = base_report(cfg.command);
    j["c"] = to_string(c);
    j["mu"] = {mu[0], mu[1]};
    j["p"] = g.p;
    j["det_phi"] = g.det_phi;
    Json comps = Json::array();
    for (const auto& t : g.comparisons)
    {
        comps.push_back(
            {{"tensor", t.tensor}, {"max_difference", t.max_difference}, {"tolerance", t.tolerance}, {"pass", t.pass}});
        if (!t.pass)
            add_failure(j, t.tensor + " differs from the closed form by " + fmt(t.max_difference));
    }
    j["comparisons"] = comps;
    j["engine"] = {{"g", to_json(g.g_engine)},
                   {"b", to_json(g.b_engine)},
                   {"Q", to_json(g.Q_engine)},
                   {"b_prime", to_json(g.b_prime_engine)}};
    j["closed_form"] = {{"g", to_json(g.g_closed)},
                        {"b", to_json(g.b_closed)},
                        {"Q", to_json(g.Q_closed)},
                        {"b_prime", to_json(g.b_prime_closed)}};
    j["pass"] = g.pass;
    return j;
}

Json cmd_cp2(const RunConfig& cfg, Csv*)
{
    const Rational c1 = parse_rational(cfg.c1), c2 = parse_rational(cfg.c2), c3 = parse_rational(cfg.c3);
    const Rational s = c1 - c2 + c3;
    const DelzantPolytope p = fixtures::cp2_triangle();
    const ReductionData R = build_reduction(p);
    const AntiSymMatrix C = AntiSymMatrix::planar(s);
    const AntiSymMatrix first = cp2_lift(c1, c2, c3);
    const AntiSymMatrix second = lift_C(R, C);
    const std::vector<Eigen::VectorXd> pts = interior_points(cfg, p);

    Json j = base_report(cfg.command);
    j["c"] = {to_string(c1), to_string(c2), to_string(c3)};
    j["combination"] = to_string(s);
    j["C_downstairs"] = to_json(C.exact());
    Json lifts = Json::array();
    bool ok = true;
    for (const AntiSymMatrix* C0 : {&first, &second})
    {
        const ReducedFixtureReport fx = reduced_structure_fixture(R, *C0, C, pts);
        lifts.push_back({{"C0", to_json(C0->exact())},
                         {"pushed", to_json(fx.pushed.exact())},
                         {"fixture_pass", fx.pass},
                         {"kahler", fx.kahler}});
        ok = ok && fx.pass;
        if (!fx.pass)
            add_failure(j, "lift " + std::to_string(lifts.size() - 1) + " does not reproduce the direct frame");
    }
    const SymplecticPotential tau = guillemin_potential(p);
    const AntiSymMatrix a = wedge_pushforward(R, first), b = wedge_pushforward(R, second);
    bool identical = true;
    for (const auto& x : pts)
        identical = identical && bitwise_equal(assemble_frame(tau.hessian(x), a, x), assemble_frame(tau.hessian(x), b, x));
    if (!identical)
        add_failure(j, "the two lifts give different downstairs frames");
    j["lifts"] = lifts;
    j["frames_identical"] = identical;
    j["pass"] = ok && identical;
    return j;
}

RatMatrix random_coefficients(int m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    RatMatrix c = RatMatrix::Zero(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
        {
            c(a, b) = Rational(num(rng), den(rng));
            c(b, a) = -c(a, b);
        }
    return c;
}

Json cmd_cpn(const RunConfig& cfg, Csv*)
{
    if (!(0 < cfg.k && cfg.k < cfg.n))
        throw InputError("need 0 < k < n");
    if (cfg.samples < 1)
        throw InputError("--samples must be positive");
    RatMatrix c = cfg.coefficients.empty() ? random_coefficients(cfg.k - 1, cfg.seed)
                                           : parse_rational_matrix(json_text_or_file(cfg.coefficients));
    const bool control = cfg.k >= 3;
    const CpnBracketReport rep = strong_hamiltonian_check_cpn(cfg.n, cfg.k, c,
                                                              sample_affine_points(cfg.n, cfg.samples, cfg.seed), control);
    Json j = base_report(cfg.command);
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["coefficients"] = to_json(c);
    j["components"] = rep.components;
    j["max_bracket"] = rep.max_bracket;
    j["tolerance"] = kBracketTolerance;
    j["max_control_bracket"] = control ? Json(rep.max_control_bracket) : Json(nullptr);
    if (!rep.pass)
        add_failure(j, "moment components do not Poisson-commute: max bracket " + fmt(rep.max_bracket));
    j["pass"] = rep.pass;
    return j;
}

Json dispatch(const RunConfig& cfg, Csv* csv)
{
    switch (cfg.command)
    {
    case Command::validate:
        return cmd_validate(cfg, csv);
    case Command::faces:
        return cmd_faces(cfg, csv);
    case Command::tensors:
        return cmd_tensors(cfg, csv, true);
    case Command::check_identities:
        return cmd_tensors(cfg, csv, false);
    case Command::boundary:
        return cmd_boundary(cfg, csv);
    case Command::reduce:
        return cmd_reduce(cfg, csv);
    case Command::example_cp1xcp1:
        return cmd_cp1xcp1(cfg, csv);
    case Command::example_cp2:
        return cmd_cp2(cfg, csv);
    case Command::example_cpn_bracket:
        return cmd_cpn(cfg, csv);
    }
    throw InputError("unknown command");
}

bool has_csv(Command c)
{
    return c == Command::faces || c == Command::tensors || c == Command::check_identities || c == Command::boundary;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write '" + path + "'");
    f << text;
    if (!f)
        throw InputError("failed writing '" + path + "'");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    Json report;
    Csv csv;
    try
    {
        if (!cfg.csv_path.empty() && !has_csv(cfg.command))
            throw InputError("--csv is not available for '" + command_name(cfg.command) + "'");
        report = dispatch(cfg, cfg.csv_path.empty() ? nullptr : &csv);
        const std::string text = report.dump(2) + "\n";
        if (cfg.output_path.empty())
            out << text;
        else
        {
            write_file(cfg.output_path, text);
            out << (report["pass"].get<bool>() ? "pass" : "FAIL") << ": " << command_name(cfg.command) << " -> "
                << cfg.output_path << "\n";
        }
        if (!cfg.csv_path.empty())
            write_file(cfg.csv_path, csv.str());
    }
    catch (const std::exception& e)
    {
        err << "toric-gk: input error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (!report["pass"].get<bool>())
    {
        for (const auto& f : report["failures"])
            err << "toric-gk: check failed: " << f.get<std::string>() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace toricgk
