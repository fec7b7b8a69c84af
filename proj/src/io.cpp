#include "toricgk/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace toricgk {

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string json_text_or_file(const std::string& spec)
{
    const auto first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (spec[first] == '[' || spec[first] == '{'))
        return spec;
    return read_text_file(spec);
}

namespace {

Json parse_json(std::string_view text, const char* what)
{
    try
    {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

Rational json_rational(const Json& v, const std::string& where)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (v.is_number())
        return parse_rational(v.dump());
    throw ParseError(where + ": expected a rational string or number");
}

const Json& require(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(where + ": missing key '" + key + "'");
    return obj.at(key);
}

}  // namespace

DelzantPolytope parse_polytope(std::string_view json_text)
{
    const Json j = parse_json(json_text, "polytope");
    const Json& dim = require(j, "dim", "polytope");
    if (!dim.is_number_integer() || dim.get<int>() <= 0)
        throw ParseError("polytope: 'dim' must be a positive integer");
    const int n = dim.get<int>();
    const Json& fs = require(j, "facets", "polytope");
    if (!fs.is_array())
        throw ParseError("polytope: 'facets' must be an array");

    std::vector<Facet> facets;
    for (std::size_t i = 0; i < fs.size(); ++i)
    {
        const std::string where = "polytope facet " + std::to_string(i);
        const Json& normal = require(fs[i], "normal", where);
        if (!normal.is_array() || static_cast<int>(normal.size()) != n)
            throw ParseError(where + ": 'normal' must be an array of " + std::to_string(n) + " integers");
        IntVector u(n);
        for (int a = 0; a < n; ++a)
        {
            if (!normal[static_cast<std::size_t>(a)].is_number_integer())
                throw ParseError(where + ": normal entries must be integers");
            u(a) = normal[static_cast<std::size_t>(a)].get<std::int64_t>();
        }
        facets.push_back({u, json_rational(require(fs[i], "offset", where), where + " offset")});
    }
    std::string name;
    if (j.contains("name"))
    {
        if (!j["name"].is_string())
            throw ParseError("polytope: 'name' must be a string");
        name = j["name"].get<std::string>();
    }
    return DelzantPolytope(n, std::move(facets), std::move(name));
}

DelzantPolytope load_polytope(const std::string& path)
{
    return parse_polytope(read_text_file(path));
}

Json polytope_to_json(const DelzantPolytope& p)
{
    Json j;
    j["dim"] = p.dim();
    Json fs = Json::array();
    for (const auto& f : p.facets())
    {
        Json normal = Json::array();
        for (Eigen::Index a = 0; a < f.normal.size(); ++a)
            normal.push_back(f.normal(a));
        fs.push_back({{"normal", normal}, {"offset", to_string(f.offset)}});
    }
    j["facets"] = fs;
    if (!p.name().empty())
        j["name"] = p.name();
    return j;
}

SymplecticPotential parse_potential(std::string_view json_text, const DelzantPolytope& p)
{
    const Json j = parse_json(json_text, "potential");
    const Json& type = require(j, "type", "potential");
    if (type != "guillemin")
        throw ParseError("potential: only type 'guillemin' is supported");
    std::vector<Monomial> terms;
    if (j.contains("correction"))
    {
        const Json& corr = j["correction"];
        if (!corr.is_array())
            throw ParseError("potential: 'correction' must be an array");
        for (std::size_t i = 0; i < corr.size(); ++i)
        {
            const std::string where = "potential term " + std::to_string(i);
            Monomial m;
            m.coeff = json_rational(require(corr[i], "coeffs", where), where);
            const Json& mono = require(corr[i], "monomial", where);
            if (!mono.is_array() || static_cast<int>(mono.size()) != p.dim())
                throw ParseError(where + ": 'monomial' must list " + std::to_string(p.dim()) + " exponents");
            for (const auto& e : mono)
            {
                if (!e.is_number_integer() || e.get<int>() < 0)
                    throw ParseError(where + ": exponents must be non-negative integers");
                m.exponents.push_back(e.get<int>());
            }
            terms.push_back(std::move(m));
        }
    }
    return with_correction(p, Polynomial(p.dim(), std::move(terms)));
}

RatMatrix parse_rational_matrix(std::string_view json_text)
{
    const Json j = parse_json(json_text, "matrix");
    if (!j.is_array() || j.empty())
        throw ParseError("matrix: expected a non-empty array of rows");
    const std::size_t n = j.size();
    RatMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r)
    {
        if (!j[r].is_array() || j[r].size() != n)
            throw ParseError("matrix: row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                json_rational(j[r][c], "matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    }
    return m;
}

AntiSymMatrix parse_antisym(std::string_view json_text)
{
    return AntiSymMatrix(parse_rational_matrix(json_text));
}

std::vector<Eigen::VectorXd> parse_points(const std::string& spec, const DelzantPolytope& p)
{
    if (spec.rfind("sample:", 0) == 0)
    {
        std::istringstream ss(spec.substr(7));
        std::string count, seed;
        if (!std::getline(ss, count, ':') || !std::getline(ss, seed) || count.empty() || seed.empty())
            throw ParseError("points: expected sample:N:seed");
        try
        {
            const int n = std::stoi(count);
            const unsigned long long s = std::stoull(seed);
            if (n < 1)
                throw ParseError("points: sample count must be positive");
            return sample_interior(p, n, s);
        }
        catch (const std::logic_error&)
        {
            throw ParseError("points: expected sample:N:seed with integer N and seed");
        }
    }
    std::vector<Eigen::VectorXd> out;
    std::istringstream pts(spec);
    std::string item;
    while (std::getline(pts, item, ';'))
    {
        if (item.find_first_not_of(' ') == std::string::npos)
            continue;
        std::vector<double> coords;
        std::istringstream cs(item);
        std::string c;
        while (std::getline(cs, c, ','))
            coords.push_back(to_double(parse_rational(c)));
        if (static_cast<int>(coords.size()) != p.dim())
            throw ParseError("points: '" + item + "' does not have " + std::to_string(p.dim()) + " coordinates");
        out.push_back(Eigen::Map<Eigen::VectorXd>(coords.data(), p.dim()));
    }
    if (out.empty())
        throw ParseError("points: no points given");
    return out;
}

Json to_json(const Eigen::MatrixXd& m)
{
    Json j = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
    {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c) == 0.0 ? 0.0 : m(r, c));
        j.push_back(row);
    }
    return j;
}

Json to_json(const Eigen::VectorXd& v)
{
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        j.push_back(v(i));
    return j;
}

Json to_json(const RatMatrix& m)
{
    Json j = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
    {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        j.push_back(row);
    }
    return j;
}

Json to_json(const RatVector& v)
{
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        j.push_back(to_string(v(i)));
    return j;
}

Json to_json(const IntMatrix& m)
{
    Json j = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
    {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        j.push_back(row);
    }
    return j;
}

Json to_json(const Eigen::MatrixXcd& m)
{
    return {{"re", to_json(Eigen::MatrixXd(m.real()))}, {"im", to_json(Eigen::MatrixXd(m.imag()))}};
}

// ---------------------------------------------------------------------------
// Report schema

namespace {

enum class T
{
    String,
    Bool,
    Int,
    Number,
    NumberOrNull,
    StringOrNull,
    Array,
    Object
};

struct Field
{
    const char* key;
    T type;
};

bool has_type(const Json& v, T t)
{
    switch (t)
    {
    case T::String:
        return v.is_string();
    case T::Bool:
        return v.is_boolean();
    case T::Int:
        return v.is_number_integer();
    case T::Number:
        return v.is_number();
    case T::NumberOrNull:
        return v.is_number() || v.is_null();
    case T::StringOrNull:
        return v.is_string() || v.is_null();
    case T::Array:
        return v.is_array();
    case T::Object:
        return v.is_object();
    }
    return false;
}

void check_fields(const Json& obj, const std::vector<Field>& fields, const std::string& where,
                  std::vector<std::string>& errors)
{
    if (!obj.is_object())
    {
        errors.push_back(where + ": expected an object");
        return;
    }
    for (const auto& f : fields)
    {
        if (!obj.contains(f.key))
            errors.push_back(where + ": missing '" + f.key + "'");
        else if (!has_type(obj.at(f.key), f.type))
            errors.push_back(where + ": '" + f.key + "' has the wrong type");
    }
}

void check_items(const Json& obj, const char* key, const std::vector<Field>& fields, std::vector<std::string>& errors)
{
    if (!obj.contains(key) || !obj.at(key).is_array())
        return;
    const Json& arr = obj.at(key);
    for (std::size_t i = 0; i < arr.size(); ++i)
        check_fields(arr[i], fields, std::string(key) + "[" + std::to_string(i) + "]", errors);
}

const std::vector<Field> kIdentityFields = {
    {"name", T::String}, {"residual", T::Number}, {"threshold", T::Number}, {"pass", T::Bool}};

const std::vector<Field> kProbeFields = {{"face", T::Array},         {"codim", T::Int},
                                         {"quantity", T::String},    {"verdict", T::String},
                                         {"rate", T::NumberOrNull},  {"divided_rate", T::NumberOrNull},
                                         {"last_difference", T::Number}, {"note", T::String}};

}  // namespace

std::vector<std::string> validate_report(const Json& report)
{
    std::vector<std::string> errors;
    check_fields(report,
                 {{"tool", T::String},
                  {"schema_version", T::Int},
                  {"command", T::String},
                  {"pass", T::Bool},
                  {"failures", T::Array}},
                 "report", errors);
    if (!errors.empty())
        return errors;
    if (report["tool"] != "toric-gk")
        errors.push_back("report: 'tool' must be \"toric-gk\"");
    if (report["schema_version"] != 1)
        errors.push_back("report: unsupported schema_version");
    for (const auto& f : report["failures"])
        if (!f.is_string())
            errors.push_back("report: 'failures' entries must be strings");

    const std::string cmd = report["command"].get<std::string>();
    if (cmd == "validate")
    {
        check_fields(report, {{"polytope", T::Object}, {"vertices", T::Array}}, "validate", errors);
        check_items(report, "vertices",
                    {{"point", T::Array},
                     {"active", T::Array},
                     {"simple", T::Bool},
                     {"determinant", T::StringOrNull},
                     {"pass", T::Bool}},
                    errors);
    }
    else if (cmd == "faces")
    {
        check_fields(report, {{"polytope", T::Object}, {"C", T::Array}, {"interior_type", T::Int}, {"faces", T::Array}},
                     "faces", errors);
        check_items(report, "faces",
                    {{"active_facets", T::Array},
                     {"codim", T::Int},
                     {"subspace_basis", T::Array},
                     {"barycenter", T::Array},
                     {"inward_direction", T::Array},
                     {"vertices", T::Array},
                     {"restricted_rank", T::Int},
                     {"ambient_type", T::Int},
                     {"submanifold_type", T::Int}},
                    errors);
    }
    else if (cmd == "tensors")
    {
        check_fields(report, {{"polytope", T::Object}, {"C", T::Array}, {"tolerance", T::Number}, {"frames", T::Array}},
                     "tensors", errors);
        check_items(report, "frames",
                    {{"point", T::Array},   {"phi_s", T::Array},   {"phi", T::Array},     {"J_plus", T::Array},
                     {"J_minus", T::Array}, {"J_zero", T::Array},  {"g", T::Array},       {"b", T::Array},
                     {"omega", T::Array},   {"beta1", T::Array},   {"b1", T::Array},      {"beta_hol", T::Object},
                     {"identities", T::Array}, {"pass", T::Bool}},
                    errors);
    }
    else if (cmd == "check-identities")
    {
        check_fields(report, {{"polytope", T::Object}, {"C", T::Array}, {"tolerance", T::Number}, {"points", T::Array}},
                     "check-identities", errors);
        check_items(report, "points", {{"point", T::Array}, {"identities", T::Array}, {"pass", T::Bool}}, errors);
        if (report.contains("points") && report["points"].is_array())
            for (const auto& p : report["points"])
                if (p.is_object() && p.contains("identities"))
                    check_items(p, "identities", kIdentityFields, errors);
    }
    else if (cmd == "boundary")
    {
        check_fields(report,
                     {{"polytope", T::Object},
                      {"C", T::Array},
                      {"depth", T::Int},
                      {"convexity", T::Object},
                      {"probes", T::Array},
                      {"control_probes", T::Array},
                      {"control_flagged", T::Bool},
                      {"det_bound", T::Object}},
                     "boundary", errors);
        check_items(report, "probes", kProbeFields, errors);
        check_items(report, "control_probes", kProbeFields, errors);
        if (report.contains("convexity"))
            check_fields(report["convexity"], {{"pass", T::Bool}, {"min_eigenvalue", T::Number}}, "convexity", errors);
        if (report.contains("det_bound"))
            check_fields(report["det_bound"], {{"samples", T::Int}, {"min_value", T::NumberOrNull}, {"pass", T::Bool}},
                         "det_bound", errors);
    }
    else if (cmd == "reduce")
    {
        check_fields(report,
                     {{"polytope", T::Object},
                      {"vertex", T::Int},
                      {"vertex_facets", T::Array},
                      {"sigma", T::Array},
                      {"kernel_basis", T::Array},
                      {"right_inverse", T::Array}},
                     "reduce", errors);
        if (report.contains("lift"))
            check_fields(report["lift"], {{"C", T::Array}, {"C0", T::Array}, {"roundtrip", T::Bool}}, "lift", errors);
        if (report.contains("pushforward"))
            check_fields(report["pushforward"], {{"C0", T::Array}, {"C", T::Array}}, "pushforward", errors);
        if (report.contains("fixture"))
            check_fields(report["fixture"],
                         {{"pushforward_matches", T::Bool},
                          {"interior_type_pushed", T::Int},
                          {"interior_type_direct", T::Int},
                          {"frames_identical", T::Bool},
                          {"poisson_identical", T::Bool},
                          {"kahler", T::Bool},
                          {"pass", T::Bool}},
                         "fixture", errors);
    }
    else if (cmd == "example-cp1xcp1")
    {
        check_fields(report,
                     {{"c", T::String},
                      {"mu", T::Array},
                      {"p", T::Number},
                      {"det_phi", T::Number},
                      {"comparisons", T::Array},
                      {"engine", T::Object},
                      {"closed_form", T::Object}},
                     "example-cp1xcp1", errors);
        check_items(report, "comparisons",
                    {{"tensor", T::String}, {"max_difference", T::Number}, {"tolerance", T::Number}, {"pass", T::Bool}},
                    errors);
    }
    else if (cmd == "example-cp2")
    {
        check_fields(report,
                     {{"c", T::Array},
                      {"combination", T::String},
                      {"C_downstairs", T::Array},
                      {"lifts", T::Array},
                      {"frames_identical", T::Bool}},
                     "example-cp2", errors);
        check_items(report, "lifts", {{"C0", T::Array}, {"fixture_pass", T::Bool}, {"kahler", T::Bool}}, errors);
    }
    else if (cmd == "example-cpn-bracket")
    {
        check_fields(report,
                     {{"n", T::Int},
                      {"k", T::Int},
                      {"samples", T::Int},
                      {"seed", T::Int},
                      {"coefficients", T::Array},
                      {"components", T::Int},
                      {"max_bracket", T::Number},
                      {"tolerance", T::Number},
                      {"max_control_bracket", T::NumberOrNull}},
                     "example-cpn-bracket", errors);
    }
    else
        errors.push_back("report: unknown command '" + cmd + "'");
    return errors;
}

}  // namespace toricgk
