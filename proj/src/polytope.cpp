#include "toricgk/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace toricgk {

namespace {

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& f)
{
    if (k > n || k < 0)
        return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true)
    {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

RatMatrix rows_of(const std::vector<Facet>& facets, const std::vector<int>& which, int dim)
{
    RatMatrix m(static_cast<Eigen::Index>(which.size()), dim);
    for (std::size_t r = 0; r < which.size(); ++r)
        m.row(static_cast<Eigen::Index>(r)) = to_rational(facets[static_cast<std::size_t>(which[r])].normal).transpose();
    return m;
}

Rational dot(const IntVector& u, const RatVector& x)
{
    Rational s = 0;
    for (Eigen::Index i = 0; i < u.size(); ++i)
        s += Rational(u(i)) * x(i);
    return s;
}

}  // namespace

DelzantPolytope::DelzantPolytope(int dim, std::vector<Facet> facets, std::string name)
    : dim_(dim), facets_(std::move(facets)), name_(std::move(name))
{
    if (dim_ < 1)
        throw PolytopeError("dimension must be positive");
    if (static_cast<int>(facets_.size()) < dim_ + 1)
        throw PolytopeError("unbounded: fewer than dim + 1 facets");
    for (std::size_t j = 0; j < facets_.size(); ++j)
    {
        const auto& u = facets_[j].normal;
        if (u.size() != dim_)
            throw PolytopeError("facet " + std::to_string(j) + ": normal has wrong dimension");
        std::int64_t g = gcd_of(u);
        if (g == 0)
            throw PolytopeError("facet " + std::to_string(j) + ": zero normal");
        if (g != 1)
            throw PolytopeError("facet " + std::to_string(j) + ": normal is not primitive (gcd " + std::to_string(g) +
                                ")");
    }

    const int d = num_facets();
    std::vector<int> all(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        all[static_cast<std::size_t>(j)] = j;
    if (rank(rows_of(facets_, all, dim_)) < dim_)
        throw PolytopeError("unbounded: facet normals do not span");

    // The recession cone {v : <u_j, v> >= 0} is pointed here, so it is
    // nontrivial iff it has an extreme ray cut out by dim-1 independent facets.
    for_each_subset(d, dim_ - 1, [&](const std::vector<int>& subset) {
        RatMatrix ker = nullspace(rows_of(facets_, subset, dim_));
        if (ker.cols() != 1)
            return;
        for (int sign : {1, -1})
        {
            RatVector v = ker.col(0) * Rational(sign);
            bool feasible = true;
            for (const auto& f : facets_)
                if (dot(f.normal, v) < 0)
                {
                    feasible = false;
                    break;
                }
            if (feasible)
                throw PolytopeError("unbounded: recession direction exists");
        }
    });

    std::map<std::vector<Rational>, Vertex> found;
    for_each_subset(d, dim_, [&](const std::vector<int>& subset) {
        RatMatrix a = rows_of(facets_, subset, dim_);
        auto inv = inverse(a);
        if (!inv)
            return;
        RatVector rhs(dim_);
        for (int i = 0; i < dim_; ++i)
            rhs(i) = facets_[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])].offset;
        RatVector x = (*inv) * rhs;
        std::vector<int> active;
        for (int j = 0; j < d; ++j)
        {
            Rational s = slack(j, x);
            if (s < 0)
                return;
            if (s == 0)
                active.push_back(j);
        }
        std::vector<Rational> key(x.data(), x.data() + x.size());
        found.emplace(std::move(key), Vertex{x, std::move(active)});
    });
    if (found.empty())
        throw PolytopeError("empty: no feasible vertex");

    for (auto& kv : found)
        vertices_.push_back(std::move(kv.second));
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return a.active < b.active; });

    center_ = RatVector::Zero(dim_);
    for (const auto& v : vertices_)
        center_ += v.point;
    center_ /= Rational(static_cast<long>(vertices_.size()));
    for (int j = 0; j < d; ++j)
        if (slack(j, center_) <= 0)
            throw PolytopeError("empty interior: facet " + std::to_string(j) + " is tight on the whole polytope");
}

Rational DelzantPolytope::slack(int facet, const RatVector& x) const
{
    const auto& f = facets_.at(static_cast<std::size_t>(facet));
    return dot(f.normal, x) - f.offset;
}

double DelzantPolytope::slack(int facet, const Eigen::VectorXd& x) const
{
    const auto& f = facets_.at(static_cast<std::size_t>(facet));
    return f.normal.cast<double>().dot(x) - to_double(f.offset);
}

double DelzantPolytope::min_slack(const Eigen::VectorXd& x) const
{
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < num_facets(); ++j)
        m = std::min(m, slack(j, x));
    return m;
}

IntMatrix DelzantPolytope::normal_matrix() const
{
    IntMatrix m(dim_, num_facets());
    for (int j = 0; j < num_facets(); ++j)
        m.col(j) = facets_[static_cast<std::size_t>(j)].normal;
    return m;
}

DelzantReport validate_delzant(const DelzantPolytope& p)
{
    DelzantReport report;
    report.pass = true;
    for (const auto& v : p.vertices())
    {
        VertexCheck check;
        check.point = v.point;
        check.active = v.active;
        check.simple = static_cast<int>(v.active.size()) == p.dim();
        if (check.simple)
        {
            Rational det = determinant(rows_of(p.facets(), v.active, p.dim()));
            check.determinant = numerator(det);
            check.pass = abs(det) == 1;
        }
        report.pass = report.pass && check.pass;
        report.vertices.push_back(std::move(check));
    }
    return report;
}

std::vector<FaceData> enumerate_faces(const DelzantPolytope& p)
{
    const int n = p.dim();
    const auto& verts = p.vertices();

    // Candidate active sets: all subsets of each vertex's active set, then
    // closed under "facets containing every vertex of the face".
    std::set<std::vector<int>> seen;
    std::vector<FaceData> faces;
    for (const auto& v : verts)
    {
        const int m = static_cast<int>(v.active.size());
        for (int k = 0; k <= std::min(m, n); ++k)
        {
            for_each_subset(m, k, [&](const std::vector<int>& pick) {
                std::vector<int> cand;
                for (int i : pick)
                    cand.push_back(v.active[static_cast<std::size_t>(i)]);

                std::vector<int> members;
                for (std::size_t vi = 0; vi < verts.size(); ++vi)
                    if (std::includes(verts[vi].active.begin(), verts[vi].active.end(), cand.begin(), cand.end()))
                        members.push_back(static_cast<int>(vi));

                std::vector<int> closure;
                for (int j = 0; j < p.num_facets(); ++j)
                {
                    bool on_all = std::all_of(members.begin(), members.end(), [&](int vi) {
                        const auto& act = verts[static_cast<std::size_t>(vi)].active;
                        return std::binary_search(act.begin(), act.end(), j);
                    });
                    if (on_all)
                        closure.push_back(j);
                }
                if (!seen.insert(closure).second)
                    return;

                FaceData face;
                face.active_facets = closure;
                face.vertices = members;
                RatMatrix normals = rows_of(p.facets(), closure, n);
                face.codim = closure.empty() ? 0 : rank(normals);
                face.subspace_basis = closure.empty() ? RatMatrix(RatMatrix::Identity(n, n)) : nullspace(normals);
                face.barycenter = RatVector::Zero(n);
                for (int vi : members)
                    face.barycenter += verts[static_cast<std::size_t>(vi)].point;
                face.barycenter /= Rational(static_cast<long>(members.size()));
                if (closure.empty())
                {
                    face.barycenter = p.center();
                    face.inward_direction = RatVector::Zero(n);
                }
                else
                {
                    face.inward_direction = p.center() - face.barycenter;
                }
                faces.push_back(std::move(face));
            });
        }
    }
    std::sort(faces.begin(), faces.end(), [](const FaceData& a, const FaceData& b) {
        if (a.codim != b.codim)
            return a.codim < b.codim;
        return a.active_facets < b.active_facets;
    });
    return faces;
}

double interior_margin(const DelzantPolytope& p)
{
    const Eigen::VectorXd c = to_double(p.center());
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < p.num_facets(); ++j)
    {
        double norm = p.facets()[static_cast<std::size_t>(j)].normal.cast<double>().norm();
        best = std::min(best, p.slack(j, c) / norm);
    }
    return 1e-3 * best;
}

std::vector<Eigen::VectorXd> sample_interior(const DelzantPolytope& p, int count, std::uint64_t seed)
{
    if (count < 1)
        throw std::invalid_argument("sample_interior: count must be >= 1");
    const int n = p.dim();
    const double margin = interior_margin(p);
    const Eigen::VectorXd c = to_double(p.center());

    Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    Eigen::VectorXd hi = -lo;
    std::vector<Eigen::VectorXd> verts;
    for (const auto& v : p.vertices())
    {
        verts.push_back(to_double(v.point));
        lo = lo.cwiseMin(verts.back());
        hi = hi.cwiseMax(verts.back());
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    constexpr int kMaxRejections = 4096;

    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count)
    {
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxRejections && !accepted; ++attempt)
        {
            Eigen::VectorXd x(n);
            for (int i = 0; i < n; ++i)
                x(i) = lo(i) + (hi(i) - lo(i)) * unit(rng);
            if (p.min_slack(x) >= margin)
            {
                out.push_back(std::move(x));
                accepted = true;
            }
        }
        if (accepted)
            continue;
        // Random convex combination pulled slightly toward the center keeps
        // every slack at least 1e-3 of its value at the center.
        Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
        double total = 0.0;
        for (const auto& v : verts)
        {
            double w = expo(rng);
            y += w * v;
            total += w;
        }
        y /= total;
        Eigen::VectorXd x = c + (1.0 - 1e-3) * (y - c);
        if (p.min_slack(x) >= margin)
            out.push_back(std::move(x));
    }
    return out;
}

std::vector<double> face_approach_steps(const DelzantPolytope& p, const FaceData& face, int depth,
                                        std::optional<double> t0)
{
    if (face.codim < 1)
        throw std::invalid_argument("face_approach_sequence: face must have codim >= 1");
    if (depth < 0)
        throw std::invalid_argument("face_approach_sequence: depth must be >= 0");
    const Eigen::VectorXd dir = to_double(face.inward_direction);
    const double dist = dir.norm();
    const Eigen::VectorXd unit = dir / dist;
    const Eigen::VectorXd base = to_double(face.barycenter);
    double start = t0.value_or(0.25 * dist);
    if (!(start > 0.0))
        throw std::invalid_argument("face_approach_sequence: t0 must be positive");

    for (int shrink = 0; shrink < 64; ++shrink)
    {
        std::vector<double> steps;
        bool inside = true;
        for (int m = 0; m < depth && inside; ++m)
        {
            double t = std::ldexp(start, -m);
            inside = p.contains_strictly(base + t * unit);
            steps.push_back(t);
        }
        if (inside)
            return steps;
        start *= 0.5;
    }
    throw PolytopeError("face_approach_sequence: no interior step along the inward direction");
}

std::vector<Eigen::VectorXd> face_approach_sequence(const DelzantPolytope& p, const FaceData& face, int depth,
                                                    std::optional<double> t0)
{
    std::vector<double> steps = face_approach_steps(p, face, depth, t0);
    const Eigen::VectorXd dir = to_double(face.inward_direction);
    const Eigen::VectorXd unit = dir / dir.norm();
    const Eigen::VectorXd base = to_double(face.barycenter);
    std::vector<Eigen::VectorXd> out;
    out.reserve(steps.size());
    for (double t : steps)
        out.push_back(base + t * unit);
    return out;
}

namespace fixtures {

namespace {

Facet facet(std::initializer_list<std::int64_t> normal, Rational offset)
{
    IntVector u(static_cast<Eigen::Index>(normal.size()));
    Eigen::Index i = 0;
    for (auto x : normal)
        u(i++) = x;
    return Facet{u, std::move(offset)};
}

}  // namespace

DelzantPolytope square()
{
    return DelzantPolytope(2,
                           {facet({1, 0}, 0), facet({-1, 0}, Rational(-1, 2)), facet({0, 1}, 0),
                            facet({0, -1}, Rational(-1, 2))},
                           "square");
}

DelzantPolytope cp2_triangle()
{
    return DelzantPolytope(2, {facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, -1}, -1)}, "cp2");
}

DelzantPolytope simplex(int n)
{
    std::vector<Facet> facets;
    for (int i = 0; i < n; ++i)
    {
        IntVector u = IntVector::Zero(n);
        u(i) = 1;
        facets.push_back({u, 0});
    }
    facets.push_back({IntVector::Constant(n, -1), -1});
    return DelzantPolytope(n, std::move(facets), "simplex" + std::to_string(n));
}

DelzantPolytope box(const std::vector<Rational>& sides)
{
    const int n = static_cast<int>(sides.size());
    std::vector<Facet> facets;
    for (int i = 0; i < n; ++i)
    {
        IntVector u = IntVector::Zero(n);
        u(i) = 1;
        facets.push_back({u, 0});
        facets.push_back({IntVector(-u), Rational(-sides[static_cast<std::size_t>(i)])});
    }
    return DelzantPolytope(n, std::move(facets), "box" + std::to_string(n));
}

}  // namespace fixtures

}  // namespace toricgk
