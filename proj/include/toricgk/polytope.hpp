// Delzant polytopes given by facet inequalities <u_j, x> >= lambda_j, with
// exact vertex/face combinatorics and seeded interior sampling.

#ifndef TORICGK_POLYTOPE_HPP
#define TORICGK_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toricgk/rational.hpp"

namespace toricgk {

/// One facet inequality <normal, x> >= offset.
struct Facet
{
    IntVector normal;
    Rational offset;
};

/// Raised when a polytope description violates a structural invariant.
class PolytopeError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Vertex
{
    RatVector point;
    std::vector<int> active;  // facet indices tight at the point, ascending
};

/**
 * A face of the polytope. The interior is represented as the codim-0 face
 * with no active facets and a zero inward direction.
 */
struct FaceData
{
    std::vector<int> active_facets;
    int codim = 0;
    RatMatrix subspace_basis;  // n x (n - codim), columns span V_F
    RatVector barycenter;      // mean of the face's vertices
    RatVector inward_direction;
    std::vector<int> vertices;  // indices into DelzantPolytope::vertices()
};

class DelzantPolytope
{
public:
    /**
     * Checks positivity of the dimension, primitive nonzero normals, that the
     * region is bounded and has nonempty interior. The Delzant lattice
     * condition is checked separately by validate_delzant().
     */
    DelzantPolytope(int dim, std::vector<Facet> facets, std::string name = {});

    int dim() const { return dim_; }
    int num_facets() const { return static_cast<int>(facets_.size()); }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::string& name() const { return name_; }

    /// Vertices ordered by their active facet sets (lexicographic).
    const std::vector<Vertex>& vertices() const { return vertices_; }

    /// Mean of all vertices; an exact interior point.
    const RatVector& center() const { return center_; }

    /// l_j(x) - lambda_j, exact.
    Rational slack(int facet, const RatVector& x) const;
    /// l_j(x) - lambda_j in floating point.
    double slack(int facet, const Eigen::VectorXd& x) const;
    double min_slack(const Eigen::VectorXd& x) const;

    bool contains_strictly(const Eigen::VectorXd& x) const { return min_slack(x) > 0.0; }

    /// Integer n x d matrix whose columns are the facet normals.
    IntMatrix normal_matrix() const;

private:
    int dim_;
    std::vector<Facet> facets_;
    std::string name_;
    std::vector<Vertex> vertices_;
    RatVector center_;
};

struct VertexCheck
{
    RatVector point;
    std::vector<int> active;
    bool simple = false;                 // exactly n active facets
    std::optional<Integer> determinant;  // set only for simple vertices
    bool pass = false;
};

struct DelzantReport
{
    std::vector<VertexCheck> vertices;
    bool pass = false;
};

/// Exact per-vertex lattice-basis test. Non-simple vertices are failures.
DelzantReport validate_delzant(const DelzantPolytope& p);

/**
 * Every face of every codimension 0..n, ordered by codimension and then by
 * active facet set. Faces are identified by the set of facets containing
 * all of their vertices.
 */
std::vector<FaceData> enumerate_faces(const DelzantPolytope& p);

/// 1e-3 times the smallest Euclidean distance from center() to a facet.
double interior_margin(const DelzantPolytope& p);

/**
 * `count` deterministic points with min_j (l_j(x) - lambda_j) >= interior_margin(p).
 * Rejection sampling from the vertex bounding box with a convex-combination
 * fallback for thin shapes.
 */
std::vector<Eigen::VectorXd> sample_interior(const DelzantPolytope& p, int count, std::uint64_t seed);

/**
 * Points barycenter + t_m * d with d the unit vector along inward_direction
 * and t_m = t0 * 2^-m, m = 0..depth-1. The default t0 is a quarter of the
 * barycenter-to-center distance. t0 is halved until every point is strictly
 * interior; PolytopeError if that never happens.
 */
std::vector<Eigen::VectorXd> face_approach_sequence(const DelzantPolytope& p, const FaceData& face, int depth,
                                                    std::optional<double> t0 = std::nullopt);

/// Step lengths t_m that face_approach_sequence() used for the same arguments.
std::vector<double> face_approach_steps(const DelzantPolytope& p, const FaceData& face, int depth,
                                        std::optional<double> t0 = std::nullopt);

namespace fixtures {

/// [0, 1/2]^2 with facets ordered (e1, -e1, e2, -e2).
DelzantPolytope square();
/// The CP^2 moment triangle x1 >= 0, x2 >= 0, x1 + x2 <= 1.
DelzantPolytope cp2_triangle();
/// Standard n-simplex with facets x_i >= 0 and -sum x_i >= -1.
DelzantPolytope simplex(int n);
/// Axis-aligned box [0, a_1] x ... x [0, a_n].
DelzantPolytope box(const std::vector<Rational>& sides);

}  // namespace fixtures

}  // namespace toricgk

#endif
