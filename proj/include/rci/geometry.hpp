#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rci::geometry {

struct UnboundedTemplate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateTemplate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularW : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Symmetric polytope {theta : -1 <= P theta <= 1} with its vertex list.
/// Vertices are ordered so that vertices[j + sigma] == -vertices[j].
struct TemplatePolytope {
    Eigen::MatrixXd P;                     // n_p x n
    std::vector<Eigen::VectorXd> vertices; // 2 * sigma entries
    int sigma = 0;

    int dim() const { return static_cast<int>(P.cols()); }
    int facet_rows() const { return static_cast<int>(P.rows()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

/// Candidate invariant set C = W * Theta = {x : -1 <= P W^-1 x <= 1}.
struct RciSet {
    Eigen::MatrixXd W;
    TemplatePolytope tpl;

    std::vector<Eigen::VectorXd> vertices() const;
};

/// Enumerate all vertices of {theta : -1 <= P theta <= 1}.
/// Exact hyperplane-intersection method, supported for n <= 3.
TemplatePolytope enumerate_vertices(const Eigen::MatrixXd& P);

/// Euclidean volume of the convex hull of `vertices` (n <= 3 exact).
double polytope_volume(const std::vector<Eigen::VectorXd>& vertices);

struct MonteCarloVolume {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Hit-or-miss estimate of vol{theta : -1 <= P theta <= 1}; fallback for n > 3.
MonteCarloVolume polytope_volume_monte_carlo(const Eigen::MatrixXd& P, std::int64_t samples,
                                             std::uint64_t seed);

/// Membership test -1 - tol <= P W^-1 x <= 1 + tol.
bool contains(const RciSet& set, const Eigen::VectorXd& x, double tol);

/// |det W|, throwing SingularW below the invertibility floor.
double checked_abs_det(const Eigen::MatrixXd& W);

void write_vertices_csv(std::ostream& os, const std::vector<Eigen::VectorXd>& vertices);

/// "M x0 y0 L x1 y1 ... Z" for a 2-D vertex loop (caller applies any transform).
std::string svg_path(const std::vector<Eigen::VectorXd>& polygon);

/// Vertices of a 2-D polytope sorted counterclockwise (for plotting/shoelace).
std::vector<Eigen::VectorXd> sort_ccw(const std::vector<Eigen::VectorXd>& vertices);

} // namespace rci::geometry
