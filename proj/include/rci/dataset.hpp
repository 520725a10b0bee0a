#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace rci::dataset {

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleModelSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Measured state-input trajectory: states x(1)..x(T+1), inputs u(1)..u(T).
struct Trajectory {
    std::vector<Eigen::VectorXd> states;
    std::vector<Eigen::VectorXd> inputs;

    int T() const { return static_cast<int>(inputs.size()); }
    int state_dim() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
    int input_dim() const { return inputs.empty() ? 0 : static_cast<int>(inputs.front().size()); }
};

/// Column-aligned data matrices: column k holds x(k+1), x(k), u(k).
struct DataMatrices {
    Eigen::MatrixXd Xplus; // n x T
    Eigen::MatrixXd X;     // n x T
    Eigen::MatrixXd U;     // m x T

    int n() const { return static_cast<int>(X.rows()); }
    int m() const { return static_cast<int>(U.rows()); }
    int T() const { return static_cast<int>(X.cols()); }
};

/// Disturbance bound {w : -1 <= D w <= 1}.
struct DisturbanceSet {
    Eigen::MatrixXd D; // n_w x n

    int n_w() const { return static_cast<int>(D.rows()); }
    int n() const { return static_cast<int>(D.cols()); }
};

/// State set {x : H x <= 1} and input set {u : G u <= 1}.
struct ConstraintSets {
    Eigen::MatrixXd H; // n_x x n
    Eigen::MatrixXd G; // n_u x m
};

/// Z = [X;U]^T (x) D and d = stack of D x(k+1); the feasible model set is
/// {vec(M) : -1 + d <= Z vec(M) <= 1 + d}.
struct LiftedData {
    Eigen::MatrixXd Z; // (T n_w) x (n (n+m))
    Eigen::VectorXd d; // T n_w

    int rows() const { return static_cast<int>(Z.rows()); }
    int model_dim() const { return static_cast<int>(Z.cols()); }
};

struct InformativityReport {
    bool rank_ok = false;
    int rank = 0;
    bool d_rank_ok = false;
    int d_rank = 0;
};

DataMatrices build_data_matrices(const Trajectory& traj);

Eigen::VectorXd vec(const Eigen::MatrixXd& A);
Eigen::MatrixXd unvec(const Eigen::VectorXd& v, int rows, int cols);
Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

InformativityReport informativity_check(const DataMatrices& data, const DisturbanceSet& dist);

LiftedData build_lifted(const DataMatrices& data, const DisturbanceSet& dist);

bool feasible_model_contains(const LiftedData& lift, const Eigen::MatrixXd& M, int n, int m,
                             double tol = 1e-9);

/// Extreme points of the feasible model set, obtained by maximizing random
/// linear objectives over the band (one LP per sample). Deterministic in seed.
std::vector<Eigen::MatrixXd> sample_feasible_models(const LiftedData& lift, int n, int m, int count,
                                                    std::uint64_t seed);

/// Trajectory CSV: header k,x1..xn,u1..um; one row per k; u empty on the last
/// row. Parsing is strict (NaN/inf and malformed rows rejected).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
Trajectory read_trajectory_csv(std::istream& is);

} // namespace rci::dataset
