#include "rci/geometry.hpp"
#include "rci/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace rci::geometry {

namespace {

constexpr double kDedupTol = 1e-8;
constexpr double kFeasTol = 1e-9;

double num_rank(const Eigen::MatrixXd& A) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double thresh = std::max(A.rows(), A.cols()) * 1e-15 * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return r;
}

bool feasible(const Eigen::MatrixXd& P, const Eigen::VectorXd& theta) {
    return (P * theta).cwiseAbs().maxCoeff() <= 1.0 + kFeasTol;
}

void push_unique(std::vector<Eigen::VectorXd>& pts, const Eigen::VectorXd& v) {
    for (const auto& w : pts)
        if ((w - v).norm() <= kDedupTol * std::max(1.0, v.norm())) return;
    pts.push_back(v);
}

// representative of an antipodal pair: first coordinate that is clearly
// nonzero decides the sign
bool is_representative(const Eigen::VectorXd& v) {
    double scale = std::max(1.0, v.norm());
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > kDedupTol * scale) return v(i) > 0.0;
    }
    return true; // v == 0 cannot be a vertex of a full-dimensional symmetric polytope
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::vector<Eigen::VectorXd> RciSet::vertices() const {
    std::vector<Eigen::VectorXd> out;
    out.reserve(tpl.vertices.size());
    for (const auto& th : tpl.vertices) out.push_back(W * th);
    return out;
}

TemplatePolytope enumerate_vertices(const Eigen::MatrixXd& P) {
    const int n = static_cast<int>(P.cols());
    const int np = static_cast<int>(P.rows());
    if (num_rank(P) < n)
        throw UnboundedTemplate("template matrix has column rank " +
                                std::to_string((int)num_rank(P)) + " < " + std::to_string(n));

    std::vector<Eigen::VectorXd> pts;

    if (n == 1) {
        double m = 0.0;
        for (int i = 0; i < np; ++i) m = std::max(m, std::abs(P(i, 0)));
        Eigen::VectorXd v(1);
        v(0) = 1.0 / m;
        pts.push_back(v);
        pts.push_back(-v);
    } else if (n == 2) {
        for (int i = 0; i < np; ++i) {
            for (int k = i + 1; k < np; ++k) {
                Eigen::Matrix2d A;
                A.row(0) = P.row(i);
                A.row(1) = P.row(k);
                double det = A.determinant();
                if (std::abs(det) <= 1e-12 * P.row(i).norm() * P.row(k).norm()) continue;
                for (double si : {1.0, -1.0}) {
                    for (double sk : {1.0, -1.0}) {
                        Eigen::Vector2d rhs(si, sk);
                        Eigen::VectorXd theta = A.partialPivLu().solve(rhs);
                        if (feasible(P, theta)) push_unique(pts, theta);
                    }
                }
            }
        }
    } else if (n == 3) {
        for (int i = 0; i < np; ++i) {
            for (int k = i + 1; k < np; ++k) {
                for (int l = k + 1; l < np; ++l) {
                    Eigen::Matrix3d A;
                    A.row(0) = P.row(i);
                    A.row(1) = P.row(k);
                    A.row(2) = P.row(l);
                    double det = A.determinant();
                    double sc = P.row(i).norm() * P.row(k).norm() * P.row(l).norm();
                    if (std::abs(det) <= 1e-12 * sc) continue;
                    Eigen::PartialPivLU<Eigen::Matrix3d> lu(A);
                    for (double si : {1.0, -1.0})
                        for (double sk : {1.0, -1.0})
                            for (double sl : {1.0, -1.0}) {
                                Eigen::Vector3d rhs(si, sk, sl);
                                Eigen::VectorXd theta = lu.solve(rhs);
                                if (feasible(P, theta)) push_unique(pts, theta);
                            }
                }
            }
        }
    } else {
        throw DimensionUnsupported("exact vertex enumeration supports n <= 3, got n = " +
                                   std::to_string(n));
    }

    if (pts.empty() || pts.size() % 2 != 0)
        throw DegenerateTemplate("vertex enumeration produced " + std::to_string(pts.size()) +
                                 " points");

    // split into antipodal pairs, keep one representative per pair
    std::vector<Eigen::VectorXd> reps;
    for (const auto& v : pts)
        if (is_representative(v)) reps.push_back(v);
    if (2 * reps.size() != pts.size())
        throw DegenerateTemplate("vertices do not come in antipodal pairs");
    for (const auto& v : reps) {
        bool found = false;
        for (const auto& w : pts)
            if ((w + v).norm() <= kDedupTol * std::max(1.0, v.norm())) found = true;
        if (!found) throw DegenerateTemplate("missing antipode of an enumerated vertex");
    }

    if (n == 2) {
        std::sort(reps.begin(), reps.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
            double aa = std::atan2(a(1), a(0)), ab = std::atan2(b(1), b(0));
            if (aa != ab) return aa < ab;
            return a.norm() < b.norm();
        });
    } else {
        std::sort(reps.begin(), reps.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
            return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                                b.data() + b.size());
        });
    }

    TemplatePolytope tpl;
    tpl.P = P;
    tpl.sigma = static_cast<int>(reps.size());
    tpl.vertices = reps;
    for (const auto& v : reps) tpl.vertices.push_back(-v);
    return tpl;
}

std::vector<Eigen::VectorXd> sort_ccw(const std::vector<Eigen::VectorXd>& vertices) {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& v : vertices) c += v.head<2>();
    c /= static_cast<double>(vertices.size());
    std::vector<Eigen::VectorXd> out = vertices;
    std::sort(out.begin(), out.end(), [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        double aa = std::atan2(a(1) - c(1), a(0) - c(0));
        double ab = std::atan2(b(1) - c(1), b(0) - c(0));
        if (aa != ab) return aa < ab;
        return (a.head<2>() - c).norm() < (b.head<2>() - c).norm();
    });
    return out;
}

namespace {

double polygon_area(const std::vector<Eigen::VectorXd>& vertices) {
    auto v = sort_ccw(vertices);
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s += a(0) * b(1) - b(0) * a(1);
    }
    return 0.5 * std::abs(s);
}

double hull_volume_3d(const std::vector<Eigen::VectorXd>& vertices) {
    const std::size_t m = vertices.size();
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& v : vertices) c += v.head<3>();
    c /= static_cast<double>(m);

    double scale = 0.0;
    for (const auto& v : vertices) scale = std::max(scale, (v.head<3>() - c).norm());
    const double tol = 1e-9 * std::max(1.0, scale);

    // collect distinct supporting planes (outward normal, offset)
    std::vector<std::pair<Eigen::Vector3d, double>> planes;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Eigen::Vector3d a = vertices[i].head<3>(), b = vertices[j].head<3>(),
                                d = vertices[k].head<3>();
                Eigen::Vector3d nrm = (b - a).cross(d - a);
                if (nrm.norm() <= 1e-12 * scale * scale) continue;
                nrm.normalize();
                double off = nrm.dot(a);
                if (nrm.dot(c) > off) {
                    nrm = -nrm;
                    off = -off;
                }
                bool support = true;
                for (const auto& v : vertices)
                    if (nrm.dot(v.head<3>()) > off + tol) {
                        support = false;
                        break;
                    }
                if (!support) continue;
                bool dup = false;
                for (const auto& p : planes)
                    if ((p.first - nrm).norm() < 1e-7 && std::abs(p.second - off) < tol) dup = true;
                if (!dup) planes.emplace_back(nrm, off);
            }

    double vol = 0.0;
    for (const auto& [nrm, off] : planes) {
        std::vector<Eigen::VectorXd> face;
        for (const auto& v : vertices)
            if (std::abs(nrm.dot(v.head<3>()) - off) <= tol) face.push_back(v);
        if (face.size() < 3) continue;
        // project the face onto an in-plane basis and take the polygon area
        Eigen::Vector3d u1 = nrm.unitOrthogonal();
        Eigen::Vector3d u2 = nrm.cross(u1);
        std::vector<Eigen::VectorXd> flat;
        for (const auto& v : face) {
            Eigen::VectorXd p(2);
            p << u1.dot(v.head<3>()), u2.dot(v.head<3>());
            flat.push_back(p);
        }
        double h = off - nrm.dot(c); // pyramid height from the centroid
        vol += polygon_area(flat) * h / 3.0;
    }
    return vol;
}

} // namespace

double polytope_volume(const std::vector<Eigen::VectorXd>& vertices) {
    if (vertices.empty()) return 0.0;
    const int n = static_cast<int>(vertices.front().size());
    if (n == 1) {
        double lo = vertices.front()(0), hi = lo;
        for (const auto& v : vertices) {
            lo = std::min(lo, v(0));
            hi = std::max(hi, v(0));
        }
        return hi - lo;
    }
    if (n == 2) return polygon_area(vertices);
    if (n == 3) return hull_volume_3d(vertices);
    throw DimensionUnsupported(
        "exact volume supports n <= 3, got n = " + std::to_string(n) +
        "; use polytope_volume_monte_carlo");
}

MonteCarloVolume polytope_volume_monte_carlo(const Eigen::MatrixXd& P, std::int64_t samples,
                                             std::uint64_t seed) {
    const int n = static_cast<int>(P.cols());
    if (num_rank(P) < n) throw UnboundedTemplate("template matrix rank-deficient");
    // ||P theta||_inf <= 1 implies ||theta|| <= sqrt(n_p) / sigma_min(P)
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(P);
    double r = std::sqrt(static_cast<double>(P.rows())) / svd.singularValues().minCoeff();
    double box = std::pow(2.0 * r, n);

    CounterRng rng(seed);
    std::int64_t hits = 0;
    Eigen::VectorXd theta(n);
    for (std::int64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i) theta(i) = rng.next_symmetric(r);
        if ((P * theta).cwiseAbs().maxCoeff() <= 1.0) ++hits;
    }
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloVolume out;
    out.estimate = box * p;
    out.std_error = box * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
    return out;
}

double checked_abs_det(const Eigen::MatrixXd& W) {
    const int n = static_cast<int>(W.rows());
    double det = W.determinant();
    double scale = std::max(1.0, std::pow(W.norm(), n));
    if (std::abs(det) <= 1e-10 * scale)
        throw SingularW("W is numerically singular (|det| = " + fmt17(std::abs(det)) + ")");
    return std::abs(det);
}

bool contains(const RciSet& set, const Eigen::VectorXd& x, double tol) {
    checked_abs_det(set.W);
    Eigen::VectorXd theta = set.W.partialPivLu().solve(x);
    return (set.tpl.P * theta).cwiseAbs().maxCoeff() <= 1.0 + tol;
}

void write_vertices_csv(std::ostream& os, const std::vector<Eigen::VectorXd>& vertices) {
    for (const auto& v : vertices) {
        for (int i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << fmt17(v(i));
        }
        os << '\n';
    }
}

std::string svg_path(const std::vector<Eigen::VectorXd>& polygon) {
    std::string s;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        s += (i == 0) ? "M " : "L ";
        s += fmt17(polygon[i](0));
        s += ' ';
        s += fmt17(polygon[i](1));
        s += ' ';
    }
    s += 'Z';
    return s;
}

} // namespace rci::geometry
