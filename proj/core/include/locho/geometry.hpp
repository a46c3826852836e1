#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace locho {

using Point = std::vector<double>;

/// Finite point set in Euclidean d-space. Point order is stable; indices are
/// the canonical vertex names used by every complex built on top of it.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::vector<Point> points,
                        std::vector<std::string> labels = {});

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    /// Ambient dimension d (0 for an empty cloud).
    std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<Point> points_;
    std::vector<std::string> labels_;
};

/// Parameters of a local-homology query: basepoint x, locality radius r,
/// asserted sample density epsilon, scale cap and top homological dimension.
struct LocalQuery {
    Point basepoint;
    double radius = 0.0;
    double epsilon = 0.0;
    double max_scale = 0.0;
    int max_dim = 0;

    /// Throws std::invalid_argument unless radius, epsilon, max_scale > 0,
    /// max_dim >= 0 and every basepoint coordinate is finite.
    void validate() const;
    /// Same, plus checks the basepoint dimension against the cloud.
    void validate_with(const PointCloud& cloud) const;
};

double euclidean_distance(const Point& a, const Point& b);

/// Dense symmetric matrix of pairwise Euclidean distances.
std::vector<std::vector<double>> pairwise_distances(const PointCloud& cloud);

/// Smallest eps for which `subset` is an eps-sample of the whole cloud:
/// max over cloud points of the distance to the nearest subset point.
double coverage_radius(const std::vector<std::size_t>& subset, const PointCloud& cloud);

struct BallSplit {
    std::vector<std::size_t> inside;   // d(x, p) <= r  (closed ball)
    std::vector<std::size_t> outside;  // d(x, p) >  r
};

/// Partition of the cloud by the closed ball B_r(x). Points exactly on the
/// sphere are classified inside.
BallSplit split_by_ball(const PointCloud& cloud, const LocalQuery& query);

/// Per-point Euclidean distance to the query basepoint.
std::vector<double> distance_to_basepoint(const PointCloud& cloud, const LocalQuery& query);

// Point-cloud text format: one point per line, whitespace-separated decimal
// coordinates; blank lines and '#' comments ignored; arity must be uniform.
PointCloud read_point_cloud(std::istream& in);
PointCloud read_point_cloud_file(const std::string& path);
void write_point_cloud(std::ostream& out, const PointCloud& cloud);
void write_point_cloud_file(const std::string& path, const PointCloud& cloud);

}  // namespace locho
