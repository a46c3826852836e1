#include "locho/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace locho {

PointCloud::PointCloud(std::vector<Point> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != points_.size())
        throw std::invalid_argument("point cloud: label count does not match point count");
    if (points_.empty()) return;
    const std::size_t d = points_.front().size();
    if (d == 0) throw std::invalid_argument("point cloud: ambient dimension must be >= 1");
    for (const Point& p : points_) {
        if (p.size() != d)
            throw std::invalid_argument("point cloud: points have mismatched dimensions");
        for (double c : p)
            if (!std::isfinite(c))
                throw std::invalid_argument("point cloud: non-finite coordinate");
    }
}

void LocalQuery::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("query: radius must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("query: epsilon must be positive");
    if (!(max_scale > 0.0)) throw std::invalid_argument("query: max_scale must be positive");
    if (max_dim < 0) throw std::invalid_argument("query: max_dim must be nonnegative");
    for (double c : basepoint)
        if (!std::isfinite(c)) throw std::invalid_argument("query: non-finite basepoint coordinate");
}

void LocalQuery::validate_with(const PointCloud& cloud) const {
    validate();
    if (!cloud.empty() && basepoint.size() != cloud.dimension())
        throw std::invalid_argument("query: basepoint dimension does not match cloud");
}

double euclidean_distance(const Point& a, const Point& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: points have mismatched dimensions");
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

std::vector<std::vector<double>> pairwise_distances(const PointCloud& cloud) {
    if (cloud.empty()) throw std::invalid_argument("pairwise_distances: empty cloud");
    const std::size_t n = cloud.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m[i][j] = m[j][i] = euclidean_distance(cloud[i], cloud[j]);
    return m;
}

double coverage_radius(const std::vector<std::size_t>& subset, const PointCloud& cloud) {
    if (subset.empty()) throw std::invalid_argument("coverage_radius: empty subset");
    for (std::size_t i : subset)
        if (i >= cloud.size()) throw std::invalid_argument("coverage_radius: index out of range");
    double worst = 0.0;
    for (std::size_t q = 0; q < cloud.size(); ++q) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t i : subset)
            nearest = std::min(nearest, euclidean_distance(cloud[q], cloud[i]));
        worst = std::max(worst, nearest);
    }
    return worst;
}

BallSplit split_by_ball(const PointCloud& cloud, const LocalQuery& query) {
    query.validate_with(cloud);
    BallSplit split;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (euclidean_distance(query.basepoint, cloud[i]) > query.radius)
            split.outside.push_back(i);
        else
            split.inside.push_back(i);
    }
    return split;
}

std::vector<double> distance_to_basepoint(const PointCloud& cloud, const LocalQuery& query) {
    query.validate_with(cloud);
    std::vector<double> d(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i)
        d[i] = euclidean_distance(query.basepoint, cloud[i]);
    return d;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

PointCloud read_point_cloud(std::istream& in) {
    std::vector<Point> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        Point p;
        double c;
        while (ss >> c) p.push_back(c);
        if (!ss.eof()) {
            std::string rest;
            ss.clear();
            ss >> rest;
            throw std::invalid_argument("point cloud: bad coordinate on line " +
                                        std::to_string(lineno));
        }
        if (!points.empty() && p.size() != points.front().size())
            throw std::invalid_argument("point cloud: inconsistent arity on line " +
                                        std::to_string(lineno));
        points.push_back(std::move(p));
    }
    return PointCloud(std::move(points));
}

PointCloud read_point_cloud_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open point cloud file: " + path);
    return read_point_cloud(in);
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
    for (const Point& p : cloud.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << format_double(p[i]);
        }
        out << '\n';
    }
}

void write_point_cloud_file(const std::string& path, const PointCloud& cloud) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_point_cloud(out, cloud);
}

}  // namespace locho
