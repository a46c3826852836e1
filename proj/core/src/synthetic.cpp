#include "locho/synthetic.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace locho {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCanonicalTol = 1e-9;

std::size_t steps_for(double length, double density) {
    // The small slack keeps an exactly divisible length/density from picking
    // up a spurious extra step through floating-point noise.
    return static_cast<std::size_t>(std::ceil(length / density - 1e-9));
}

void check(const SpaceSpec& spec) {
    if (!(spec.density > 0.0))
        throw std::invalid_argument("generate: density must be positive");
    if (spec.kind == SpaceKind::cone2d && spec.arms < 1)
        throw std::invalid_argument("generate: cone2d needs at least one arm");
}

PointCloud gen_segment(double density) {
    const std::size_t m = steps_for(1.0, density);
    std::vector<Point> pts;
    for (std::size_t j = 0; j <= m; ++j)
        pts.push_back({static_cast<double>(j) / static_cast<double>(m)});
    return PointCloud(std::move(pts));
}

PointCloud gen_circle(double density) {
    const std::size_t n = steps_for(2.0 * kPi, density);
    std::vector<Point> pts;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        pts.push_back({std::cos(t), std::sin(t)});
    }
    return PointCloud(std::move(pts));
}

// Arms radiating from a shared origin sample; used by cross2d and cone2d.
PointCloud gen_arms(const std::vector<std::pair<double, double>>& directions, double arm_length,
                    double density) {
    const std::size_t m = steps_for(arm_length, density);
    std::vector<Point> pts;
    pts.push_back({0.0, 0.0});
    for (const auto& [ux, uy] : directions)
        for (std::size_t j = 1; j <= m; ++j) {
            const double t = arm_length * static_cast<double>(j) / static_cast<double>(m);
            pts.push_back({ux * t, uy * t});
        }
    return PointCloud(std::move(pts));
}

PointCloud gen_cross2d(double density) {
    return gen_arms({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}, 0.5, density);
}

PointCloud gen_cone2d(double density, int arms) {
    std::vector<std::pair<double, double>> dirs;
    for (int a = 0; a < arms; ++a) {
        const double t = 2.0 * kPi * static_cast<double>(a) / static_cast<double>(arms);
        dirs.emplace_back(std::cos(t), std::sin(t));
    }
    return gen_arms(dirs, 1.0, density);
}

PointCloud gen_planes3d(double density) {
    const std::size_t m = steps_for(1.0, density);
    auto coord = [&](std::size_t j) {
        return -0.5 + static_cast<double>(j) / static_cast<double>(m);
    };
    std::vector<Point> pts;
    // Square in the xy plane, including the shared line y = z = 0.
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j) pts.push_back({coord(i), coord(j), 0.0});
    // Square in the xz plane, skipping the shared line.
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            if (coord(j) != 0.0) pts.push_back({coord(i), 0.0, coord(j)});
    return PointCloud(std::move(pts));
}

bool near(double a, double b) { return std::fabs(a - b) <= kCanonicalTol; }

}  // namespace

PointCloud generate(const SpaceSpec& spec) {
    check(spec);
    switch (spec.kind) {
        case SpaceKind::segment: return gen_segment(spec.density);
        case SpaceKind::circle: return gen_circle(spec.density);
        case SpaceKind::cross2d: return gen_cross2d(spec.density);
        case SpaceKind::planes3d: return gen_planes3d(spec.density);
        case SpaceKind::cone2d: return gen_cone2d(spec.density, spec.arms);
    }
    throw std::invalid_argument("generate: unsupported space kind");
}

std::string ground_truth_note(const SpaceSpec& spec, const Point& basepoint) {
    check(spec);
    switch (spec.kind) {
        case SpaceKind::segment: {
            if (basepoint.size() != 1) break;
            const double x = basepoint[0];
            if (near(x, 0.0) || near(x, 1.0))
                return "boundary point: trivial local homology in dim >= 1";
            if (x > 0.0 && x < 1.0) return "manifold point of a 1-manifold: dim 1 rank 1";
            break;
        }
        case SpaceKind::circle: {
            if (basepoint.size() != 2) break;
            const double rad = std::hypot(basepoint[0], basepoint[1]);
            if (near(rad, 1.0)) return "manifold point of a 1-manifold: dim 1 rank 1";
            break;
        }
        case SpaceKind::cross2d: {
            if (basepoint.size() != 2) break;
            const double x = basepoint[0], y = basepoint[1];
            if (near(x, 0.0) && near(y, 0.0))
                return "singular crossing point (4-arm star): dim 1 rank 3";
            const bool on_x = near(y, 0.0) && std::fabs(x) < 0.5 && !near(x, 0.0);
            const bool on_y = near(x, 0.0) && std::fabs(y) < 0.5 && !near(y, 0.0);
            if (on_x || on_y) return "manifold point of a 1-manifold: dim 1 rank 1";
            if ((near(std::fabs(x), 0.5) && near(y, 0.0)) ||
                (near(std::fabs(y), 0.5) && near(x, 0.0)))
                return "boundary point: trivial local homology in dim >= 1";
            break;
        }
        case SpaceKind::planes3d: {
            if (basepoint.size() != 3) break;
            const double x = basepoint[0], y = basepoint[1], z = basepoint[2];
            if (near(y, 0.0) && near(z, 0.0) && std::fabs(x) < 0.5)
                return "singular point on the intersection segment: dim 2 rank 3";
            if (near(z, 0.0) && std::fabs(x) < 0.5 && std::fabs(y) < 0.5 && !near(y, 0.0))
                return "manifold point of a 2-manifold: dim 2 rank 1";
            if (near(y, 0.0) && std::fabs(x) < 0.5 && std::fabs(z) < 0.5 && !near(z, 0.0))
                return "manifold point of a 2-manifold: dim 2 rank 1";
            break;
        }
        case SpaceKind::cone2d: {
            if (basepoint.size() != 2) break;
            if (near(basepoint[0], 0.0) && near(basepoint[1], 0.0)) {
                if (spec.arms == 1) return "boundary point: trivial local homology in dim >= 1";
                if (spec.arms == 2) return "manifold point of a 1-manifold: dim 1 rank 1";
                return "singular cone point (" + std::to_string(spec.arms) +
                       "-arm star): dim 1 rank " + std::to_string(spec.arms - 1);
            }
            break;
        }
    }
    throw std::invalid_argument("ground_truth_note: basepoint is not a canonical point of this space");
}

SpaceKind parse_space_kind(std::string_view name) {
    static const std::map<std::string_view, SpaceKind> kinds = {
        {"segment", SpaceKind::segment},
        {"circle", SpaceKind::circle},
        {"cross2d", SpaceKind::cross2d},
        {"planes3d", SpaceKind::planes3d},
        {"cone2d", SpaceKind::cone2d},
    };
    auto it = kinds.find(name);
    if (it == kinds.end())
        throw std::invalid_argument("unknown space kind: " + std::string(name));
    return it->second;
}

std::string space_kind_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::segment: return "segment";
        case SpaceKind::circle: return "circle";
        case SpaceKind::cross2d: return "cross2d";
        case SpaceKind::planes3d: return "planes3d";
        case SpaceKind::cone2d: return "cone2d";
    }
    return "unknown";
}

}  // namespace locho
