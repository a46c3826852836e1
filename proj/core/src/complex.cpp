#include "locho/complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace locho {

namespace {

// Enclosure checks allow a relative slack so that support points found by the
// solver are not rejected for the last ulp.
constexpr double kMebSlack = 1e-10;

// Smallest ball with all of `support` on its boundary, center constrained to
// the affine hull of the support. Returns nullopt when the support is
// affinely dependent (the system is singular).
std::optional<Ball> circumball(const std::vector<const Point*>& support) {
    const std::size_t k = support.size();
    if (k == 0) return std::nullopt;
    const Point& q0 = *support[0];
    const std::size_t d = q0.size();
    if (k == 1) return Ball{q0, 0.0};
    if (k > d + 1) return std::nullopt;

    // Solve 2 (q_i - q_0) . (c - q_0) = |q_i - q_0|^2 for c - q_0 in the span
    // of the q_i - q_0 via the Gram system.
    const std::size_t m = k - 1;
    std::vector<std::vector<double>> span(m, std::vector<double>(d));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < d; ++c) span[i][c] = (*support[i + 1])[c] - q0[c];

    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double dot = 0.0;
            for (std::size_t c = 0; c < d; ++c) dot += span[i][c] * span[j][c];
            a[i][j] = 2.0 * dot;
        }
        double sq = 0.0;
        for (std::size_t c = 0; c < d; ++c) sq += span[i][c] * span[i][c];
        a[i][m] = sq;
    }

    // Gaussian elimination with partial pivoting on the (m x m) Gram system.
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-12) return std::nullopt;
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }

    Point center = q0;
    for (std::size_t i = 0; i < m; ++i) {
        const double lambda = a[i][m] / a[i][i];
        for (std::size_t c = 0; c < d; ++c) center[c] += lambda * span[i][c];
    }
    double radius = 0.0;
    for (const Point* q : support) radius = std::max(radius, euclidean_distance(center, *q));
    return Ball{std::move(center), radius};
}

bool encloses(const Ball& ball, const std::vector<const Point*>& pts) {
    const double limit = ball.radius * (1.0 + kMebSlack) + kMebSlack;
    for (const Point* p : pts)
        if (euclidean_distance(ball.center, *p) > limit) return false;
    return true;
}

// Exhaustive MEB: the optimum is the smallest valid circumball over support
// subsets of size <= d + 1.
Ball meb_exhaustive(const std::vector<const Point*>& pts) {
    const std::size_t n = pts.size();
    const std::size_t d = pts.front()->size();
    const std::size_t max_support = std::min(n, d + 1);
    Ball best;
    best.radius = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx;
    std::vector<const Point*> support;

    auto consider = [&]() {
        support.clear();
        for (std::size_t i : idx) support.push_back(pts[i]);
        if (auto b = circumball(support); b && b->radius < best.radius && encloses(*b, pts))
            best = std::move(*b);
    };
    // Depth-first enumeration of index subsets of size 1..max_support.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!idx.empty()) consider();
        if (idx.size() == max_support) return;
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    if (!std::isfinite(best.radius))
        throw std::runtime_error("min_enclosing_ball: degenerate input");
    return best;
}

Ball welzl(std::vector<const Point*>& pts, std::size_t n, std::vector<const Point*>& support,
           std::size_t max_support) {
    if (n == 0 || support.size() == max_support) {
        if (support.empty()) {
            // Null ball: encloses nothing, so the first point lands in the support.
            return Ball{Point(pts.empty() ? 0 : pts[0]->size(), 0.0), -1.0};
        }
        // Exhaustive over the (tiny) support set; also absorbs affinely
        // dependent supports, where the true boundary set is a proper subset.
        return meb_exhaustive(support);
    }
    const Point* p = pts[n - 1];
    Ball ball = welzl(pts, n - 1, support, max_support);
    if (euclidean_distance(ball.center, *p) <= ball.radius * (1.0 + kMebSlack) + kMebSlack)
        return ball;
    // p must be on the boundary; move-to-front keeps the recursion shallow.
    support.push_back(p);
    ball = welzl(pts, n - 1, support, max_support);
    support.pop_back();
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n - 1),
                pts.begin() + static_cast<std::ptrdiff_t>(n));
    return ball;
}

Ball meb_of_pointers(std::vector<const Point*> pts) {
    if (pts.empty()) throw std::invalid_argument("min_enclosing_ball: empty point set");
    if (pts.size() == 1) return Ball{*pts[0], 0.0};
    const std::size_t d = pts.front()->size();
    if (pts.size() <= 12) return meb_exhaustive(pts);
    std::vector<const Point*> support;
    return welzl(pts, pts.size(), support, d + 1);
}

double diameter_of(const std::vector<int>& vertices,
                   const std::vector<std::vector<double>>& dist) {
    double diam = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            diam = std::max(diam, dist[static_cast<std::size_t>(vertices[i])]
                                      [static_cast<std::size_t>(vertices[j])]);
    return diam;
}

}  // namespace

Ball min_enclosing_ball(const std::vector<Point>& points) {
    std::vector<const Point*> pts;
    pts.reserve(points.size());
    for (const Point& p : points) {
        if (!points.empty() && p.size() != points.front().size())
            throw std::invalid_argument("min_enclosing_ball: mismatched dimensions");
        pts.push_back(&p);
    }
    return meb_of_pointers(std::move(pts));
}

Filtration build_rips(const PointCloud& cloud, double max_scale, int max_dim) {
    if (!(max_scale > 0.0)) throw std::invalid_argument("build_rips: max_scale must be positive");
    if (max_dim < 0) throw std::invalid_argument("build_rips: max_dim must be nonnegative");
    const int n = static_cast<int>(cloud.size());
    std::vector<FiltrationCell> cells;
    if (n == 0) return Filtration{};

    const auto dist = pairwise_distances(cloud);
    // Upper-neighbor lists drive the incremental expansion.
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= max_scale)
                nbr[static_cast<std::size_t>(i)].push_back(j);

    struct Partial {
        std::vector<int> vertices;
        double diameter;
    };
    std::vector<Partial> frontier;
    for (int i = 0; i < n; ++i) {
        cells.push_back({Simplex{{i}}, 0.0});
        frontier.push_back({{i}, 0.0});
    }

    const int top_dim = max_dim + 1;
    for (int dim = 1; dim <= top_dim && !frontier.empty(); ++dim) {
        std::vector<Partial> next;
        for (const Partial& s : frontier) {
            // Candidates: upper neighbors of the last vertex that stay within
            // max_scale of every vertex of s.
            for (int u : nbr[static_cast<std::size_t>(s.vertices.back())]) {
                double diam = s.diameter;
                bool ok = true;
                for (int v : s.vertices) {
                    const double d = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
                    if (d > max_scale) {
                        ok = false;
                        break;
                    }
                    diam = std::max(diam, d);
                }
                if (!ok) continue;
                Partial ext{s.vertices, diam};
                ext.vertices.push_back(u);
                cells.push_back({Simplex{ext.vertices}, diam});
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }

    std::sort(cells.begin(), cells.end(), canonical_cell_less);
    return Filtration{std::move(cells)};
}

Filtration build_cech(const PointCloud& cloud, double max_scale, int max_dim) {
    if (!(max_scale > 0.0)) throw std::invalid_argument("build_cech: max_scale must be positive");
    if (max_dim < 0) throw std::invalid_argument("build_cech: max_dim must be nonnegative");
    const int n = static_cast<int>(cloud.size());
    std::vector<FiltrationCell> cells;
    if (n == 0) return Filtration{};

    // MEB radius is monotone under vertex insertion, so subsets whose radius
    // already exceeds max_scale cannot spawn admissible cofaces.
    struct Partial {
        std::vector<int> vertices;
        double radius;
    };
    std::vector<Partial> frontier;
    for (int i = 0; i < n; ++i) {
        cells.push_back({Simplex{{i}}, 0.0});
        frontier.push_back({{i}, 0.0});
    }
    const int top_dim = max_dim + 1;
    std::vector<Point> support_pts;
    for (int dim = 1; dim <= top_dim && !frontier.empty(); ++dim) {
        std::vector<Partial> next;
        for (const Partial& s : frontier) {
            for (int u = s.vertices.back() + 1; u < n; ++u) {
                support_pts.clear();
                for (int v : s.vertices) support_pts.push_back(cloud[static_cast<std::size_t>(v)]);
                support_pts.push_back(cloud[static_cast<std::size_t>(u)]);
                const double r = min_enclosing_ball(support_pts).radius;
                if (r > max_scale) continue;
                Partial ext{s.vertices, r};
                ext.vertices.push_back(u);
                cells.push_back({Simplex{ext.vertices}, r});
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }

    std::sort(cells.begin(), cells.end(), canonical_cell_less);
    Filtration filtration{std::move(cells)};

    // Monotone fix-up: independent per-simplex MEB solves can disagree with a
    // face by a rounding ulp; clamp each value to the max over its facets.
    {
        std::vector<FiltrationCell> fixed = filtration.cells();
        std::map<std::vector<int>, std::size_t> position;
        for (std::size_t j = 0; j < fixed.size(); ++j) {
            for (const Simplex& f : fixed[j].simplex.facets()) {
                auto it = position.find(f.vertices);
                if (it != position.end())
                    fixed[j].value = std::max(fixed[j].value, fixed[it->second].value);
            }
            position.emplace(fixed[j].simplex.vertices, j);
        }
        std::sort(fixed.begin(), fixed.end(), canonical_cell_less);
        filtration = Filtration{std::move(fixed)};
    }
    return filtration;
}

FilteredPair restrict_to_vertices(const Filtration& filtration,
                                  const std::vector<std::size_t>& keep) {
    const int max_v = filtration.max_vertex();
    std::vector<char> kept(static_cast<std::size_t>(max_v + 1), 0);
    for (std::size_t v : keep) {
        if (max_v < 0 || v > static_cast<std::size_t>(max_v))
            throw std::invalid_argument("restrict_to_vertices: vertex index not in filtration");
        kept[v] = 1;
    }
    FilteredPair pair;
    pair.ambient = filtration;
    pair.in_subcomplex.resize(filtration.size(), 0);
    for (std::size_t j = 0; j < filtration.size(); ++j) {
        bool all = true;
        for (int v : filtration[j].simplex.vertices)
            if (!kept[static_cast<std::size_t>(v)]) {
                all = false;
                break;
            }
        pair.in_subcomplex[j] = all ? 1 : 0;
    }
    return pair;
}

Filtration lower_star_filtration(const Filtration& complex,
                                 const std::vector<double>& vertex_values) {
    const int max_v = complex.max_vertex();
    if (max_v >= 0 && vertex_values.size() <= static_cast<std::size_t>(max_v))
        throw std::invalid_argument("lower_star_filtration: missing vertex value");
    std::vector<FiltrationCell> cells;
    cells.reserve(complex.size());
    for (const FiltrationCell& c : complex.cells()) {
        double v = -std::numeric_limits<double>::infinity();
        for (int u : c.simplex.vertices)
            v = std::max(v, vertex_values[static_cast<std::size_t>(u)]);
        cells.push_back({c.simplex, v});
    }
    std::sort(cells.begin(), cells.end(), canonical_cell_less);
    return Filtration{std::move(cells)};
}

bool verify_interleaving_chain(const PointCloud& cloud, double alpha, int max_dim) {
    if (!(alpha > 0.0)) throw std::invalid_argument("verify_interleaving_chain: alpha must be positive");
    if (max_dim < 0) throw std::invalid_argument("verify_interleaving_chain: max_dim must be nonnegative");
    if (cloud.empty()) return true;
    const int n = static_cast<int>(cloud.size());
    const auto dist = pairwise_distances(cloud);
    const std::size_t max_card = static_cast<std::size_t>(max_dim) + 2;

    std::vector<int> idx;
    std::vector<Point> pts;
    bool ok = true;
    auto check = [&]() {
        const double diam = diameter_of(idx, dist);
        pts.clear();
        for (int v : idx) pts.push_back(cloud[static_cast<std::size_t>(v)]);
        const double meb = min_enclosing_ball(pts).radius;
        // C_{a/2} subset of R_a, R_a subset of C_a, C_a subset of R_{2a}.
        if (meb <= alpha / 2.0 && !(diam <= alpha)) ok = false;
        if (diam <= alpha && !(meb <= alpha)) ok = false;
        if (meb <= alpha && !(diam <= 2.0 * alpha)) ok = false;
    };
    auto rec = [&](auto&& self, int start) -> void {
        if (!ok) return;
        if (!idx.empty()) check();
        if (idx.size() == max_card) return;
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return ok;
}

}  // namespace locho
