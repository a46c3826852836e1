#include "doctest.h"

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "locho/bottleneck.hpp"
#include "locho/complex.hpp"
#include "locho/local_homology.hpp"
#include "locho/persistence.hpp"
#include "locho/synthetic.hpp"

using namespace locho;

namespace {

const double inf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("certified bound formula") {
    CHECK(certified_bound_alpha(0.01, 0.1, 0.5) == doctest::Approx(0.14).epsilon(1e-14));
    CHECK(certified_bound_alpha(0.05, 1e-9, 1.0) == doctest::Approx(0.1).epsilon(1e-7));
    CHECK_THROWS_AS(certified_bound_alpha(0.01, 0.5, 0.5), GuaranteeLapsedError);
    CHECK_THROWS_AS(certified_bound_alpha(0.01, 0.7, 0.5), GuaranteeLapsedError);
    CHECK_THROWS_AS(certified_bound_alpha(-0.1, 0.1, 0.5), std::invalid_argument);
}

TEST_CASE("alpha pipeline on a single point") {
    PointCloud c({{0.0, 0.0}});
    LocalQuery q{{0.0, 0.0}, 1.0, 0.1, 0.5, 1};
    ApproxResult res = alpha_pipeline(c, q);
    PersistenceDiagram expect;
    expect.add(0, 0.0, inf);
    CHECK(same_diagram(res.diagram, expect));
    CHECK(res.bound == doctest::Approx(2 * 0.1 + 0.5 + 0.25).epsilon(1e-14));
    CHECK(res.bound == doctest::Approx(certified_bound_alpha(res.epsilon, res.scale, res.radius))
                           .epsilon(1e-15));
}

TEST_CASE("alpha pipeline rejects max_scale >= radius") {
    PointCloud c({{0.0, 0.0}});
    LocalQuery q{{0.0, 0.0}, 0.25, 0.02, 0.3, 1};
    CHECK_THROWS_AS(alpha_pipeline(c, q), GuaranteeLapsedError);
}

TEST_CASE("alpha pipeline with an empty outside set is absolute Rips persistence") {
    SpaceSpec spec{SpaceKind::circle, 0.2};
    PointCloud c = generate(spec);
    LocalQuery q{{1.0, 0.0}, 3.0, 0.2, 0.5, 1};
    ApproxResult res = alpha_pipeline(c, q);
    PersistenceDiagram absolute = reduce(build_rips(c, 0.5, 1), 1);
    CHECK(same_diagram(res.diagram, absolute));
}

TEST_CASE("r pipeline on tiny clouds") {
    PointCloud single({{0.0, 0.0}});
    LocalQuery q{{0.0, 0.0}, 1.0, 0.6, 1.0, 1};
    ApproxResult res = r_pipeline(single, q);
    PersistenceDiagram expect;
    expect.add(0, 0.0, inf);
    CHECK(same_diagram(res.diagram, expect));
    CHECK(res.bound == doctest::Approx(2.4).epsilon(1e-14));
    CHECK(res.scale == doctest::Approx(1.2).epsilon(1e-14));

    PointCloud two({{0.0, 0.0}, {1.0, 0.0}});
    ApproxResult res2 = r_pipeline(two, q);
    PersistenceDiagram expect2;
    expect2.add(0, -1.0, inf);
    CHECK(same_diagram(res2.diagram, expect2));
}

TEST_CASE("r pipeline is invariant under rigid translation") {
    SpaceSpec spec{SpaceKind::circle, 0.1};
    PointCloud c = generate(spec);
    LocalQuery q{{1.0, 0.0}, 1.0, 0.1, 0.2, 1};
    ApproxResult base = r_pipeline(c, q);

    const Point shift{10.25, -3.5};
    std::vector<Point> moved_pts;
    for (const Point& p : c.points()) moved_pts.push_back({p[0] + shift[0], p[1] + shift[1]});
    LocalQuery moved_q = q;
    moved_q.basepoint = {q.basepoint[0] + shift[0], q.basepoint[1] + shift[1]};
    ApproxResult moved = r_pipeline(PointCloud(moved_pts), moved_q);

    CHECK(bottleneck_distance(base.diagram, moved.diagram) <= 1e-9);
}

TEST_CASE("translate diagram reflects and shifts dimension") {
    PersistenceDiagram d;
    d.add(0, -1.0, -0.2);
    PersistenceDiagram t = translate_diagram(d);
    REQUIRE(t.size() == 1);
    CHECK(t.points()[0].dim == 1);
    CHECK(t.points()[0].birth == 0.2);
    CHECK(t.points()[0].death == 1.0);

    CHECK(translate_diagram(PersistenceDiagram{}).empty());
}

TEST_CASE("translate diagram marks essential classes separately") {
    PersistenceDiagram d;
    d.add(0, -2.0, inf);
    d.add(0, -1.5, -0.5);
    PersistenceDiagram t = translate_diagram(d);
    auto markers = essential_markers(t);
    REQUIRE(markers.size() == 1);
    CHECK(markers[0].dim == 1);
    CHECK(markers[0].birth == -inf);
    CHECK(markers[0].death == 2.0);
}

TEST_CASE("translating twice restores coordinates, two dimensions up") {
    PersistenceDiagram d;
    d.add(0, -1.0, -0.2);
    d.add(1, 0.3, 0.9);
    d.add(0, -2.0, inf);
    PersistenceDiagram round = translate_diagram(translate_diagram(d));
    PersistenceDiagram expect;
    for (const auto& p : d.points()) expect.add(p.dim + 2, p.birth, p.death);
    CHECK(same_diagram(round, expect));
}

TEST_CASE("alpha refinement consistency on a segment interior point") {
    const double eps = 0.05, eps2 = 0.025, r = 0.2, scale = 0.1;
    PointCloud coarse = generate({SpaceKind::segment, eps});
    PointCloud fine = generate({SpaceKind::segment, eps2});
    LocalQuery q{{0.5}, r, eps, scale, 1};
    LocalQuery q2{{0.5}, r, eps2, scale, 1};
    ApproxResult a = alpha_pipeline(coarse, q);
    ApproxResult b = alpha_pipeline(fine, q2);
    const double allowance = a.bound + b.bound;
    CHECK(bottleneck_distance(a.diagram, b.diagram) <= allowance + 1e-9);

    // The interior point of a 1-manifold carries one essential dim-1 class.
    int essential_dim1 = 0;
    for (const auto& p : b.diagram.points())
        if (p.dim == 1 && p.death == inf) ++essential_dim1;
    CHECK(essential_dim1 == 1);
}

TEST_CASE("metadata sidecar format") {
    PointCloud c({{0.0, 0.0}});
    LocalQuery q{{0.0, 0.0}, 1.0, 0.1, 0.5, 1};
    ApproxResult res = alpha_pipeline(c, q);
    std::stringstream ss;
    write_metadata(ss, res);
    const std::string text = ss.str();
    CHECK(text.find("pipeline=alpha") != std::string::npos);
    CHECK(text.find("epsilon=0.1") != std::string::npos);
    CHECK(text.find("r=1") != std::string::npos);
    CHECK(text.find("max_scale=0.5") != std::string::npos);
    CHECK(text.find("bound=") != std::string::npos);
    CHECK(text.find("bound_formula=") != std::string::npos);
}

// Nearby fixed complex scales give nearby lower-star diagrams on the circle;
// the threshold is a frozen regression value from the first dense run.
TEST_CASE("lower-star diagrams are stable across nearby complex scales") {
    PointCloud c = generate({SpaceKind::circle, 0.05});
    LocalQuery q{{1.0, 0.0}, 1.0, 0.05, 0.1, 1};
    std::vector<double> f = distance_to_basepoint(c, q);
    for (double& v : f) v = -v;

    auto diagram_at_scale = [&](double s) {
        return reduce(lower_star_filtration(build_rips(c, s, 1), f), 1);
    };
    // Frozen regression values: scales below the next neighbor ring give the
    // same complex (distance ~0); adding a ring moves the diagram by about
    // one sample spacing.
    CHECK(bottleneck_distance(diagram_at_scale(0.10), diagram_at_scale(0.12)) <= 1e-12);
    CHECK(bottleneck_distance(diagram_at_scale(0.10), diagram_at_scale(0.20)) <= 0.055);
}
