#include "doctest.h"

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "locho/bottleneck.hpp"
#include "oracles.hpp"

using namespace locho;
using testing_generators::Rng;
using testing_generators::random_diagram;
using testing_oracles::brute_bottleneck;

namespace {

const double inf = std::numeric_limits<double>::infinity();

PersistenceDiagram make(std::initializer_list<DiagramPoint> pts) {
    PersistenceDiagram d;
    for (const auto& p : pts) d.add(p.dim, p.birth, p.death);
    return d;
}

}  // namespace

TEST_CASE("bottleneck distance on fixed inputs") {
    PersistenceDiagram d = make({{0, 0.0, 2.0}, {1, 0.5, 1.5}});
    CHECK(bottleneck_distance(d, d) == 0.0);
    CHECK(bottleneck_distance(make({{0, 0.0, 2.0}}), PersistenceDiagram{}) == 1.0);
    CHECK(bottleneck_distance(make({{0, 0.0, 4.0}}), make({{0, 1.0, 5.0}})) == 1.0);
}

TEST_CASE("essential classes only match essential classes") {
    PersistenceDiagram one = make({{0, 0.0, inf}});
    PersistenceDiagram two = make({{0, 0.0, inf}, {0, 3.0, inf}});
    CHECK(bottleneck_distance(one, two) == inf);
    CHECK(bottleneck_distance(one, make({{0, 0.25, inf}})) == 0.25);
    // Finite points never absorb an essential one.
    CHECK(bottleneck_distance(one, make({{0, 0.0, 100.0}})) == inf);
}

TEST_CASE("bottleneck equals the brute-force enumeration") {
    Rng rng(211);
    for (int trial = 0; trial < 60; ++trial) {
        PersistenceDiagram a = random_diagram(rng, 6);
        PersistenceDiagram b = random_diagram(rng, 6);
        const double got = bottleneck_distance(a, b);
        const double expect = brute_bottleneck(a, b);
        if (std::isinf(expect))
            CHECK(std::isinf(got));
        else
            CHECK(std::fabs(got - expect) <= 1e-12);
    }
}

TEST_CASE("metric axioms on random diagrams") {
    Rng rng(223);
    for (int trial = 0; trial < 20; ++trial) {
        PersistenceDiagram a = random_diagram(rng, 5, /*allow_essential=*/false);
        PersistenceDiagram b = random_diagram(rng, 5, false);
        PersistenceDiagram c = random_diagram(rng, 5, false);
        const double ab = bottleneck_distance(a, b);
        const double ba = bottleneck_distance(b, a);
        const double ac = bottleneck_distance(a, c);
        const double cb = bottleneck_distance(c, b);
        CHECK(ab == ba);
        CHECK(ab <= ac + cb + 1e-12);
        CHECK(bottleneck_distance(a, a) == 0.0);
    }
}

TEST_CASE("zero-persistence points never change the distance") {
    PersistenceDiagram a = make({{0, 0.0, 2.0}});
    PersistenceDiagram padded(std::vector<DiagramPoint>{
        {0, 0.0, 2.0}, {0, 0.7, 0.7}, {1, 1.0, 1.0}});
    CHECK(padded.size() == 1);  // dropped on insertion
    PersistenceDiagram b = make({{0, 0.2, 2.2}});
    CHECK(bottleneck_distance(a, b) == bottleneck_distance(padded, b));
}

TEST_CASE("distance decomposes as a max over dimensions") {
    Rng rng(227);
    for (int trial = 0; trial < 10; ++trial) {
        PersistenceDiagram a = random_diagram(rng, 6);
        PersistenceDiagram b = random_diagram(rng, 6);
        double per_dim = 0.0;
        for (int dim = 0; dim <= 1; ++dim) {
            PersistenceDiagram ad, bd;
            for (const auto& p : a.points())
                if (p.dim == dim) ad.add(p.dim, p.birth, p.death);
            for (const auto& p : b.points())
                if (p.dim == dim) bd.add(p.dim, p.birth, p.death);
            per_dim = std::max(per_dim, bottleneck_distance(ad, bd));
        }
        CHECK(bottleneck_distance(a, b) == per_dim);
    }
}

TEST_CASE("optimal matching is consistent with the distance") {
    Rng rng(229);
    for (int trial = 0; trial < 20; ++trial) {
        PersistenceDiagram a = random_diagram(rng, 6, false);
        PersistenceDiagram b = random_diagram(rng, 6, false);
        Matching m = bottleneck_matching(a, b);
        CHECK(m.cost == bottleneck_distance(a, b));
        // Every off-diagonal point appears exactly once.
        std::vector<int> seen_a(a.size(), 0), seen_b(b.size(), 0);
        double worst = 0.0;
        for (const auto& [i, j] : m.pairs) {
            if (i != Matching::kDiagonal) ++seen_a[static_cast<std::size_t>(i)];
            if (j != Matching::kDiagonal) ++seen_b[static_cast<std::size_t>(j)];
            if (i != Matching::kDiagonal && j != Matching::kDiagonal) {
                const auto& p = a.points()[static_cast<std::size_t>(i)];
                const auto& q = b.points()[static_cast<std::size_t>(j)];
                worst = std::max(worst, std::max(std::fabs(p.birth - q.birth),
                                                 std::fabs(p.death - q.death)));
            } else if (i != Matching::kDiagonal) {
                const auto& p = a.points()[static_cast<std::size_t>(i)];
                worst = std::max(worst, (p.death - p.birth) / 2.0);
            } else if (j != Matching::kDiagonal) {
                const auto& q = b.points()[static_cast<std::size_t>(j)];
                worst = std::max(worst, (q.death - q.birth) / 2.0);
            }
        }
        for (int s : seen_a) CHECK(s == 1);
        for (int s : seen_b) CHECK(s == 1);
        CHECK(worst == m.cost);
    }
}

TEST_CASE("interleaving certificate") {
    PersistenceDiagram d = make({{0, 0.0, 2.0}});
    CHECK(interleaving_certificate(d, d, 0.0));
    CHECK_FALSE(interleaving_certificate(d, PersistenceDiagram{}, 0.5));
    CHECK(interleaving_certificate(d, PersistenceDiagram{}, 1.0));
}

TEST_CASE("diagram file format round-trips") {
    PersistenceDiagram d = make({{0, 0.125, 2.5}, {1, -1.0, inf}, {2, -inf, -0.25}});
    std::stringstream ss;
    write_diagram(ss, d);
    PersistenceDiagram back = read_diagram(ss);
    CHECK(same_diagram(d, back));

    std::stringstream commented("# diagram\n0 0 1\n\n1 2 inf\n");
    PersistenceDiagram parsed = read_diagram(commented);
    CHECK(parsed.size() == 2);

    std::stringstream bad("0 oops 1\n");
    CHECK_THROWS_AS(read_diagram(bad), std::invalid_argument);
}
