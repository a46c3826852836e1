#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "generators.hpp"
#include "locho/bottleneck.hpp"
#include "locho/complex.hpp"
#include "locho/persistence.hpp"
#include "oracles.hpp"

using namespace locho;
using testing_generators::Rng;
using testing_generators::random_cloud;
using testing_generators::random_filtration;
using testing_generators::random_pair;
using testing_oracles::diagram_persistent_betti;
using testing_oracles::quotient_relative_oracle;

namespace {

const double inf = std::numeric_limits<double>::infinity();

Filtration hollow_triangle() {
    return Filtration({
        {Simplex{{0}}, 0.0}, {Simplex{{1}}, 0.0}, {Simplex{{2}}, 0.0},
        {Simplex{{0, 1}}, 1.0}, {Simplex{{0, 2}}, 1.0}, {Simplex{{1, 2}}, 1.0},
    });
}

}  // namespace

TEST_CASE("reduce: hollow triangle") {
    PersistenceDiagram d = reduce(hollow_triangle(), 1);
    PersistenceDiagram expect;
    expect.add(0, 0.0, inf);
    expect.add(0, 0.0, 1.0);
    expect.add(0, 0.0, 1.0);
    expect.add(1, 1.0, inf);
    CHECK(same_diagram(d, expect));
}

TEST_CASE("reduce: elder rule on two vertices and an edge") {
    Filtration f({{Simplex{{0}}, 0.0}, {Simplex{{1}}, 1.0}, {Simplex{{0, 1}}, 2.0}});
    PersistenceDiagram d = reduce(f, 1);
    PersistenceDiagram expect;
    expect.add(0, 0.0, inf);
    expect.add(0, 1.0, 2.0);
    CHECK(same_diagram(d, expect));
}

TEST_CASE("reduce agrees with the rank oracle on random Rips filtrations") {
    Rng rng(101);
    for (int trial = 0; trial < 8; ++trial) {
        PointCloud c = random_cloud(rng, 8, 2);
        Filtration f = build_rips(c, rng.uniform(0.7, 1.5), 1);
        PersistenceDiagram d = reduce(f, 1);
        const double top = f.cells().back().value;
        for (int probe = 0; probe < 10; ++probe) {
            double vi = rng.uniform(0.0, top);
            double vj = rng.uniform(vi, top);
            for (int dim = 0; dim <= 1; ++dim)
                CHECK(diagram_persistent_betti(d, vi, vj, dim) == betti_oracle(f, vi, vj, dim));
        }
    }
}

TEST_CASE("betti oracle on fixed inputs") {
    Filtration f = hollow_triangle();
    CHECK(betti_oracle(f, 1.0, 1.0, 1) == 1);
    CHECK(betti_oracle(f, 1.0, 1.0, 0) == 1);
    CHECK(betti_oracle(f, 0.0, 0.0, 0) == 3);
    CHECK(betti_oracle(f, 0.0, 1.0, 0) == 1);
    CHECK(betti_oracle(f, 1.0, 1.0, 5) == 0);
    CHECK_THROWS_AS(betti_oracle(f, 1.0, 0.5, 0), std::invalid_argument);
}

TEST_CASE("reduce rejects malformed filtrations") {
    CHECK_THROWS_AS(reduce(Filtration({{Simplex{{0, 1}}, 0.0}}), 1), std::invalid_argument);
    std::vector<FiltrationCell> late{{Simplex{{0}}, 0.0}, {Simplex{{0, 1}}, 0.0},
                                     {Simplex{{1}}, 0.0}};
    CHECK_THROWS_AS(reduce(Filtration(std::move(late)), 1), std::invalid_argument);
}

TEST_CASE("relative reduce on fixed pairs") {
    // Two isolated vertices, A = {a}: one essential dim-0 class.
    Filtration two({{Simplex{{0}}, 0.0}, {Simplex{{1}}, 0.0}});
    FilteredPair pa{two, {1, 0}};
    PersistenceDiagram da = relative_reduce(pa, 1);
    PersistenceDiagram expa;
    expa.add(0, 0.0, inf);
    CHECK(same_diagram(da, expa));

    // Edge rel endpoints: one essential dim-1 class.
    Filtration edge({{Simplex{{0}}, 0.0}, {Simplex{{1}}, 0.0}, {Simplex{{0, 1}}, 0.0}});
    FilteredPair pb{edge, {1, 1, 0}};
    PersistenceDiagram db = relative_reduce(pb, 1);
    PersistenceDiagram expb;
    expb.add(1, 0.0, inf);
    CHECK(same_diagram(db, expb));
}

TEST_CASE("relative reduce equals the quotient oracle on random pairs") {
    Rng rng(103);
    for (int trial = 0; trial < 12; ++trial) {
        FilteredPair pair = random_pair(rng, 120);
        CHECK(same_diagram(relative_reduce(pair, 2), quotient_relative_oracle(pair, 2)));
    }
}

TEST_CASE("relative reduce degenerates correctly at the extremes") {
    Rng rng(107);
    for (int trial = 0; trial < 6; ++trial) {
        Filtration f = random_filtration(rng, 150);
        FilteredPair none{f, std::vector<char>(f.size(), 0)};
        CHECK(same_diagram(relative_reduce(none, 2), reduce(f, 2)));
        FilteredPair full{f, std::vector<char>(f.size(), 1)};
        CHECK(relative_reduce(full, 2).empty());
    }
}

TEST_CASE("diagram is independent of the tie-break order") {
    Rng rng(109);
    for (int trial = 0; trial < 6; ++trial) {
        Filtration f = random_filtration(rng, 150, /*jitter=*/false);
        PersistenceDiagram base = reduce(f, 2);
        // Shuffle cells of equal (value, dim); faces still precede cofaces.
        std::vector<FiltrationCell> cells = f.cells();
        std::shuffle(cells.begin(), cells.end(), rng.gen);
        std::stable_sort(cells.begin(), cells.end(),
                         [](const FiltrationCell& a, const FiltrationCell& b) {
                             if (a.value != b.value) return a.value < b.value;
                             return a.simplex.dim() < b.simplex.dim();
                         });
        Filtration shuffled(std::move(cells));
        shuffled.validate();
        CHECK(same_diagram(reduce(shuffled, 2), base));
    }
}

TEST_CASE("pairing bookkeeping: creators plus destroyers count every cell") {
    Rng rng(113);
    for (int trial = 0; trial < 6; ++trial) {
        Filtration f = random_filtration(rng, 150);
        PersistencePairing pairing = reduce_pairs(f.cells());
        std::map<int, std::size_t> cells_of_dim, births_of_dim, deaths_of_dim;
        for (const auto& c : f.cells()) ++cells_of_dim[c.simplex.dim()];
        for (const auto& [b, d] : pairing.pairs) {
            ++births_of_dim[f[b].simplex.dim()];
            ++deaths_of_dim[f[d].simplex.dim()];
        }
        for (std::size_t u : pairing.unpaired) ++births_of_dim[f[u].simplex.dim()];
        for (const auto& [dim, count] : cells_of_dim)
            CHECK(births_of_dim[dim] + deaths_of_dim[dim] == count);
    }
}

TEST_CASE("long exact sequence rank bound at a fixed value") {
    Rng rng(127);
    for (int trial = 0; trial < 5; ++trial) {
        FilteredPair pair = random_pair(rng, 100);
        std::vector<FiltrationCell> flagged;
        for (std::size_t j = 0; j < pair.ambient.size(); ++j)
            if (pair.in_subcomplex[j]) flagged.push_back(pair.ambient[j]);
        Filtration sub(std::move(flagged));
        PersistenceDiagram rel = relative_reduce(pair, 2);
        const double at = pair.ambient.cells().back().value;
        for (int dim = 0; dim <= 2; ++dim) {
            const unsigned rel_rank = diagram_persistent_betti(rel, at, at, dim);
            const unsigned amb_rank = betti_oracle(pair.ambient, at, at, dim);
            const unsigned sub_rank =
                (dim >= 1 && !sub.empty()) ? betti_oracle(sub, at, at, dim - 1) : 0;
            CHECK(rel_rank <= amb_rank + sub_rank);
        }
    }
}

TEST_CASE("stability: jittered values move diagrams by at most the jitter") {
    Rng rng(131);
    for (int trial = 0; trial < 5; ++trial) {
        Filtration f = random_filtration(rng, 150);
        const double delta = 0.05;
        Filtration g = testing_generators::jitter_filtration(rng, f, -delta, delta);
        const double dist = bottleneck_distance(reduce(f, 2), reduce(g, 2));
        CHECK(dist <= delta + 1e-9);
    }
}

TEST_CASE("theorem-1 style shifted pairs stay within epsilon") {
    Rng rng(137);
    const double eps = 0.05;
    for (int trial = 0; trial < 6; ++trial) {
        FilteredPair pf = random_pair(rng, 100);
        FilteredPair pg = testing_generators::jitter_values(rng, pf, 0.0, eps);
        CHECK(theorem1_property_check(pf, pg, eps, 2));
        CHECK(theorem1_property_check(pf, pf, 0.0, 2));
    }
}
