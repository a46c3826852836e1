#pragma once

#include "locho/filtration.hpp"
#include "locho/geometry.hpp"

namespace locho {

/// Vietoris-Rips filtration of the cloud: every simplex of dimension at most
/// max_dim + 1 whose vertex-set diameter is <= max_scale, valued by that
/// diameter (vertices at 0). One dimension above max_dim is kept so that
/// deaths of dim-max_dim classes come out right.
Filtration build_rips(const PointCloud& cloud, double max_scale, int max_dim);

/// Cech filtration: simplex value = minimum enclosing ball radius of its
/// vertex set, capped at max_scale. Exact at small scale (intended n <= ~50,
/// d <= 3); this is the oracle-side counterpart of build_rips.
Filtration build_cech(const PointCloud& cloud, double max_scale, int max_dim);

/// Flags the cells all of whose vertices lie in `keep`. The flagged cells
/// form the full Rips subfiltration of the kept vertex set.
FilteredPair restrict_to_vertices(const Filtration& filtration,
                                  const std::vector<std::size_t>& keep);

/// Lower-star filtration of a fixed complex under a vertex function: each
/// simplex valued by the max of its vertex values, reordered canonically.
/// The complex's own scale values are discarded.
Filtration lower_star_filtration(const Filtration& complex,
                                 const std::vector<double>& vertex_values);

/// Checks the inclusion chain C_{a/2} <= R_a <= C_a <= R_{2a} simplex by
/// simplex over all subsets of dimension <= max_dim + 1, using MEB radius for
/// Cech membership and diameter for Rips membership (both weak inequalities).
/// Oracle-scale only: enumerates all vertex subsets.
bool verify_interleaving_chain(const PointCloud& cloud, double alpha, int max_dim);

struct Ball {
    Point center;
    double radius = 0.0;
};

/// Exact minimum enclosing ball. Exhaustive support enumeration for <= 12
/// points, Welzl-style move-to-front recursion above that.
Ball min_enclosing_ball(const std::vector<Point>& points);

}  // namespace locho
