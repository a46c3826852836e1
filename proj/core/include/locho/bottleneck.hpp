#pragma once

#include <cstddef>
#include <vector>

#include "locho/diagram.hpp"

namespace locho {

/// Absolute slack used by interleaving_certificate when comparing a computed
/// bottleneck distance against a claimed bound.
inline constexpr double kInterleavingTolerance = 1e-9;

/// A perfect partial matching between two diagrams: every off-diagonal point
/// of each side appears exactly once, either paired with a point of the other
/// side or sent to the diagonal (kDiagonal). cost is the max pair cost.
struct Matching {
    static constexpr std::ptrdiff_t kDiagonal = -1;
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pairs;
    double cost = 0.0;
};

/// Exact bottleneck distance, compared per dimension. Points with infinite
/// death (and the -inf-birth markers of translate_diagram) can only be
/// matched to points of the same kind; a cardinality mismatch yields +inf.
/// Finite points are matched by binary search over the O(n^2) candidate
/// radii with bipartite feasibility checks; the result is one of the
/// candidate values exactly.
double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

/// An optimal matching realizing bottleneck_distance. Indices refer to
/// points() of each diagram.
Matching bottleneck_matching(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

/// True iff bottleneck_distance(d1, d2) <= claimed_bound + tolerance.
bool interleaving_certificate(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                              double claimed_bound);

}  // namespace locho
