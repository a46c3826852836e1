#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "locho/diagram.hpp"
#include "locho/filtration.hpp"

namespace locho {

/// Raw output of the column reduction, in cell positions: lowest-one pairs
/// (birth position, death position) plus the positions left unpaired.
/// Zero-persistence pairs are still present here.
struct PersistencePairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unpaired;
};

/// Z/2 column reduction over any face-closed, value-monotone ordered cell
/// list (not necessarily canonically sorted). Throws std::invalid_argument on
/// a malformed input.
PersistencePairing reduce_pairs(std::span<const FiltrationCell> cells);

/// Persistence diagram of a filtration: paired cells contribute
/// (dim, birth value, death value), unpaired cells of dimension <= max_dim
/// contribute essential classes; zero-persistence points are dropped.
PersistenceDiagram reduce(const Filtration& filtration, int max_dim);

/// Diagram of the relative persistence module {H(K_a, A_a)} of a filtered
/// pair, computed by coning: a cone vertex ordered first acts as -inf, every
/// flagged cell is coned at its own value, and the reduced persistence of the
/// coned filtration (dropping the cone vertex's own essential class) is the
/// relative diagram.
PersistenceDiagram relative_reduce(const FilteredPair& pair, int max_dim);

/// Rank of the map H_dim(sublevel <= value_i) -> H_dim(sublevel <= value_j),
/// by explicit Z/2 Gaussian elimination on cycle and boundary spaces; an
/// independent route from reduce, intended for small filtrations
/// (<= ~200 cells). value_i == value_j gives the Betti number.
unsigned betti_oracle(const Filtration& filtration, double value_i, double value_j, int dim);

/// Bottleneck check behind the relative-interleaving statement: true iff the
/// relative diagrams of the two pairs are within epsilon (+ small tolerance)
/// in bottleneck distance. The caller is responsible for constructing pairs
/// whose component filtrations are actually epsilon-interleaved.
bool theorem1_property_check(const FilteredPair& pair_f, const FilteredPair& pair_g,
                             double epsilon, int max_dim);

}  // namespace locho
