#include "locho/persistence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "locho/bottleneck.hpp"

namespace locho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

using Column = std::vector<std::uint32_t>;  // sorted facet positions

// Symmetric difference of sorted position lists (Z/2 column addition).
void xor_into(Column& a, const Column& b, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(scratch));
    a.swap(scratch);
}

std::vector<Column> boundary_columns(std::span<const FiltrationCell> cells) {
    std::map<std::vector<int>, std::size_t> position;
    std::vector<Column> columns(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const FiltrationCell& cell = cells[j];
        cell.simplex.validate();
        if (j > 0 && cells[j - 1].value > cell.value)
            throw std::invalid_argument("reduce: values not nondecreasing along the order");
        Column& col = columns[j];
        for (const Simplex& f : cell.simplex.facets()) {
            auto it = position.find(f.vertices);
            if (it == position.end())
                throw std::invalid_argument("reduce: missing or late face");
            col.push_back(static_cast<std::uint32_t>(it->second));
        }
        std::sort(col.begin(), col.end());
        if (!position.emplace(cell.simplex.vertices, j).second)
            throw std::invalid_argument("reduce: duplicate simplex");
    }
    return columns;
}

}  // namespace

PersistencePairing reduce_pairs(std::span<const FiltrationCell> cells) {
    std::vector<Column> columns = boundary_columns(cells);
    const std::size_t n = columns.size();
    std::vector<std::size_t> low_to_col(n, kNone);
    std::vector<std::size_t> death_of(n, kNone);
    Column scratch;

    for (std::size_t j = 0; j < n; ++j) {
        Column& col = columns[j];
        while (!col.empty()) {
            const std::size_t low = col.back();
            const std::size_t k = low_to_col[low];
            if (k == kNone) break;
            xor_into(col, columns[k], scratch);
        }
        if (!col.empty()) {
            const std::size_t low = col.back();
            low_to_col[low] = j;
            death_of[low] = j;
        }
    }

    PersistencePairing out;
    for (std::size_t i = 0; i < n; ++i) {
        if (death_of[i] != kNone)
            out.pairs.emplace_back(i, death_of[i]);
        else if (columns[i].empty())
            out.unpaired.push_back(i);
    }
    return out;
}

namespace {

PersistenceDiagram pairing_to_diagram(std::span<const FiltrationCell> cells,
                                      const PersistencePairing& pairing, int max_dim) {
    PersistenceDiagram d;
    for (const auto& [b, t] : pairing.pairs) {
        const int dim = cells[b].simplex.dim();
        if (dim <= max_dim) d.add(dim, cells[b].value, cells[t].value);
    }
    for (std::size_t b : pairing.unpaired) {
        const int dim = cells[b].simplex.dim();
        if (dim <= max_dim) d.add(dim, cells[b].value, kInf);
    }
    d.canonicalize();
    return d;
}

}  // namespace

PersistenceDiagram reduce(const Filtration& filtration, int max_dim) {
    if (max_dim < 0) throw std::invalid_argument("reduce: max_dim must be nonnegative");
    const auto cells = std::span<const FiltrationCell>(filtration.cells());
    return pairing_to_diagram(cells, reduce_pairs(cells), max_dim);
}

PersistenceDiagram relative_reduce(const FilteredPair& pair, int max_dim) {
    if (max_dim < 0) throw std::invalid_argument("relative_reduce: max_dim must be nonnegative");
    pair.validate();
    const auto& ambient = pair.ambient.cells();
    if (ambient.empty()) return PersistenceDiagram{};

    // Cone vertex -1 sorts before every real vertex; its value is the minimum
    // cell value, and its position 0 makes it the filtration-order minimum.
    constexpr int omega = -1;
    std::vector<FiltrationCell> coned;
    coned.reserve(2 * ambient.size() + 1);
    coned.push_back({Simplex{{omega}}, ambient.front().value});
    for (std::size_t j = 0; j < ambient.size(); ++j) {
        coned.push_back(ambient[j]);
        if (pair.in_subcomplex[j]) {
            std::vector<int> v;
            v.reserve(ambient[j].simplex.vertices.size() + 1);
            v.push_back(omega);
            v.insert(v.end(), ambient[j].simplex.vertices.begin(),
                     ambient[j].simplex.vertices.end());
            coned.push_back({Simplex{std::move(v)}, ambient[j].value});
        }
    }

    const auto cells = std::span<const FiltrationCell>(coned);
    PersistencePairing pairing = reduce_pairs(cells);
    // Reduced homology: the cone vertex's own component class is the one
    // discarded; it is always unpaired (no lowest one can be position 0).
    std::erase(pairing.unpaired, std::size_t{0});
    return pairing_to_diagram(cells, pairing, max_dim);
}

namespace {

// Dense Z/2 row vectors packed into 64-bit words; enough for the oracle's
// few-hundred-cell scale.
struct BitRow {
    std::vector<std::uint64_t> words;

    explicit BitRow(std::size_t bits) : words((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool any() const {
        for (auto w : words)
            if (w) return true;
        return false;
    }
    int lowest_set() const {
        for (std::size_t w = 0; w < words.size(); ++w)
            if (words[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(
                                                              std::countr_zero(words[w])));
        return -1;
    }
    void xor_with(const BitRow& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
    }
};

// Incremental GF(2) row space: returns the rank after feeding all rows.
struct RowSpace {
    std::vector<BitRow> basis;        // echelonized
    std::vector<int> pivot_of_basis;  // pivot bit per basis row

    // Reduces `row` against the basis; if nonzero, inserts it and returns
    // true (rank grew).
    bool insert(BitRow row) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const int p = pivot_of_basis[i];
            if (p >= 0 && (row.words[static_cast<std::size_t>(p) >> 6] >>
                           (static_cast<std::size_t>(p) & 63)) & 1)
                row.xor_with(basis[i]);
        }
        const int p = row.lowest_set();
        if (p < 0) return false;
        basis.push_back(std::move(row));
        pivot_of_basis.push_back(p);
        return true;
    }
    std::size_t rank() const { return basis.size(); }
};

}  // namespace

unsigned betti_oracle(const Filtration& filtration, double value_i, double value_j, int dim) {
    if (value_i > value_j)
        throw std::invalid_argument("betti_oracle: value_i must not exceed value_j");
    if (dim < 0) throw std::invalid_argument("betti_oracle: negative dimension");
    filtration.validate();

    const auto& cells = filtration.cells();
    // Index the dim-, (dim-1)- and (dim+1)-cells of the two sublevels.
    std::map<std::vector<int>, std::size_t> k_cell_index;   // dim-cells at <= value_j
    std::map<std::vector<int>, std::size_t> km1_cell_index; // (dim-1)-cells at <= value_j
    std::vector<std::size_t> k_cells_i;                     // positions, <= value_i
    std::vector<std::size_t> k_cells_j;
    std::vector<std::size_t> kp1_cells_j;
    for (std::size_t pos = 0; pos < cells.size(); ++pos) {
        if (cells[pos].value > value_j) break;  // values nondecreasing
        const int d = cells[pos].simplex.dim();
        if (d == dim) {
            k_cell_index.emplace(cells[pos].simplex.vertices, k_cells_j.size());
            k_cells_j.push_back(pos);
            if (cells[pos].value <= value_i) k_cells_i.push_back(pos);
        } else if (d == dim - 1) {
            km1_cell_index.emplace(cells[pos].simplex.vertices, km1_cell_index.size());
        } else if (d == dim + 1) {
            kp1_cells_j.push_back(pos);
        }
    }

    const std::size_t nk_i = k_cells_i.size();
    const std::size_t nk_j = k_cells_j.size();
    if (nk_i == 0) return 0;

    // Kernel basis of the dim-boundary restricted to the value_i sublevel:
    // eliminate the boundary columns while mirroring the operations on an
    // identity ledger; columns that vanish yield kernel vectors.
    std::vector<BitRow> bd_cols;    // boundary of each k-cell of K_i, in (dim-1)-cell coords
    std::vector<BitRow> ledger;     // same column operations applied to identity
    bd_cols.reserve(nk_i);
    ledger.reserve(nk_i);
    const std::size_t km1_count = std::max<std::size_t>(km1_cell_index.size(), 1);
    for (std::size_t c = 0; c < nk_i; ++c) {
        BitRow col(km1_count);
        if (dim > 0)
            for (const Simplex& f : cells[k_cells_i[c]].simplex.facets())
                col.set(km1_cell_index.at(f.vertices));
        bd_cols.push_back(std::move(col));
        BitRow e(nk_i);
        e.set(c);
        ledger.push_back(std::move(e));
    }
    std::vector<int> pivot_col_of_row(((km1_count + 63) / 64) * 64, -1);
    std::vector<BitRow> kernel;  // vectors over K_i's dim-cells
    for (std::size_t c = 0; c < nk_i; ++c) {
        while (bd_cols[c].any()) {
            const int p = bd_cols[c].lowest_set();
            const int other = pivot_col_of_row[static_cast<std::size_t>(p)];
            if (other < 0) {
                pivot_col_of_row[static_cast<std::size_t>(p)] = static_cast<int>(c);
                break;
            }
            bd_cols[c].xor_with(bd_cols[static_cast<std::size_t>(other)]);
            ledger[c].xor_with(ledger[static_cast<std::size_t>(other)]);
        }
        if (!bd_cols[c].any()) kernel.push_back(ledger[c]);
    }

    // Re-express kernel vectors in the value_j sublevel's dim-cell coordinates.
    auto widen = [&](const BitRow& v) {
        BitRow w(nk_j);
        for (std::size_t c = 0; c < nk_i; ++c)
            if ((v.words[c >> 6] >> (c & 63)) & 1)
                w.set(k_cell_index.at(cells[k_cells_i[c]].simplex.vertices));
        return w;
    };

    RowSpace z_space;
    for (const BitRow& v : kernel) z_space.insert(widen(v));
    const std::size_t dim_z = z_space.rank();

    RowSpace b_space;
    for (std::size_t pos : kp1_cells_j) {
        BitRow col(nk_j);
        for (const Simplex& f : cells[pos].simplex.facets())
            col.set(k_cell_index.at(f.vertices));
        b_space.insert(std::move(col));
    }
    const std::size_t dim_b = b_space.rank();

    // dim(Z cap B) = dim Z + dim B - dim(Z + B); the persistent Betti number
    // is dim Z - dim(Z cap B).
    RowSpace sum_space = b_space;
    for (const BitRow& v : z_space.basis) sum_space.insert(v);
    const std::size_t dim_zb = dim_z + dim_b - sum_space.rank();
    return static_cast<unsigned>(dim_z - dim_zb);
}

bool theorem1_property_check(const FilteredPair& pair_f, const FilteredPair& pair_g,
                             double epsilon, int max_dim) {
    const PersistenceDiagram df = relative_reduce(pair_f, max_dim);
    const PersistenceDiagram dg = relative_reduce(pair_g, max_dim);
    return interleaving_certificate(df, dg, epsilon);
}

}  // namespace locho
