#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace locho {

/// Abstract simplex: a strictly increasing, nonempty list of vertex indices.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    Simplex(std::initializer_list<int> v) : vertices(v) {}
    explicit Simplex(std::vector<int> v) : vertices(std::move(v)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex& o) const = default;
    auto operator<=>(const Simplex& o) const = default;

    /// The dim-1 faces, each obtained by dropping one vertex.
    std::vector<Simplex> facets() const;
    /// Throws std::invalid_argument unless vertices are sorted, distinct, nonempty.
    void validate() const;
};

struct FiltrationCell {
    Simplex simplex;
    double value = 0.0;
};

/// Total order used by every constructor in this library: by value, then
/// dimension, then lexicographic vertex list. Ties are thereby broken
/// reproducibly and faces always precede cofaces.
bool canonical_cell_less(const FiltrationCell& a, const FiltrationCell& b);

/// A face-closed, value-monotone ordered list of simplices. The stored order
/// is the filtration order; builders emit the canonical (value, dim, lex)
/// order, but any order with nondecreasing values and faces before cofaces is
/// accepted by the persistence routines.
class Filtration {
public:
    Filtration() = default;
    explicit Filtration(std::vector<FiltrationCell> cells) : cells_(std::move(cells)) {}

    const std::vector<FiltrationCell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const FiltrationCell& operator[](std::size_t i) const { return cells_[i]; }

    /// Largest vertex index occurring in any cell, or -1 when empty.
    int max_vertex() const;

    /// Checks the type invariants: simplices well-formed and unique, every
    /// facet present at an earlier position, values nondecreasing along the
    /// order and monotone under the face relation. Throws std::invalid_argument.
    void validate() const;

    /// True when the stored order is exactly the canonical (value, dim, lex) sort.
    bool is_canonically_sorted() const;

    /// Re-sorts the cells into canonical order.
    void canonicalize();

private:
    std::vector<FiltrationCell> cells_;
};

/// A filtration together with a face-closed flagged subfiltration; the flags
/// mark the cells of the subcomplex A inside the ambient complex K, giving
/// the pair (K, A) at every filtration value.
struct FilteredPair {
    Filtration ambient;
    std::vector<char> in_subcomplex;  // parallel to ambient.cells()

    /// Ambient invariants plus: flag vector sized to the ambient and the
    /// flagged cells face-closed. Throws std::invalid_argument.
    void validate() const;
};

// Debug dump: one cell per line, "value v0 v1 ... vk", in filtration order.
void write_filtration(std::ostream& out, const Filtration& filtration);
void write_filtration_file(const std::string& path, const Filtration& filtration);

}  // namespace locho
