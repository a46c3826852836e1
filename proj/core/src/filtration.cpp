#include "locho/filtration.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace locho {

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices.size() < 2) return out;
    out.reserve(vertices.size());
    for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (i != skip) f.vertices.push_back(vertices[i]);
        out.push_back(std::move(f));
    }
    return out;
}

void Simplex::validate() const {
    if (vertices.empty()) throw std::invalid_argument("simplex: empty vertex list");
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i - 1] >= vertices[i])
            throw std::invalid_argument("simplex: vertices not strictly increasing");
}

bool canonical_cell_less(const FiltrationCell& a, const FiltrationCell& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex.vertices < b.simplex.vertices;
}

int Filtration::max_vertex() const {
    int m = -1;
    for (const FiltrationCell& c : cells_)
        if (!c.simplex.vertices.empty()) m = std::max(m, c.simplex.vertices.back());
    return m;
}

void Filtration::validate() const {
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t j = 0; j < cells_.size(); ++j) {
        const FiltrationCell& cell = cells_[j];
        cell.simplex.validate();
        if (j > 0 && cells_[j - 1].value > cell.value)
            throw std::invalid_argument("filtration: values not nondecreasing along the order");
        for (const Simplex& f : cell.simplex.facets()) {
            auto it = position.find(f.vertices);
            if (it == position.end())
                throw std::invalid_argument("filtration: missing or late face");
            if (cells_[it->second].value > cell.value)
                throw std::invalid_argument("filtration: face value exceeds coface value");
        }
        if (!position.emplace(cell.simplex.vertices, j).second)
            throw std::invalid_argument("filtration: duplicate simplex");
    }
}

bool Filtration::is_canonically_sorted() const {
    for (std::size_t j = 1; j < cells_.size(); ++j)
        if (canonical_cell_less(cells_[j], cells_[j - 1])) return false;
    return true;
}

void Filtration::canonicalize() {
    std::sort(cells_.begin(), cells_.end(), canonical_cell_less);
}

void FilteredPair::validate() const {
    ambient.validate();
    if (in_subcomplex.size() != ambient.size())
        throw std::invalid_argument("filtered pair: flag vector size mismatch");
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t j = 0; j < ambient.size(); ++j)
        position.emplace(ambient[j].simplex.vertices, j);
    for (std::size_t j = 0; j < ambient.size(); ++j) {
        if (!in_subcomplex[j]) continue;
        for (const Simplex& f : ambient[j].simplex.facets()) {
            auto it = position.find(f.vertices);
            if (it == position.end() || !in_subcomplex[it->second])
                throw std::invalid_argument("filtered pair: flagged cells not face-closed");
        }
    }
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

void write_filtration(std::ostream& out, const Filtration& filtration) {
    for (const FiltrationCell& c : filtration.cells()) {
        out << format_double(c.value);
        for (int v : c.simplex.vertices) out << ' ' << v;
        out << '\n';
    }
}

void write_filtration_file(const std::string& path, const Filtration& filtration) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_filtration(out, filtration);
}

}  // namespace locho
