#include "locho/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace locho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_value(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_value(const std::string& tok, std::size_t lineno) {
    if (tok == "inf") return kInf;
    if (tok == "-inf") return -kInf;
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::invalid_argument("diagram: bad value on line " + std::to_string(lineno));
    return v;
}

bool point_less(const DiagramPoint& a, const DiagramPoint& b) {
    return std::tie(a.dim, a.birth, a.death) < std::tie(b.dim, b.birth, b.death);
}

}  // namespace

bool DiagramPoint::essential() const { return death == kInf || birth == -kInf; }

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> points) {
    points_.reserve(points.size());
    for (const DiagramPoint& p : points) add(p.dim, p.birth, p.death);
}

void PersistenceDiagram::add(int dim, double birth, double death) {
    if (death < birth)
        throw std::invalid_argument("diagram: death precedes birth");
    if (dim < 0) throw std::invalid_argument("diagram: negative dimension");
    if (death == birth) return;
    points_.push_back({dim, birth, death});
}

void PersistenceDiagram::canonicalize() {
    std::sort(points_.begin(), points_.end(), point_less);
}

bool same_diagram(PersistenceDiagram a, PersistenceDiagram b) {
    a.canonicalize();
    b.canonicalize();
    return a.points() == b.points();
}

PersistenceDiagram read_diagram(std::istream& in) {
    PersistenceDiagram d;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        int dim;
        std::string bt, dt;
        if (!(ss >> dim >> bt >> dt))
            throw std::invalid_argument("diagram: malformed line " + std::to_string(lineno));
        std::string extra;
        if (ss >> extra)
            throw std::invalid_argument("diagram: trailing tokens on line " + std::to_string(lineno));
        d.add(dim, parse_value(bt, lineno), parse_value(dt, lineno));
    }
    return d;
}

PersistenceDiagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open diagram file: " + path);
    return read_diagram(in);
}

void write_diagram(std::ostream& out, const PersistenceDiagram& diagram) {
    for (const DiagramPoint& p : diagram.points())
        out << p.dim << ' ' << format_value(p.birth) << ' ' << format_value(p.death) << '\n';
}

void write_diagram_file(const std::string& path, const PersistenceDiagram& diagram) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_diagram(out, diagram);
}

}  // namespace locho
