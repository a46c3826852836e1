#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace locho {

/// One persistence class: born at `birth`, dead entering `death`. Death may
/// be +inf (essential class); birth may be -inf, which only occurs for the
/// essential markers produced by translate_diagram.
struct DiagramPoint {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;

    double persistence() const { return death - birth; }
    bool essential() const;
    bool operator==(const DiagramPoint&) const = default;
};

/// Multiset of diagram points. Zero-persistence points carry no information
/// and are dropped on insertion.
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;
    explicit PersistenceDiagram(std::vector<DiagramPoint> points);

    /// Appends unless death == birth.
    void add(int dim, double birth, double death);

    const std::vector<DiagramPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// Sorts points by (dim, birth, death) for reproducible output and
    /// multiset comparison.
    void canonicalize();

private:
    std::vector<DiagramPoint> points_;
};

/// Multiset equality after canonicalization.
bool same_diagram(PersistenceDiagram a, PersistenceDiagram b);

// Diagram text format: one point per line, "dim birth death"; infinite death
// written "inf" (and the translate_diagram essential marker birth "-inf");
// blank lines and '#' comments ignored.
PersistenceDiagram read_diagram(std::istream& in);
PersistenceDiagram read_diagram_file(const std::string& path);
void write_diagram(std::ostream& out, const PersistenceDiagram& diagram);
void write_diagram_file(const std::string& path, const PersistenceDiagram& diagram);

}  // namespace locho
