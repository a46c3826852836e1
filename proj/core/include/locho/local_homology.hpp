#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "locho/diagram.hpp"
#include "locho/geometry.hpp"

namespace locho {

/// Raised when a requested computation falls outside the regime where the
/// approximation bound is valid (e.g. scale cap >= locality radius).
class GuaranteeLapsedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class PipelineKind { alpha, r };

/// A diagram plus the certified bottleneck distance to the ideal filtration's
/// diagram, with the inputs that produced the bound recorded so it can be
/// reproduced.
struct ApproxResult {
    PersistenceDiagram diagram;
    double bound = 0.0;
    std::string bound_formula;
    PipelineKind pipeline = PipelineKind::alpha;
    double epsilon = 0.0;
    double radius = 0.0;
    double scale = 0.0;  // max filtration scale (alpha) / fixed complex scale (r)
    int max_dim = 0;
};

/// Certified interleaving radius of the alpha pipeline: 2e + a + a^2/r.
/// Throws GuaranteeLapsedError when alpha >= r.
double certified_bound_alpha(double epsilon, double alpha, double r);

/// Alpha-filtration local homology: relative persistence of the Rips
/// filtration of the cloud against the sub-Rips on the vertices outside the
/// ball B_r(x), reported with the worst-case certified bound at
/// alpha = max_scale. Requires max_scale < radius.
ApproxResult alpha_pipeline(const PointCloud& cloud, const LocalQuery& query);

/// r-filtration local homology: lower-star persistence of f = -d_x on the
/// fixed-scale Rips complex at diameter threshold 2*epsilon; certified bound
/// 4*epsilon. The returned diagram describes the sublevel-set module of f;
/// translate_diagram yields the corresponding relative description.
ApproxResult r_pipeline(const PointCloud& cloud, const LocalQuery& query);

/// Symmetry translation from the ordinary sublevel diagram of f = -d_x to
/// the relative description of the r-filtration: finite (k, b, d) maps to
/// (k+1, -d, -b); essential (k, b, inf) maps to the marker (k+1, -inf, -b)
/// so essential classes stay identifiable rather than being invented as
/// finite relative points.
PersistenceDiagram translate_diagram(const PersistenceDiagram& ordinary);

/// The -inf-birth markers of a translated diagram, i.e. its essential list.
std::vector<DiagramPoint> essential_markers(const PersistenceDiagram& translated);

/// Sidecar metadata block: key=value lines (pipeline, epsilon, r, max_scale,
/// max_dim, bound, bound_formula).
void write_metadata(std::ostream& out, const ApproxResult& result);
void write_metadata_file(const std::string& path, const ApproxResult& result);

}  // namespace locho
