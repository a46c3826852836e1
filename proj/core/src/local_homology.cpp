#include "locho/local_homology.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "locho/complex.hpp"
#include "locho/persistence.hpp"

namespace locho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

double certified_bound_alpha(double epsilon, double alpha, double r) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("certified_bound_alpha: epsilon must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("certified_bound_alpha: alpha must be positive");
    if (alpha >= r)
        throw GuaranteeLapsedError("certified_bound_alpha: guarantee lapses for alpha >= r");
    return 2.0 * epsilon + alpha + alpha * alpha / r;
}

ApproxResult alpha_pipeline(const PointCloud& cloud, const LocalQuery& query) {
    query.validate_with(cloud);
    if (query.max_scale >= query.radius)
        throw GuaranteeLapsedError(
            "alpha_pipeline: guarantee lapses for max_scale >= radius (alpha must stay below r)");

    const Filtration rips = build_rips(cloud, query.max_scale, query.max_dim);
    const BallSplit split = split_by_ball(cloud, query);
    const FilteredPair pair = restrict_to_vertices(rips, split.outside);

    ApproxResult res;
    res.diagram = relative_reduce(pair, query.max_dim);
    res.pipeline = PipelineKind::alpha;
    res.epsilon = query.epsilon;
    res.radius = query.radius;
    res.scale = query.max_scale;
    res.max_dim = query.max_dim;
    res.bound = certified_bound_alpha(query.epsilon, query.max_scale, query.radius);
    std::ostringstream formula;
    formula << "2*eps + alpha + alpha^2/r at eps=" << format_double(query.epsilon)
            << " alpha=" << format_double(query.max_scale)
            << " r=" << format_double(query.radius);
    res.bound_formula = formula.str();
    return res;
}

ApproxResult r_pipeline(const PointCloud& cloud, const LocalQuery& query) {
    LocalQuery q = query;
    // The complex scale is pinned to 2*epsilon; radius plays no role in the
    // computation (the r axis is the filtration axis itself).
    q.max_scale = 2.0 * query.epsilon;
    q.validate_with(cloud);

    ApproxResult res;
    res.pipeline = PipelineKind::r;
    res.epsilon = query.epsilon;
    res.radius = query.radius;
    res.scale = q.max_scale;
    res.max_dim = query.max_dim;
    res.bound = 4.0 * query.epsilon;
    std::ostringstream formula;
    formula << "4*eps at eps=" << format_double(query.epsilon)
            << "; assumes a 2*eps-homotopy equivalence between the offset space and the space";
    res.bound_formula = formula.str();

    if (cloud.empty()) return res;
    const Filtration complex = build_rips(cloud, q.max_scale, q.max_dim);
    std::vector<double> f = distance_to_basepoint(cloud, q);
    for (double& v : f) v = -v;
    const Filtration lower_star = lower_star_filtration(complex, f);
    res.diagram = reduce(lower_star, q.max_dim);
    return res;
}

PersistenceDiagram translate_diagram(const PersistenceDiagram& ordinary) {
    PersistenceDiagram out;
    for (const DiagramPoint& p : ordinary.points()) {
        if (p.death == kInf)
            out.add(p.dim + 1, -kInf, -p.birth);
        else
            out.add(p.dim + 1, -p.death, -p.birth);
    }
    out.canonicalize();
    return out;
}

std::vector<DiagramPoint> essential_markers(const PersistenceDiagram& translated) {
    std::vector<DiagramPoint> out;
    for (const DiagramPoint& p : translated.points())
        if (p.birth == -kInf) out.push_back(p);
    return out;
}

void write_metadata(std::ostream& out, const ApproxResult& result) {
    out << "pipeline=" << (result.pipeline == PipelineKind::alpha ? "alpha" : "r") << '\n';
    out << "epsilon=" << format_double(result.epsilon) << '\n';
    out << "r=" << format_double(result.radius) << '\n';
    out << "max_scale=" << format_double(result.scale) << '\n';
    out << "max_dim=" << result.max_dim << '\n';
    out << "bound=" << format_double(result.bound) << '\n';
    out << "bound_formula=" << result.bound_formula << '\n';
}

void write_metadata_file(const std::string& path, const ApproxResult& result) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_metadata(out, result);
}

}  // namespace locho
