// locho: multi-scale local homology of a sampled space near a query point.
//
// Subcommands: gen, rips, local-alpha, local-r, bottleneck, check-chain.
// Exit codes: 0 success, 1 usage or input error, 2 computation-guarantee
// error (the requested parameters void the approximation bound).
#include <charconv>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "locho/bottleneck.hpp"
#include "locho/complex.hpp"
#include "locho/geometry.hpp"
#include "locho/local_homology.hpp"
#include "locho/persistence.hpp"
#include "locho/synthetic.hpp"

namespace {

locho::Point parse_coordinates(const std::string& text) {
    locho::Point p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        double v = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            throw CLI::ValidationError("--x", "bad coordinate '" + tok + "'");
        p.push_back(v);
    }
    if (p.empty()) throw CLI::ValidationError("--x", "empty coordinate list");
    return p;
}

std::string format_double(double v) {
    if (v == std::numeric_limits<double>::infinity()) return "inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-scale local homology from point samples"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a sampled test space");
    std::string gen_kind, gen_out;
    double gen_density = 0.0;
    int gen_arms = 3;
    gen->add_option("--kind", gen_kind, "segment|circle|cross2d|planes3d|cone2d")->required();
    gen->add_option("--density", gen_density, "target sample density")->required();
    gen->add_option("--arms", gen_arms, "arm count for cone2d");
    gen->add_option("--out", gen_out, "output point-cloud file")->required();

    // rips
    auto* rips = app.add_subcommand("rips", "absolute Vietoris-Rips persistence");
    std::string rips_in, rips_out, rips_dump;
    double rips_scale = 0.0;
    int rips_dim = 1;
    rips->add_option("--in", rips_in, "input point-cloud file")->required();
    rips->add_option("--max-scale", rips_scale, "diameter cap")->required();
    rips->add_option("--max-dim", rips_dim, "top homological dimension");
    rips->add_option("--out", rips_out, "output diagram file")->required();
    rips->add_option("--dump", rips_dump, "also dump the filtration (debug)");

    // local-alpha
    auto* la = app.add_subcommand("local-alpha", "alpha-filtration local homology");
    std::string la_in, la_out, la_x;
    double la_r = 0.0, la_eps = 0.0, la_scale = 0.0;
    int la_dim = 1;
    la->add_option("--in", la_in, "input point-cloud file")->required();
    la->add_option("--x", la_x, "basepoint, comma-separated coordinates")->required();
    la->add_option("--r", la_r, "locality radius")->required();
    la->add_option("--eps", la_eps, "asserted sample density")->required();
    la->add_option("--max-scale", la_scale, "scale cap (must stay below r)")->required();
    la->add_option("--max-dim", la_dim, "top homological dimension");
    la->add_option("--out", la_out, "output diagram file (sidecar <out>.meta)")->required();

    // local-r
    auto* lr = app.add_subcommand("local-r", "r-filtration local homology");
    std::string lr_in, lr_out, lr_rel, lr_x;
    double lr_eps = 0.0, lr_r = 1.0;
    int lr_dim = 1;
    lr->add_option("--in", lr_in, "input point-cloud file")->required();
    lr->add_option("--x", lr_x, "basepoint, comma-separated coordinates")->required();
    lr->add_option("--eps", lr_eps, "asserted sample density (complex scale is 2*eps)")
        ->required();
    lr->add_option("--r", lr_r, "locality radius recorded in metadata");
    lr->add_option("--max-dim", lr_dim, "top homological dimension");
    lr->add_option("--out", lr_out, "sublevel diagram file (sidecar <out>.meta)")->required();
    lr->add_option("--out-relative", lr_rel,
                   "translated relative diagram file (default <out>.relative)");

    // bottleneck
    auto* bn = app.add_subcommand("bottleneck", "bottleneck distance between two diagram files");
    std::string bn_a, bn_b;
    bn->add_option("diagram1", bn_a)->required();
    bn->add_option("diagram2", bn_b)->required();

    // check-chain
    auto* cc = app.add_subcommand("check-chain", "verify the Cech/Rips inclusion chain");
    std::string cc_in;
    double cc_alpha = 0.0;
    int cc_dim = 1;
    cc->add_option("--in", cc_in, "input point-cloud file")->required();
    cc->add_option("--alpha", cc_alpha, "chain scale")->required();
    cc->add_option("--max-dim", cc_dim, "top simplex dimension checked is max-dim + 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (*gen) {
            locho::SpaceSpec spec{locho::parse_space_kind(gen_kind), gen_density, gen_arms, 0};
            locho::write_point_cloud_file(gen_out, locho::generate(spec));
        } else if (*rips) {
            locho::PointCloud cloud = locho::read_point_cloud_file(rips_in);
            locho::Filtration f = locho::build_rips(cloud, rips_scale, rips_dim);
            if (!rips_dump.empty()) locho::write_filtration_file(rips_dump, f);
            locho::write_diagram_file(rips_out, locho::reduce(f, rips_dim));
        } else if (*la) {
            locho::PointCloud cloud = locho::read_point_cloud_file(la_in);
            locho::LocalQuery query{parse_coordinates(la_x), la_r, la_eps, la_scale, la_dim};
            locho::ApproxResult res = locho::alpha_pipeline(cloud, query);
            locho::write_diagram_file(la_out, res.diagram);
            locho::write_metadata_file(la_out + ".meta", res);
        } else if (*lr) {
            locho::PointCloud cloud = locho::read_point_cloud_file(lr_in);
            locho::LocalQuery query{parse_coordinates(lr_x), lr_r, lr_eps, 2.0 * lr_eps, lr_dim};
            locho::ApproxResult res = locho::r_pipeline(cloud, query);
            locho::write_diagram_file(lr_out, res.diagram);
            locho::write_diagram_file(lr_rel.empty() ? lr_out + ".relative" : lr_rel,
                                      locho::translate_diagram(res.diagram));
            locho::write_metadata_file(lr_out + ".meta", res);
        } else if (*bn) {
            const double d = locho::bottleneck_distance(locho::read_diagram_file(bn_a),
                                                        locho::read_diagram_file(bn_b));
            std::cout << format_double(d) << '\n';
        } else if (*cc) {
            locho::PointCloud cloud = locho::read_point_cloud_file(cc_in);
            const bool ok = locho::verify_interleaving_chain(cloud, cc_alpha, cc_dim);
            std::cout << (ok ? "PASS" : "FAIL") << '\n';
        }
    } catch (const locho::GuaranteeLapsedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
