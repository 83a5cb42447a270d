#include "horn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "horn/error.hpp"
#include "horn/oracle.hpp"

namespace horn {

namespace {

std::uint64_t default_seed() {
    if (const char* s = std::getenv("HORN_SEED")) return std::strtoull(s, nullptr, 10);
    return 42;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw HornError(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AnglePair parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw HornError(ErrorCode::ParseError, "expected 'a1,a2' in '" + text + "'");
    return AnglePair(parse_angle(text.substr(0, comma)), parse_angle(text.substr(comma + 1)));
}

SliceSpec parse_slice(const std::string& text, int res) {
    if (text == "sym" || text == "Sym" || text == "symmetric") return SliceSpec::symmetric(res);
    auto semi = text.find(';');
    if (semi == std::string::npos) throw HornError(ErrorCode::ParseError, "expected 'sym' or 'b1,b2;c1,c2'");
    return SliceSpec::fixed(parse_pair(text.substr(0, semi)), parse_pair(text.substr(semi + 1)), res);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiplicative Horn problem for elliptic classes in PU(2,1)", "horn"};
    app.require_subcommand(1);

    std::string tau, matrix, matrix_file, beta, gamma, out_path, slice_text = "sym";
    double tol = -1.0;
    int res = 600, grid = 12, threads = 1;
    bool sym = false;
    std::uint64_t seed = default_seed();
    std::size_t samples = 200000;

    auto* classify_cmd = app.add_subcommand("classify", "classify a 3x3 J-unitary matrix given as JSON");
    classify_cmd->add_option("--matrix", matrix, "row-major JSON matrix of {re, im}");
    classify_cmd->add_option("--file", matrix_file, "file holding the JSON matrix");

    auto* member_cmd = app.add_subcommand("member", "membership report for a class triple");
    member_cmd->add_option("--tau", tau, "a1,a2;b1,b2;c1,c2")->required();
    member_cmd->add_option("--tol", tol, "comparison band");

    auto* walls_cmd = app.add_subcommand("walls", "active walls at a triple, or the whole catalog");
    walls_cmd->add_option("--tau", tau, "a1,a2;b1,b2;c1,c2");
    walls_cmd->add_option("--tol", tol, "comparison band");

    auto* cells_cmd = app.add_subcommand("cells", "the cell table");

    auto* slice_cmd = app.add_subcommand("slice", "render a slice as SVG");
    slice_cmd->add_flag("--sym", sym, "symmetric slice");
    slice_cmd->add_option("--beta", beta, "b1,b2");
    slice_cmd->add_option("--gamma", gamma, "c1,c2");
    slice_cmd->add_option("--res", res, "resolution in pixels")->check(CLI::Range(16, 20000));
    slice_cmd->add_option("--tol", tol, "membership band");
    slice_cmd->add_option("--out", out_path, "SVG output path")->required();

    auto* construct_cmd = app.add_subcommand("construct", "search for a witness triple");
    construct_cmd->add_option("--tau", tau, "a1,a2;b1,b2;c1,c2")->required();
    construct_cmd->add_option("--seed", seed, "random seed (default $HORN_SEED or 42)");
    construct_cmd->add_option("--samples", samples, "Monte-Carlo budget");
    construct_cmd->add_option("--tol", tol, "class error target");

    auto* verify_cmd = app.add_subcommand("verify", "compare predictions with witness search on a grid");
    verify_cmd->add_option("--slice", slice_text, "'sym' or 'b1,b2;c1,c2'");
    verify_cmd->add_option("--grid", grid, "grid size")->check(CLI::Range(2, 1000));
    verify_cmd->add_option("--samples", samples, "Monte-Carlo budget per point");
    verify_cmd->add_option("--seed", seed, "random seed (default $HORN_SEED or 42)");
    verify_cmd->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*classify_cmd) {
            std::string text = !matrix.empty() ? matrix : (!matrix_file.empty() ? read_text(matrix_file) : "");
            if (text.empty()) throw HornError(ErrorCode::ParseError, "give --matrix or --file");
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw HornError(ErrorCode::ParseError, e.what());
            }
            out << to_json(classify(GroupElement(matrix_from_json(j)))).dump(2) << "\n";
        } else if (*member_cmd) {
            ClassTriple t = parse_triple(tau);
            out << to_json(polytope_member(t, tol > 0 ? tol : t.default_tol())).dump(2) << "\n";
        } else if (*walls_cmd) {
            nlohmann::json j = nlohmann::json::array();
            if (tau.empty()) {
                for (const auto& w : wall_catalog()) j.push_back(to_json(w));
            } else {
                ClassTriple t = parse_triple(tau);
                for (const auto& a : active_walls(t, tol > 0 ? tol : t.default_tol())) {
                    nlohmann::json w = to_json(wall_catalog()[a.index]);
                    w["signed_distance"] = a.signed_distance;
                    j.push_back(w);
                }
            }
            out << j.dump(2) << "\n";
        } else if (*cells_cmd) {
            out << cell_table_json().dump(2) << "\n";
        } else if (*slice_cmd) {
            SliceSpec spec;
            if (sym) {
                spec = SliceSpec::symmetric(res);
            } else {
                if (beta.empty() || gamma.empty())
                    throw HornError(ErrorCode::ParseError, "slice needs --sym or both --beta and --gamma");
                spec = SliceSpec::fixed(parse_pair(beta), parse_pair(gamma), res);
            }
            if (tol > 0) spec.tol = tol;
            SliceRaster raster = rasterize_slice(spec);
            std::ofstream f(out_path);
            if (!f) throw HornError(ErrorCode::ParseError, "cannot write " + out_path);
            f << svg_of(spec, raster);
            out << nlohmann::json{{"slice", spec.label()},
                                  {"out", out_path},
                                  {"cells_omega", raster.components(Layer::Omega)},
                                  {"cells_1", raster.components(Layer::One)},
                                  {"cells_omega2", raster.components(Layer::Omega2)},
                                  {"walls", raster.walls.size()}}
                       .dump(2)
                << "\n";
        } else if (*construct_cmd) {
            ClassTriple t = parse_triple(tau);
            SamplerConfig cfg;
            cfg.seed = seed;
            cfg.budget = samples;
            if (tol > 0) cfg.tol = tol;
            WitnessSearch s = find_witness(t, cfg);
            out << to_json(s).dump(2) << "\n";
            return s.found ? 0 : 1;
        } else if (*verify_cmd) {
            SamplerConfig cfg;
            cfg.seed = seed;
            cfg.budget = samples;
            GridReport r = verify_grid(parse_slice(slice_text, 600), grid, cfg, 0.05, threads);
            out << to_json(r).dump(2) << "\n";
            return r.disagreements.empty() && r.missing_witnesses.empty() ? 0 : 1;
        }
    } catch (const HornError& e) {
        err << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    }
    return 0;
}

}  // namespace horn
