// iccolor: cyclic 5-coloring of plane graphs whose 4-faces are
// vertex-disjoint, plus the charge audit and drawing conversion around it.
//
// Exit codes: 0 success, 1 invalid input, 2 infeasible or anomaly,
// 3 internal invariant violation (outcomes the theorem forbids).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "iccolor/color.hpp"
#include "iccolor/detect.hpp"
#include "iccolor/discharge.hpp"
#include "iccolor/gen.hpp"
#include "iccolor/oracle.hpp"
#include "iccolor/pg_io.hpp"
#include "iccolor/planarize.hpp"
#include "iccolor/validate.hpp"

namespace {

using namespace icc;

void print_coloring(std::ostream& out, const PlaneGraph& g, const Coloring& c) {
    for (VertexId v : g.vertices()) out << "v " << v << ' ' << c.get(v) << '\n';
}

int oracle_guard() {
    if (const char* env = std::getenv("ICCOLOR_MAX_ORACLE_N")) return std::atoi(env);
    return 20;
}

int cmd_check(const std::string& path) {
    PlaneGraph g = read_pg_file(path);
    auto rep = validate_hypotheses(g);
    if (!rep.admissible()) {
        std::cerr << rep.to_string();
        return 1;
    }
    std::cout << "ok: " << g.n_vertices() << " vertices, " << g.n_edges() << " edges, "
              << g.n_faces() << " faces\n";
    return 0;
}

int cmd_color(const std::string& path, bool trace) {
    PlaneGraph g = read_pg_file(path);
    ReductionTrace tr;
    Coloring c = color(g, trace ? &tr : nullptr);
    ICC_CHECK(is_valid_cyclic_coloring(g, c), "emitted coloring failed re-verification");
    if (trace)
        for (const auto& line : tr.lines) std::cerr << line << '\n';
    print_coloring(std::cout, g, c);
    return 0;
}

int cmd_convert(const std::string& path) {
    ICDrawing d = read_icd_file(path);
    auto [g, map] = planarize(d);
    std::filesystem::path base(path);
    auto pg_path = base;
    pg_path.replace_extension(".pg");
    auto map_path = base;
    map_path.replace_extension(".map");
    std::ofstream pg_out(pg_path);
    write_pg(pg_out, g);
    std::ofstream map_out(map_path);
    write_crossing_map(map_out, map);
    std::cout << "wrote " << pg_path.string() << " and " << map_path.string() << '\n';
    return 0;
}

int cmd_color_drawing(const std::string& path, bool trace) {
    ICDrawing d = read_icd_file(path);
    auto [g, map] = planarize(d);
    ReductionTrace tr;
    Coloring c = color(g, trace ? &tr : nullptr);
    Coloring lifted = lift_coloring(d, g, map, c);
    for (auto [u, w] : original_edges(d, map))
        ICC_CHECK(lifted.get(u) != lifted.get(w), "lifted coloring failed re-verification");
    if (trace)
        for (const auto& line : tr.lines) std::cerr << line << '\n';
    print_coloring(std::cout, g, lifted);
    return 0;
}

int cmd_oracle(const std::string& path, int k, int max_n) {
    PlaneGraph g = read_pg_file(path);
    OracleResult res = oracle_color(g, k, max_n);
    std::cout << (res.feasible ? "feasible" : "infeasible") << " k=" << k
              << " nodes=" << res.nodes << '\n';
    if (res.feasible) print_coloring(std::cout, g, res.witness);
    return res.feasible ? 0 : 2;
}

int cmd_audit(const std::string& path) {
    PlaneGraph g = read_pg_file(path);
    auto rep = validate_hypotheses(g);
    if (!rep.admissible()) {
        std::cerr << rep.to_string();
        return 1;
    }
    AuditReport a = audit(g);
    std::cout << a.to_string();
    if (a.anomaly_count > 0) {
        std::cerr << "anomaly: " << a.anomaly_count
                  << " negative element(s) without a nearby configuration\n";
        return 2;
    }
    return 0;
}

int cmd_gen(int n, int quads, std::uint64_t seed, const std::string& mode,
            const std::string& out_path) {
    GenSpec spec{n, quads, seed, parse_gen_mode(mode)};
    std::ofstream out(out_path);
    if (!out) throw invalid_input_error("cannot write " + out_path);
    if (spec.mode == GenMode::ICDrawing) {
        ICDrawing d = gen_drawing(spec);
        write_icd(out, d);
    } else {
        PlaneGraph g = gen_instance(spec);
        write_pg(out, g);
    }
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int cmd_degen(const std::string& path) {
    PlaneGraph g = read_pg_file(path);
    Coloring c = color_degenerate(g);
    int max_face = 0;
    for (int f = 0; f < g.n_faces(); ++f) max_face = std::max(max_face, g.face(f).size());
    std::cerr << "colors used: " << c.palette_size << " (max face size " << max_face << ")\n";
    print_coloring(std::cout, g, c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic 5-coloring of plane graphs with vertex-disjoint 4-faces"};
    app.require_subcommand(1);

    std::string path, mode = "triangulation", out_path = "out.pg";
    int k = 5, n = 20, quads = 0;
    std::uint64_t seed = 1;
    int max_n = oracle_guard();
    bool trace = false;

    auto* check = app.add_subcommand("check", "validate a .pg instance");
    check->add_option("file", path)->required();

    auto* colorc = app.add_subcommand("color", "cyclically 5-color a .pg instance");
    colorc->add_option("file", path)->required();
    colorc->add_flag("--trace", trace, "write the reduction trace to stderr");

    auto* convert = app.add_subcommand("convert", "planarize a .icd drawing to .pg + .map");
    convert->add_option("file", path)->required();

    auto* cdraw = app.add_subcommand("color-drawing", "5-color a drawing with independent crossings");
    cdraw->add_option("file", path)->required();
    cdraw->add_flag("--trace", trace, "write the reduction trace to stderr");

    auto* oracle = app.add_subcommand("oracle", "exact cyclic k-colorability by backtracking");
    oracle->add_option("file", path)->required();
    oracle->add_option("--k", k, "number of colors")->required();
    oracle->add_option("--max-n", max_n, "size guard override");

    auto* auditc = app.add_subcommand("audit", "charge ledger and negative-element report");
    auditc->add_option("file", path)->required();

    auto* gen = app.add_subcommand("gen", "generate a deterministic random instance");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--quads", quads, "number of disjoint 4-faces");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--mode", mode, "triangulation | with-quads | ic-drawing");
    gen->add_option("--out", out_path, "output path")->required();

    auto* degen = app.add_subcommand("degen", "greedy coloring for disjoint big faces");
    degen->add_option("file", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(path);
        if (colorc->parsed()) return cmd_color(path, trace);
        if (convert->parsed()) return cmd_convert(path);
        if (cdraw->parsed()) return cmd_color_drawing(path, trace);
        if (oracle->parsed()) return cmd_oracle(path, k, max_n);
        if (auditc->parsed()) return cmd_audit(path);
        if (gen->parsed()) return cmd_gen(n, quads, seed, mode, out_path);
        if (degen->parsed()) return cmd_degen(path);
    } catch (const icc::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const icc::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const icc::internal_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
