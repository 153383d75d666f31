#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semc/catalog.hpp"
#include "semc/enumerate.hpp"
#include "semc/fingerprint.hpp"
#include "semc/graph.hpp"
#include "semc/intpoly.hpp"
#include "semc/isomorphism.hpp"
#include "semc/json_io.hpp"
#include "semc/orientation.hpp"
#include "semc/symmetry.hpp"

using nlohmann::json;
using namespace semc;

namespace {

json map_to_obj(const PolyhedralMap& m) {
    json j;
    j["vertices"] = m.n_vertices;
    j["faces"] = m.faces;
    return j;
}

int cmd_enumerate(const std::string& type_text, int vertices, std::optional<long long> chi,
                  std::optional<long long> budget, int jobs, const std::string& out_path,
                  bool all_rotations) {
    FaceSequence t = FaceSequence::parse(type_text);
    json out;
    out["type"] = t.to_string();
    out["vertices"] = vertices;
    if (chi) {
        auto computed = euler_of_type(t, vertices);
        out["chi_requested"] = *chi;
        if (!computed || !computed->is_integer() || computed->num != *chi) {
            out["classes"] = 0;
            out["representatives"] = json::array();
            out["note"] = computed && computed->is_integer()
                              ? "type has Euler characteristic " + std::to_string(computed->num)
                              : "type is arithmetically inadmissible at this vertex count";
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    }
    EnumOptions opts;
    opts.node_budget = budget;
    opts.jobs = jobs;
    if (all_rotations) opts.seed = EnumOptions::Seed::AllRotations;
    CensusResult r = enumerate_sems(t, vertices, opts);
    out["classes"] = r.count();
    out["complete"] = r.complete;
    out["nodes"] = r.stats.nodes;
    json reps = json::array();
    for (const PolyhedralMap& m : r.representatives) reps.push_back(map_to_obj(m));
    out["representatives"] = reps;
    std::string text = out.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

int cmd_sweep(int max_vertices, long long chi, int jobs) {
    EnumOptions opts;
    opts.jobs = jobs;
    json rows = json::array();
    for (const SweepCell& c : sweep(max_vertices, chi, opts)) {
        json r;
        r["vertices"] = c.vertices;
        r["type"] = c.type.to_string();
        r["classes"] = c.classes;
        r["complete"] = c.complete;
        rows.push_back(r);
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_invariants(const std::string& path, std::optional<int> gi, bool charpoly, bool fingerprint) {
    MapFile mf = load_map(path);
    json out;
    out["vertices"] = mf.map.n_vertices;
    out["faces"] = mf.map.faces.size();
    out["edges"] = mf.map.edge_count();
    out["euler_characteristic"] = euler_characteristic(mf.map);
    out["type"] = face_sequence_at(mf.map, 0).to_string();
    out["semi_equivelar"] = is_sem(mf.map, face_sequence_at(mf.map, 0));
    if (gi) {
        SimpleGraph g = common_neighbor_graph(mf.map, *gi);
        out["gi"] = {{"i", *gi}, {"edges", g.edges}};
    }
    if (charpoly) {
        IntPolynomial p = char_poly(edge_graph(mf.map));
        json coeffs = json::array();
        for (const mpz_class& c : p.coeffs()) coeffs.push_back(c.get_str());
        out["charpoly"] = {{"coefficients_desc", coeffs}, {"pretty", p.to_string()}};
    }
    if (fingerprint) out["fingerprint"] = json::parse(invariant_fingerprint(mf.map).to_json());
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_isomorphic(const std::string& a, const std::string& b) {
    MapFile ma = load_map(a), mb = load_map(b);
    auto w = are_isomorphic(ma.map, mb.map);
    if (!w) {
        std::cout << "not isomorphic\n";
        return 1;
    }
    std::cout << w->to_cycles() << "\n";
    return 0;
}

int cmd_aut(const std::string& path) {
    MapFile mf = load_map(path);
    PermGroup g = automorphism_group(mf.map);
    GroupId id = identify_group(g);
    json out;
    out["order"] = g.order().get_str();
    out["name"] = id.to_string();
    json gens = json::array();
    for (const Permutation& p : g.generators())
        if (!p.is_identity()) gens.push_back(p.to_cycles());
    out["generators"] = gens;
    json vorbs = json::array();
    for (const Orbit& o : vertex_orbits(g))
        vorbs.push_back({{"representative", o.representative()}, {"size", o.size()}, {"members", o.members}});
    out["vertex_orbits"] = vorbs;
    auto canon = mf.map.canonical_face_set();
    json forbs = json::array();
    for (const Orbit& o : face_orbits(g, mf.map))
        forbs.push_back({{"representative", canon[o.representative()]}, {"size", o.size()}});
    out["face_orbits"] = forbs;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_orientable(const std::string& path) {
    MapFile mf = load_map(path);
    bool o = orientable(mf.map);
    std::cout << (o ? "orientable" : "non-orientable") << "\n";
    return o ? 0 : 1;
}

int cmd_verify_catalog(const std::string& dir) {
    CatalogReport rep = verify_catalog(dir);
    std::cout << rep.to_text();
    return rep.all_pass ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const std::string& which) {
    MapFile mf = load_map(path);
    if (which == "edge") {
        std::cout << to_dot(edge_graph(mf.map), "edge");
        return 0;
    }
    if (which.size() > 1 && which[0] == 'g') {
        int i = std::stoi(which.substr(1));
        std::cout << to_dot(common_neighbor_graph(mf.map, i), which);
        return 0;
    }
    std::cerr << "unknown graph '" << which << "' (use edge or g<i>)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census and classification of semi-equivelar maps on closed surfaces"};
    app.require_subcommand(1);

    std::string type_text, out_path, file_a, file_b, catalog_dir = "data/catalog", graph = "edge";
    int vertices = 0, max_vertices = 0, jobs = 1;
    long long chi_val = 0;
    long long budget_val = 0;
    bool all_rotations = false, want_charpoly = false, want_fingerprint = false;
    int gi_val = -1;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate all maps of a type up to isomorphism");
    enumerate_cmd->add_option("--type", type_text, "face sequence, e.g. 3,4,4,4,4 or 3^4,4^2")->required();
    enumerate_cmd->add_option("--vertices", vertices, "vertex count")->required();
    auto* chi_opt = enumerate_cmd->add_option("--chi", chi_val, "require this Euler characteristic");
    auto* budget_opt = enumerate_cmd->add_option("--budget", budget_val, "node budget");
    enumerate_cmd->add_option("--jobs", jobs, "worker threads");
    enumerate_cmd->add_option("--out", out_path, "also write the JSON result here");
    enumerate_cmd->add_flag("--all-rotations", all_rotations, "seed every rotation of the type");

    auto* sweep_cmd = app.add_subcommand("sweep", "census over all admissible types per vertex count");
    sweep_cmd->add_option("--max-vertices", max_vertices, "largest vertex count")->required();
    sweep_cmd->add_option("--chi", chi_val, "Euler characteristic")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker threads");

    auto* inv_cmd = app.add_subcommand("invariants", "invariants of a map file");
    inv_cmd->add_option("file", file_a, "map JSON file")->required();
    auto* gi_opt = inv_cmd->add_option("--gi", gi_val, "common-neighbor graph index");
    inv_cmd->add_flag("--charpoly", want_charpoly, "characteristic polynomial of the edge graph");
    inv_cmd->add_flag("--fingerprint", want_fingerprint, "full invariant fingerprint");

    auto* iso_cmd = app.add_subcommand("isomorphic", "test two map files for isomorphism");
    iso_cmd->add_option("a", file_a, "first map")->required();
    iso_cmd->add_option("b", file_b, "second map")->required();

    auto* aut_cmd = app.add_subcommand("aut", "automorphism group, orbits");
    aut_cmd->add_option("file", file_a, "map JSON file")->required();

    auto* or_cmd = app.add_subcommand("orientable", "orientability of a map file");
    or_cmd->add_option("file", file_a, "map JSON file")->required();

    auto* vc_cmd = app.add_subcommand("verify-catalog", "recompute and check every catalog claim");
    vc_cmd->add_option("--catalog-dir", catalog_dir, "catalog directory");

    auto* dot_cmd = app.add_subcommand("export-dot", "write a graph in DOT format");
    dot_cmd->add_option("file", file_a, "map JSON file")->required();
    dot_cmd->add_option("--graph", graph, "edge or g<i>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (enumerate_cmd->parsed())
            return cmd_enumerate(type_text, vertices,
                                 chi_opt->count() ? std::optional<long long>(chi_val) : std::nullopt,
                                 budget_opt->count() ? std::optional<long long>(budget_val) : std::nullopt,
                                 jobs, out_path, all_rotations);
        if (sweep_cmd->parsed()) return cmd_sweep(max_vertices, chi_val, jobs);
        if (inv_cmd->parsed())
            return cmd_invariants(file_a, gi_opt->count() ? std::optional<int>(gi_val) : std::nullopt,
                                  want_charpoly, want_fingerprint);
        if (iso_cmd->parsed()) return cmd_isomorphic(file_a, file_b);
        if (aut_cmd->parsed()) return cmd_aut(file_a);
        if (or_cmd->parsed()) return cmd_orientable(file_a);
        if (vc_cmd->parsed()) return cmd_verify_catalog(catalog_dir);
        if (dot_cmd->parsed()) return cmd_export_dot(file_a, graph);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
