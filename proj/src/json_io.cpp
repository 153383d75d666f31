#include "semc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semc {

using nlohmann::json;

MapFile map_from_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    MapFile mf;
    try {
        if (!j.is_object()) throw std::runtime_error("top level must be an object");
        mf.map.n_vertices = j.at("vertices").get<int>();
        for (const auto& jf : j.at("faces")) {
            Face f;
            for (const auto& v : jf) f.push_back(v.get<int>());
            mf.map.faces.push_back(std::move(f));
        }
        if (j.contains("name")) mf.name = j["name"].get<std::string>();
        if (j.contains("type")) mf.type = j["type"].get<std::string>();
    } catch (const json::exception& e) {
        throw std::runtime_error(origin + ": field error: " + e.what());
    }
    ValidationReport rep = validate(mf.map);
    if (!rep.ok) {
        std::string msg = origin + ": map fails validation:";
        for (const std::string& v : rep.violations) msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
    return mf;
}

MapFile load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return map_from_json(ss.str(), path);
}

std::string map_to_json(const MapFile& mf) {
    json j;
    j["faces"] = mf.map.faces;
    if (!mf.name.empty()) j["name"] = mf.name;
    if (!mf.type.empty()) j["type"] = mf.type;
    j["vertices"] = mf.map.n_vertices;
    return j.dump(2) + "\n";
}

void save_map(const MapFile& mf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << map_to_json(mf);
}

std::string to_dot(const SimpleGraph& g, const std::string& name) {
    std::string out = "graph \"" + name + "\" {\n";
    for (int v = 0; v < g.n; ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto& [u, v] : g.edges)
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace semc
