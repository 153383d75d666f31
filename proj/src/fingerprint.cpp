#include "semc/fingerprint.hpp"

#include <algorithm>

#include "semc/graph.hpp"
#include "semc/orientation.hpp"

namespace semc {

Fingerprint invariant_fingerprint(const PolyhedralMap& map) {
    Fingerprint fp;
    fp.euler = euler_characteristic(map);
    fp.orientable_flag = orientable(map);
    fp.gi_degrees.reserve(map.n_vertices);
    for (int i = 0; i < map.n_vertices; ++i) {
        auto deg = common_neighbor_graph(map, i).degrees();
        std::sort(deg.begin(), deg.end());
        fp.gi_degrees.push_back(std::move(deg));
    }
    fp.edge_char_poly = char_poly(edge_graph(map));
    return fp;
}

std::string Fingerprint::to_json() const {
    std::string out = "[";
    out += std::to_string(euler);
    out += ",";
    out += orientable_flag ? "true" : "false";
    out += ",[";
    for (size_t i = 0; i < gi_degrees.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < gi_degrees[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(gi_degrees[i][j]);
        }
        out += "]";
    }
    out += "],[";
    const auto& cs = edge_char_poly.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += "\"" + cs[i].get_str() + "\"";
    }
    out += "]]";
    return out;
}

}  // namespace semc
