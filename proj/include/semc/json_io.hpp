#pragma once

#include <string>

#include "semc/graph.hpp"
#include "semc/map.hpp"

namespace semc {

struct MapFile {
    PolyhedralMap map;
    std::string name;  // optional metadata, preserved on round-trip
    std::string type;
};

// Throws std::runtime_error with line/field context on parse errors, and
// with the full violation list when the map fails validation.
MapFile load_map(const std::string& path);

void save_map(const MapFile& mf, const std::string& path);
std::string map_to_json(const MapFile& mf);
MapFile map_from_json(const std::string& text, const std::string& origin = "<string>");

// Undirected DOT text; the graph name records which graph this is
// (e.g. "edge", "g7").
std::string to_dot(const SimpleGraph& g, const std::string& name);

}  // namespace semc
