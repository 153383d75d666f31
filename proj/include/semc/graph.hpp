#pragma once

#include <utility>
#include <vector>

#include "semc/map.hpp"

namespace semc {

// Undirected simple graph on {0..n-1}; edges kept sorted and unique.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    void add_edge(int u, int v);
    void finish();  // sort + dedup; rejects loops/out-of-range
    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<char>> adjacency() const;

    bool operator==(const SimpleGraph& o) const = default;
};

// 1-skeleton of the map.
SimpleGraph edge_graph(const PolyhedralMap& map);

// N(v) = vertices sharing a face with v (v itself included). The edge {u,v}
// is present iff u and v have exactly i common face-neighbors besides u and v
// themselves. This convention reproduces the reference G_i listings for the
// 12-vertex catalog; the literal one (counting u,v in the intersection) does not.
SimpleGraph common_neighbor_graph(const PolyhedralMap& map, int i);

}  // namespace semc
