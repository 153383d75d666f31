#include "semc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace semc {

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
}

void SimpleGraph::finish() {
    for (auto& [u, v] : edges)
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<char>> SimpleGraph::adjacency() const {
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (auto& [u, v] : edges) a[u][v] = a[v][u] = 1;
    return a;
}

SimpleGraph edge_graph(const PolyhedralMap& map) {
    SimpleGraph g;
    g.n = map.n_vertices;
    for (const Face& f : map.faces) {
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) g.add_edge(f[i], f[(i + 1) % len]);
    }
    g.finish();
    return g;
}

SimpleGraph common_neighbor_graph(const PolyhedralMap& map, int i) {
    const int n = map.n_vertices;
    std::vector<std::vector<char>> in_n(n, std::vector<char>(n, 0));
    for (const Face& f : map.faces)
        for (int a : f)
            for (int b : f) in_n[a][b] = 1;  // includes a == b
    SimpleGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (w != u && w != v && in_n[u][w] && in_n[v][w]) ++common;
            if (common == i) g.add_edge(u, v);
        }
    }
    g.finish();
    return g;
}

}  // namespace semc
