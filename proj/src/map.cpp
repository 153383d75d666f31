#include "semc/map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace semc {

namespace {

std::map<std::pair<int, int>, std::vector<int>> edge_face_table(const PolyhedralMap& map) {
    std::map<std::pair<int, int>, std::vector<int>> ef;
    for (int fi = 0; fi < static_cast<int>(map.faces.size()); ++fi) {
        const Face& f = map.faces[fi];
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int u = f[i], v = f[(i + 1) % len];
            if (u > v) std::swap(u, v);
            ef[{u, v}].push_back(fi);
        }
    }
    return ef;
}

}  // namespace

long long PolyhedralMap::edge_count() const {
    std::set<std::pair<int, int>> edges;
    for (const Face& f : faces) {
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int u = f[i], v = f[(i + 1) % len];
            if (u > v) std::swap(u, v);
            edges.insert({u, v});
        }
    }
    return static_cast<long long>(edges.size());
}

Face PolyhedralMap::canonical_face(const Face& f) {
    Face best = f;
    Face cur = f;
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t r = 0; r < f.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        std::reverse(cur.begin(), cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<Face> PolyhedralMap::canonical_face_set() const {
    std::vector<Face> out;
    out.reserve(faces.size());
    for (const Face& f : faces) out.push_back(canonical_face(f));
    std::sort(out.begin(), out.end());
    return out;
}

bool PolyhedralMap::same_faces(const PolyhedralMap& other) const {
    return n_vertices == other.n_vertices && canonical_face_set() == other.canonical_face_set();
}

PolyhedralMap relabel(const PolyhedralMap& m, const Permutation& p) {
    PolyhedralMap out;
    out.n_vertices = m.n_vertices;
    out.faces.reserve(m.faces.size());
    for (const Face& f : m.faces) {
        Face g(f.size());
        for (size_t i = 0; i < f.size(); ++i) g[i] = p(f[i]);
        out.faces.push_back(std::move(g));
    }
    return out;
}

ValidationReport validate(const PolyhedralMap& map) {
    ValidationReport rep;
    auto bad = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    if (map.n_vertices <= 0 || map.faces.empty()) {
        bad("no faces");
        return rep;
    }
    for (int fi = 0; fi < static_cast<int>(map.faces.size()); ++fi) {
        const Face& f = map.faces[fi];
        if (f.size() < 3) {
            bad("face " + std::to_string(fi) + " has fewer than 3 vertices");
            continue;
        }
        std::set<int> distinct(f.begin(), f.end());
        if (distinct.size() != f.size())
            bad("face " + std::to_string(fi) + " repeats a vertex");
        for (int v : f)
            if (v < 0 || v >= map.n_vertices)
                bad("face " + std::to_string(fi) + " uses out-of-range vertex " + std::to_string(v));
    }
    if (!rep.ok) return rep;

    auto ef = edge_face_table(map);
    for (const auto& [e, fl] : ef) {
        if (fl.size() != 2)
            bad("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} lies on " +
                std::to_string(fl.size()) + (fl.size() == 1 ? " face" : " faces"));
    }

    // pairwise: intersection must be empty, one vertex, or one shared edge
    const int nf = static_cast<int>(map.faces.size());
    std::vector<std::set<int>> vsets(nf);
    for (int fi = 0; fi < nf; ++fi) vsets[fi] = {map.faces[fi].begin(), map.faces[fi].end()};
    auto face_has_edge = [&](int fi, int u, int v) {
        const Face& f = map.faces[fi];
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int a = f[i], b = f[(i + 1) % len];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    };
    for (int fi = 0; fi < nf; ++fi) {
        for (int fj = fi + 1; fj < nf; ++fj) {
            std::vector<int> common;
            std::set_intersection(vsets[fi].begin(), vsets[fi].end(), vsets[fj].begin(),
                                  vsets[fj].end(), std::back_inserter(common));
            if (common.size() > 2) {
                bad("faces " + std::to_string(fi) + " and " + std::to_string(fj) +
                    " share more than two vertices");
            } else if (common.size() == 2) {
                if (!face_has_edge(fi, common[0], common[1]) ||
                    !face_has_edge(fj, common[0], common[1]))
                    bad("faces " + std::to_string(fi) + " and " + std::to_string(fj) +
                        " share two vertices that are not a common edge");
            }
        }
    }

    // every vertex link closes into a single cycle
    FaceIncidence inc(map);
    for (int v = 0; v < map.n_vertices; ++v) {
        if (inc.at[v].empty()) {
            bad("vertex " + std::to_string(v) + " lies on no face");
            continue;
        }
        try {
            (void)vertex_link(map, v);
        } catch (const std::exception& e) {
            bad(e.what());
        }
    }
    if (!rep.ok) return rep;

    // connectivity over edges
    std::vector<char> seen(map.n_vertices, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::vector<std::vector<int>> adj(map.n_vertices);
    for (const auto& [e, fl] : ef) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    if (std::count(seen.begin(), seen.end(), 1) != map.n_vertices) bad("map is disconnected");
    return rep;
}

VertexLink vertex_link(const PolyhedralMap& map, int v) {
    if (v < 0 || v >= map.n_vertices) throw std::runtime_error("vertex out of range");
    // each incident face contributes an arc (prev, next) around v
    struct Arc {
        int a, b, gon;
        bool used = false;
    };
    std::vector<Arc> arcs;
    for (const Face& f : map.faces) {
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            if (f[i] == v) {
                arcs.push_back({f[(i + len - 1) % len], f[(i + 1) % len], len, false});
                break;
            }
        }
    }
    if (arcs.empty()) throw std::runtime_error("link of vertex " + std::to_string(v) + ": no incident faces");
    VertexLink link;
    link.center = v;
    arcs[0].used = true;
    std::vector<std::pair<int, int>> walk;  // (neighbor, gon of face that follows)
    walk.push_back({arcs[0].a, arcs[0].gon});
    int cur = arcs[0].b;
    for (size_t step = 1; step < arcs.size(); ++step) {
        bool found = false;
        for (Arc& arc : arcs) {
            if (arc.used) continue;
            if (arc.a == cur || arc.b == cur) {
                int nxt = (arc.a == cur) ? arc.b : arc.a;
                arc.used = true;
                walk.push_back({cur, arc.gon});
                cur = nxt;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error("link of vertex " + std::to_string(v) +
                                     " does not close into a single cycle");
    }
    if (cur != walk.front().first)
        throw std::runtime_error("link of vertex " + std::to_string(v) +
                                 " does not close into a single cycle");
    for (auto& [nb, gon] : walk) link.cycle.push_back({nb, gon});
    return link;
}

std::vector<int> VertexLink::gon_sequence() const {
    std::vector<int> g;
    g.reserve(cycle.size());
    for (const Entry& e : cycle) g.push_back(e.gon);
    return g;
}

FaceSequence face_sequence_at(const PolyhedralMap& map, int v) {
    return FaceSequence::canonicalize(vertex_link(map, v).gon_sequence());
}

bool is_sem(const PolyhedralMap& map, const FaceSequence& t) {
    for (int v = 0; v < map.n_vertices; ++v)
        if (!(face_sequence_at(map, v) == t)) return false;
    return true;
}

long long euler_characteristic(const PolyhedralMap& map) {
    return map.n_vertices - map.edge_count() + static_cast<long long>(map.faces.size());
}

FaceIncidence::FaceIncidence(const PolyhedralMap& map) : at(map.n_vertices) {
    for (int fi = 0; fi < static_cast<int>(map.faces.size()); ++fi) {
        const Face& f = map.faces[fi];
        for (int i = 0; i < static_cast<int>(f.size()); ++i) at[f[i]].push_back({fi, i});
    }
}

PolyhedralMap tetrahedron() {
    return PolyhedralMap{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

}  // namespace semc
