#include "semc/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semc {

namespace {

// Flattened face-walk topology. A dart is an oriented edge within a face:
// dart id = 2*(offset[face]+pos) + dirbit, dirbit 1 meaning forward in
// stored order. next() advances along the face, twin() crosses to the other
// face over the same edge, reversing direction of traversal.
struct Topology {
    const PolyhedralMap& map;
    std::vector<int> offset;          // face -> base position index
    int positions = 0;                // sum of face lengths
    std::vector<int> twin_of;         // dart -> dart
    std::vector<int> tail_of;         // dart -> tail vertex
    std::vector<int> head_of;         // dart -> head vertex
    std::vector<int> face_of;         // dart -> face
    std::vector<int> next_of;         // dart -> dart

    explicit Topology(const PolyhedralMap& m) : map(m) {
        const int nf = static_cast<int>(m.faces.size());
        offset.resize(nf);
        for (int fi = 0; fi < nf; ++fi) {
            offset[fi] = positions;
            positions += static_cast<int>(m.faces[fi].size());
        }
        const int nd = 2 * positions;
        twin_of.assign(nd, -1);
        tail_of.resize(nd);
        head_of.resize(nd);
        face_of.resize(nd);
        next_of.resize(nd);
        // (u,v) ordered pair -> dart traversing u->v
        std::map<std::pair<int, int>, std::vector<int>> by_edge;
        for (int fi = 0; fi < nf; ++fi) {
            const Face& f = m.faces[fi];
            const int len = static_cast<int>(f.size());
            for (int i = 0; i < len; ++i) {
                for (int dirbit = 0; dirbit < 2; ++dirbit) {
                    const int d = dart(fi, i, dirbit);
                    const int u = f[i];
                    const int v = dirbit ? f[(i + 1) % len] : f[(i + len - 1) % len];
                    tail_of[d] = u;
                    head_of[d] = v;
                    face_of[d] = fi;
                    next_of[d] = dirbit ? dart(fi, (i + 1) % len, 1)
                                        : dart(fi, (i + len - 1) % len, 0);
                    int a = u, b = v;
                    if (a > b) std::swap(a, b);
                    by_edge[{a, b}].push_back(d);
                }
            }
        }
        for (auto& [e, darts] : by_edge) {
            if (darts.size() != 4)
                throw std::runtime_error("canonical form requires every edge on exactly two faces");
            // pair each dart with the opposite-direction dart of the other face
            for (int d1 : darts)
                for (int d2 : darts)
                    if (face_of[d1] != face_of[d2] && tail_of[d1] == head_of[d2] &&
                        head_of[d1] == tail_of[d2])
                        twin_of[d1] = d2;
        }
    }

    int dart(int fi, int pos, int dirbit) const { return 2 * (offset[fi] + pos) + dirbit; }
    int dart_count() const { return 2 * positions; }

    // Deterministic BFS labeling seeded at a dart; returns old->new labels.
    std::vector<int> labeling_from(int start) const {
        std::vector<int> label(map.n_vertices, -1);
        std::vector<char> dart_seen(dart_count(), 0);
        std::vector<int> queue;
        queue.reserve(dart_count());
        queue.push_back(start);
        dart_seen[start] = 1;
        int fresh = 0;
        size_t qi = 0;
        while (qi < queue.size()) {
            int d = queue[qi++];
            if (label[tail_of[d]] < 0) label[tail_of[d]] = fresh++;
            if (label[head_of[d]] < 0) label[head_of[d]] = fresh++;
            int nx = next_of[d];
            if (!dart_seen[nx]) { dart_seen[nx] = 1; queue.push_back(nx); }
            int tw = twin_of[d];
            if (!dart_seen[tw]) { dart_seen[tw] = 1; queue.push_back(tw); }
        }
        if (fresh != map.n_vertices)
            throw std::runtime_error("canonical form requires a connected map");
        return label;
    }
};

std::vector<Face> encode_with(const PolyhedralMap& map, const std::vector<int>& label) {
    std::vector<Face> out;
    out.reserve(map.faces.size());
    for (const Face& f : map.faces) {
        Face g(f.size());
        for (size_t i = 0; i < f.size(); ++i) g[i] = label[f[i]];
        out.push_back(PolyhedralMap::canonical_face(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CanonicalForm canonical_impl(const PolyhedralMap& map, bool parallel) {
    if (map.faces.empty()) throw std::runtime_error("canonical form of an empty map");
    Topology topo(map);
    const int nd = topo.dart_count();

    std::vector<Face> best;
    std::vector<int> best_label;
#ifdef _OPENMP
    if (parallel) {
        #pragma omp parallel
        {
            std::vector<Face> my_best;
            std::vector<int> my_label;
            #pragma omp for schedule(dynamic, 8)
            for (int d = 0; d < nd; ++d) {
                auto label = topo.labeling_from(d);
                auto enc = encode_with(map, label);
                if (my_best.empty() || enc < my_best) {
                    my_best = std::move(enc);
                    my_label = std::move(label);
                }
            }
            #pragma omp critical
            {
                if (best.empty() || (!my_best.empty() && my_best < best)) {
                    best = std::move(my_best);
                    best_label = std::move(my_label);
                }
            }
        }
    } else
#endif
    {
        (void)parallel;
        for (int d = 0; d < nd; ++d) {
            auto label = topo.labeling_from(d);
            auto enc = encode_with(map, label);
            if (best.empty() || enc < best) {
                best = std::move(enc);
                best_label = std::move(label);
            }
        }
    }
    CanonicalForm cf;
    cf.n_vertices = map.n_vertices;
    cf.faces = std::move(best);
    cf.relabeling = Permutation(best_label);
    return cf;
}

}  // namespace

std::vector<int> CanonicalForm::key() const {
    std::vector<int> k;
    k.push_back(n_vertices);
    k.push_back(static_cast<int>(faces.size()));
    for (const Face& f : faces) {
        k.push_back(static_cast<int>(f.size()));
        k.insert(k.end(), f.begin(), f.end());
    }
    return k;
}

CanonicalForm canonical_form(const PolyhedralMap& map) { return canonical_impl(map, false); }

CanonicalForm canonical_form_parallel(const PolyhedralMap& map) { return canonical_impl(map, true); }

std::vector<Permutation> map_automorphisms(const PolyhedralMap& map) {
    Topology topo(map);
    const int nd = topo.dart_count();
    std::vector<Face> best;
    std::vector<std::vector<int>> best_labels;
    for (int d = 0; d < nd; ++d) {
        auto label = topo.labeling_from(d);
        auto enc = encode_with(map, label);
        if (best.empty() || enc < best) {
            best = enc;
            best_labels.clear();
        }
        if (enc == best) best_labels.push_back(std::move(label));
    }
    std::vector<Permutation> autos;
    autos.reserve(best_labels.size());
    const Permutation first(best_labels.front());
    for (const auto& lb : best_labels) autos.push_back(Permutation(lb).inverse() * first);
    std::sort(autos.begin(), autos.end());
    autos.erase(std::unique(autos.begin(), autos.end()), autos.end());
    return autos;
}

std::optional<Permutation> are_isomorphic(const PolyhedralMap& m1, const PolyhedralMap& m2) {
    if (m1.n_vertices != m2.n_vertices || m1.faces.size() != m2.faces.size()) return std::nullopt;
    // cheap invariant screens before the full canonical forms
    auto sizes = [](const PolyhedralMap& m) {
        std::vector<int> s;
        s.reserve(m.faces.size());
        for (const Face& f : m.faces) s.push_back(static_cast<int>(f.size()));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(m1) != sizes(m2)) return std::nullopt;
    if (euler_characteristic(m1) != euler_characteristic(m2)) return std::nullopt;
    CanonicalForm c1 = canonical_form(m1);
    CanonicalForm c2 = canonical_form(m2);
    if (!(c1 == c2)) return std::nullopt;
    // relabel(m1, L2^-1 * L1) == m2
    return c2.relabeling.inverse() * c1.relabeling;
}

bool check_witness(const PolyhedralMap& m1, const PolyhedralMap& m2, const Permutation& pi) {
    if (m1.n_vertices != m2.n_vertices || pi.degree() != m1.n_vertices) return false;
    return relabel(m1, pi).canonical_face_set() == m2.canonical_face_set();
}

}  // namespace semc
