#include "semc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semc/isomorphism.hpp"

namespace semc {

namespace {

// Precomputed factor table of the cyclic type word: every contiguous subword
// (both directions, all rotations) up to full length.
struct TypeWord {
    std::vector<int> word;  // canonical entries
    int d = 0;
    std::set<std::vector<int>> factors;
    std::vector<int> distinct_gons;

    explicit TypeWord(const FaceSequence& t) : word(t.entries()), d(t.degree()) {
        std::vector<int> w2 = word;
        for (int pass = 0; pass < 2; ++pass) {
            for (int s = 0; s < d; ++s) {
                for (int len = 1; len <= d; ++len) {
                    std::vector<int> f(static_cast<size_t>(len));
                    for (int k = 0; k < len; ++k) f[k] = w2[(s + k) % d];
                    factors.insert(std::move(f));
                }
            }
            std::reverse(w2.begin(), w2.end());
        }
        std::set<int> gons(word.begin(), word.end());
        distinct_gons.assign(gons.begin(), gons.end());
    }

    bool embeds(const std::vector<int>& gons) const {
        if (static_cast<int>(gons.size()) > d) return false;
        return factors.count(gons) > 0;
    }

    bool closes(const std::vector<int>& gons) const {
        if (static_cast<int>(gons.size()) != d) return false;
        return FaceSequence::canonicalize(gons).entries() == word;
    }
};

// One arc of a partial vertex link: a path of neighbors with the face sizes
// between consecutive ones.
struct Arc {
    std::vector<int> nbrs;  // size gons.size()+1
    std::vector<int> gons;
};

struct VertexState {
    std::vector<Arc> arcs;
    bool closed = false;
    int placed = 0;  // faces placed around this vertex
};

struct SearchState {
    int n = 0;
    std::vector<VertexState> vs;
    std::vector<Face> faces;
    std::vector<uint8_t> edge_use;  // n*n, symmetric
    std::vector<char> used;
    int used_count = 0;

    SearchState(int n_) : n(n_), vs(n_), edge_use(static_cast<size_t>(n_) * n_, 0), used(n_, 0) {}

    uint8_t& use(int a, int b) { return edge_use[static_cast<size_t>(a) * n + b]; }
    uint8_t use(int a, int b) const { return edge_use[static_cast<size_t>(a) * n + b]; }

    void touch(int v) {
        if (!used[v]) {
            used[v] = 1;
            ++used_count;
        }
    }

    // Fuses the corner (a, x, b) with face size g into x's link arcs.
    // Preconditions on edge uses hold; returns false on a type violation.
    bool add_corner(int x, int a, int b, int g, const TypeWord& tw) {
        VertexState& st = vs[x];
        if (st.closed) return false;
        const bool a_known = use(x, a) > 0;
        const bool b_known = use(x, b) > 0;
        auto find_end = [&](int nb, int skip_arc) -> std::pair<int, bool> {
            for (int ai = 0; ai < static_cast<int>(st.arcs.size()); ++ai) {
                if (ai == skip_arc) continue;
                if (st.arcs[ai].nbrs.front() == nb) return {ai, false};
                if (st.arcs[ai].nbrs.back() == nb) return {ai, true};
            }
            return {-1, false};
        };
        if (!a_known && !b_known) {
            st.arcs.push_back({{a, b}, {g}});
        } else if (a_known != b_known) {
            int nb = a_known ? a : b;
            int other = a_known ? b : a;
            auto [ai, at_back] = find_end(nb, -1);
            if (ai < 0) return false;  // neighbor is interior: edge already doubled
            Arc& arc = st.arcs[ai];
            if (at_back) {
                arc.nbrs.push_back(other);
                arc.gons.push_back(g);
            } else {
                arc.nbrs.insert(arc.nbrs.begin(), other);
                arc.gons.insert(arc.gons.begin(), g);
            }
            if (!tw.embeds(arc.gons)) return false;
        } else {
            auto [ai, a_back] = find_end(a, -1);
            if (ai < 0) return false;
            auto [bi, b_back] = find_end(b, -1);
            if (bi < 0) return false;
            if (ai == bi) {
                // both ends of one arc: this corner closes the link
                Arc& arc = st.arcs[ai];
                if (st.arcs.size() != 1) return false;
                if (arc.nbrs.front() == arc.nbrs.back()) return false;
                bool ends_ok = (arc.nbrs.front() == a && arc.nbrs.back() == b) ||
                               (arc.nbrs.front() == b && arc.nbrs.back() == a);
                if (!ends_ok) return false;
                std::vector<int> cyc = arc.gons;
                cyc.push_back(g);
                if (!tw.closes(cyc)) return false;
                arc.gons = std::move(cyc);
                st.closed = true;
            } else {
                // join two arcs: ... a] --g-- [b ...
                auto [ai2, a_back2] = find_end(a, -1);
                Arc merged;
                Arc& A = st.arcs[ai2];
                if (!a_back2) std::reverse(A.nbrs.begin(), A.nbrs.end()), std::reverse(A.gons.begin(), A.gons.end());
                auto [bi2, b_back2] = find_end(b, ai2);
                if (bi2 < 0) return false;
                Arc& B = st.arcs[bi2];
                if (b_back2) std::reverse(B.nbrs.begin(), B.nbrs.end()), std::reverse(B.gons.begin(), B.gons.end());
                merged.nbrs = A.nbrs;
                merged.gons = A.gons;
                merged.gons.push_back(g);
                merged.nbrs.insert(merged.nbrs.end(), B.nbrs.begin(), B.nbrs.end());
                merged.gons.insert(merged.gons.end(), B.gons.begin(), B.gons.end());
                int lo = std::min(ai2, bi2), hi = std::max(ai2, bi2);
                st.arcs.erase(st.arcs.begin() + hi);
                st.arcs.erase(st.arcs.begin() + lo);
                st.arcs.push_back(std::move(merged));
                if (!tw.embeds(st.arcs.back().gons)) return false;
            }
        }
        ++st.placed;
        if (!st.closed) {
            // capacity: every remaining gap between arcs costs at least one face
            int total = 0;
            for (const Arc& arc : st.arcs) total += static_cast<int>(arc.gons.size());
            int narcs = static_cast<int>(st.arcs.size());
            if (narcs == 1) {
                if (total > tw.d - 1) return false;
            } else {
                if (total + narcs > tw.d) return false;
            }
        }
        return true;
    }

    // Attempts to add the face; on any violation the state is left garbage
    // (caller works on a copy and discards it).
    bool add_face(const Face& f, const TypeWord& tw) {
        const int len = static_cast<int>(f.size());
        // simple face over in-range labels
        for (int v : f)
            if (v < 0 || v >= n) return false;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                if (f[i] == f[j]) return false;
        // edge multiplicities
        for (int i = 0; i < len; ++i) {
            int a = f[i], b = f[(i + 1) % len];
            if (use(a, b) >= 2) return false;
        }
        // a new face may meet an old one in at most one shared edge
        for (const Face& g : faces) {
            int common = 0;
            int cu = -1, cv = -1;
            for (int x : f)
                for (int y : g)
                    if (x == y) {
                        ++common;
                        if (cu < 0) cu = x;
                        else cv = x;
                    }
            if (common > 2) return false;
            if (common == 2) {
                auto consecutive = [](const Face& h, int p, int q) {
                    const int m = static_cast<int>(h.size());
                    for (int i = 0; i < m; ++i) {
                        int a = h[i], b = h[(i + 1) % m];
                        if ((a == p && b == q) || (a == q && b == p)) return true;
                    }
                    return false;
                };
                if (!consecutive(f, cu, cv) || !consecutive(g, cu, cv)) return false;
            }
        }
        // fuse corners vertex by vertex (edge uses still the old ones while
        // fusing: add_corner reads them to classify the merge)
        for (int i = 0; i < len; ++i) {
            int x = f[i];
            int a = f[(i + len - 1) % len];
            int b = f[(i + 1) % len];
            if (!add_corner(x, a, b, static_cast<int>(len), tw)) return false;
        }
        for (int i = 0; i < len; ++i) {
            int a = f[i], b = f[(i + 1) % len];
            ++use(a, b);
            ++use(b, a);
            touch(a);
        }
        faces.push_back(f);
        return true;
    }

    // Most constrained open slot: an edge on exactly one face, keyed by the
    // fewest faces left to place at its vertex. Returns {-1,-1} if none.
    std::pair<int, int> pick_slot(const TypeWord& tw) const {
        int best_v = -1, best_u = -1, best_rem = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (!used[v] || vs[v].closed) continue;
            int rem = tw.d - vs[v].placed;
            if (rem >= best_rem) continue;
            for (const Arc& arc : vs[v].arcs) {
                for (int nb : {arc.nbrs.front(), arc.nbrs.back()}) {
                    if (use(v, nb) == 1) {
                        if (rem < best_rem || (rem == best_rem && (v < best_v || (v == best_v && nb < best_u)))) {
                            best_rem = rem;
                            best_v = v;
                            best_u = nb;
                        }
                    }
                }
            }
        }
        return {best_v, best_u};
    }

    bool all_closed() const {
        for (int v = 0; v < n; ++v) {
            if (used[v] && !vs[v].closed) return false;
        }
        return true;
    }
};

// Enumerates the candidate faces for the slot (v over edge {v,u}) and
// recurses; results deduplicated by canonical form at harvest.
struct Searcher {
    const TypeWord& tw;
    int n;
    std::optional<long long> budget;
    std::atomic<long long>& nodes;
    std::atomic<bool>& out_of_budget;
    std::map<std::vector<int>, PolyhedralMap>& found;  // canonical key -> map

    void harvest(const SearchState& st) {
        if (st.used_count != n) return;
        PolyhedralMap m{n, st.faces};
        CanonicalForm cf = canonical_form(m);
        PolyhedralMap canon{n, cf.faces};
        found.emplace(cf.key(), std::move(canon));
    }

    // all candidate faces for slot (v,u): the face contains edge {v,u}
    std::vector<Face> candidates(const SearchState& st, int v, int u) const {
        std::vector<Face> out;
        for (int g : tw.distinct_gons) {
            // fill x_1..x_{g-2}: face = [v, u, x1, ..., x_{g-2}]
            Face f = {v, u};
            rec_fill(st, f, g, out);
        }
        return out;
    }

    void rec_fill(const SearchState& st, Face& f, int g, std::vector<Face>& out) const {
        if (static_cast<int>(f.size()) == g) {
            // final edge back to v
            if (st.use(f.back(), f.front()) >= 2) return;
            out.push_back(f);
            return;
        }
        const int tail = f.back();
        // fresh labels not yet in the state, accounting for ones this face
        // already introduced
        int fresh_in_face = 0;
        int next_fresh = st.n;
        for (int w = 0; w < st.n; ++w) {
            if (st.used[w]) continue;
            if (std::find(f.begin(), f.end(), w) != f.end()) { ++fresh_in_face; continue; }
            next_fresh = std::min(next_fresh, w);
        }
        // next vertex: any used vertex with a free edge from tail, or the
        // smallest untouched label (fresh labels are interchangeable)
        for (int w = 0; w < st.n; ++w) {
            bool fresh = !st.used[w];
            if (std::find(f.begin(), f.end(), w) != f.end()) continue;
            if (fresh && w != next_fresh) continue;
            if (fresh && st.used_count + fresh_in_face >= st.n) continue;
            if (!fresh && st.use(tail, w) >= 2) continue;
            f.push_back(w);
            rec_fill(st, f, g, out);
            f.pop_back();
        }
    }

    void dfs(const SearchState& st) {
        if (out_of_budget.load(std::memory_order_relaxed)) return;
        if (budget && nodes.fetch_add(1, std::memory_order_relaxed) >= *budget) {
            out_of_budget.store(true, std::memory_order_relaxed);
            return;
        }
        if (!budget) nodes.fetch_add(1, std::memory_order_relaxed);
        auto [v, u] = st.pick_slot(tw);
        if (v < 0) {
            if (st.all_closed()) harvest(st);
            return;
        }
        for (const Face& f : candidates(st, v, u)) {
            SearchState child = st;
            if (child.add_face(f, tw)) dfs(child);
        }
    }
};

// Seed lk(0) with the given rotation of the type, smallest labels ascending.
// Returns empty when the seed alone exceeds the vertex budget.
std::optional<SearchState> seed_state(const std::vector<int>& gon_word, int n, const TypeWord& tw) {
    const int d = static_cast<int>(gon_word.size());
    int needed = 1;
    for (int g : gon_word) needed += g - 2;
    if (needed > n) return std::nullopt;
    SearchState st(n);
    int fresh = 1;
    std::vector<int> link_nbrs(d + 1);
    link_nbrs[0] = fresh++;
    std::vector<Face> seeds;
    for (int i = 0; i < d; ++i) {
        Face f = {0, link_nbrs[i]};
        for (int k = 0; k < gon_word[i] - 3; ++k) f.push_back(fresh++);
        link_nbrs[i + 1] = (i == d - 1) ? link_nbrs[0] : fresh++;
        f.push_back(link_nbrs[i + 1]);
        seeds.push_back(std::move(f));
    }
    for (const Face& f : seeds)
        if (!st.add_face(f, tw)) return std::nullopt;
    if (!st.vs[0].closed) return std::nullopt;
    return st;
}

std::vector<std::vector<int>> seed_words(const FaceSequence& t, EnumOptions::Seed mode) {
    const std::vector<int>& w = t.entries();
    const int d = static_cast<int>(w.size());
    if (mode == EnumOptions::Seed::CanonicalRotation) return {w};
    std::set<std::vector<int>> all;
    std::vector<int> cur = w;
    for (int pass = 0; pass < 2; ++pass) {
        for (int s = 0; s < d; ++s) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            all.insert(cur);
        }
        std::reverse(cur.begin(), cur.end());
    }
    return {all.begin(), all.end()};
}

}  // namespace

CensusResult enumerate_sems(const FaceSequence& t, int v, const EnumOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CensusResult result;
    result.type = t;
    result.n_vertices = v;

    NonIntegral why{};
    if (!face_counts(t, v, &why)) {
        result.stats.wall_seconds = 0.0;
        return result;  // trivially empty
    }

    TypeWord tw(t);
    std::atomic<long long> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::map<std::vector<int>, PolyhedralMap> found;

    for (const auto& word : seed_words(t, opts.seed)) {
        auto seeded = seed_state(word, v, tw);
        if (!seeded) continue;

        // first branching level: candidates of the seed's slot
        Searcher root{tw, v, opts.node_budget, nodes, out_of_budget, found};
        auto [sv, su] = seeded->pick_slot(tw);
        if (sv < 0) {
            if (seeded->all_closed()) root.harvest(*seeded);
            continue;
        }
        std::vector<Face> first = root.candidates(*seeded, sv, su);
        std::vector<SearchState> children;
        for (const Face& f : first) {
            SearchState child = *seeded;
            if (child.add_face(f, tw)) children.push_back(std::move(child));
        }

        const int jobs = std::max(1, opts.jobs);
        if (jobs == 1) {
            // serial reference path
            for (const SearchState& child : children) {
                Searcher s{tw, v, opts.node_budget, nodes, out_of_budget, found};
                s.dfs(child);
            }
        } else {
#ifdef _OPENMP
            std::vector<std::map<std::vector<int>, PolyhedralMap>> partial(children.size());
            #pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
            for (int ci = 0; ci < static_cast<int>(children.size()); ++ci) {
                Searcher s{tw, v, opts.node_budget, nodes, out_of_budget, partial[ci]};
                s.dfs(children[ci]);
            }
            for (auto& part : partial)
                for (auto& [key, m] : part) found.emplace(key, std::move(m));
#else
            for (const SearchState& child : children) {
                Searcher s{tw, v, opts.node_budget, nodes, out_of_budget, found};
                s.dfs(child);
            }
#endif
        }
    }

    for (auto& [key, m] : found) result.representatives.push_back(std::move(m));
    result.stats.nodes = nodes.load();
    result.complete = !out_of_budget.load();
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<SweepCell> sweep(int v_max, long long chi, const EnumOptions& opts) {
    std::vector<SweepCell> table;
    for (int v = 1; v <= v_max; ++v) {
        for (const FaceSequence& t : admissible_types(v, chi)) {
            CensusResult r = enumerate_sems(t, v, opts);
            table.push_back({v, t, r.count(), r.complete});
        }
    }
    return table;
}

}  // namespace semc
