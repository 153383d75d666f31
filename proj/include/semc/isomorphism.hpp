#pragma once

#include <optional>
#include <vector>

#include "semc/map.hpp"
#include "semc/permutation.hpp"

namespace semc {

// Total labeling-independent encoding of a map: the face list under the
// canonical labeling plus one relabeling that realizes it. Two maps are
// isomorphic iff their encodings are equal.
struct CanonicalForm {
    int n_vertices = 0;
    std::vector<Face> faces;        // canonical faces, sorted
    Permutation relabeling;         // old label -> canonical label

    bool operator==(const CanonicalForm& o) const {
        return n_vertices == o.n_vertices && faces == o.faces;
    }
    bool operator<(const CanonicalForm& o) const {
        if (n_vertices != o.n_vertices) return n_vertices < o.n_vertices;
        return faces < o.faces;
    }
    // flat integer key, handy for set/map storage
    std::vector<int> key() const;
};

// Minimum encoding over BFS labelings seeded from every dart (oriented face
// corner); covers reflections, so orientation-reversing relabelings count.
// Requires a valid connected map.
CanonicalForm canonical_form(const PolyhedralMap& map);

// Same result, dart starts evaluated with OpenMP.
CanonicalForm canonical_form_parallel(const PolyhedralMap& map);

// All relabelings fixing the face set, extracted from the darts whose BFS
// labeling reaches the canonical encoding.
std::vector<Permutation> map_automorphisms(const PolyhedralMap& map);

// Some pi with relabel(m1, pi) == m2 (faces as unoriented cycles), or none.
std::optional<Permutation> are_isomorphic(const PolyhedralMap& m1, const PolyhedralMap& m2);

// True iff pi maps the face set of m1 onto the face set of m2.
bool check_witness(const PolyhedralMap& m1, const PolyhedralMap& m2, const Permutation& pi);

}  // namespace semc
