#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semc/face_sequence.hpp"
#include "semc/permutation.hpp"

namespace semc {

using Face = std::vector<int>;

// A map on a closed surface: vertices 0..n-1 plus faces as cyclic vertex
// lists. Faces keep whatever rotation/direction they were built with;
// comparisons canonicalize.
struct PolyhedralMap {
    int n_vertices = 0;
    std::vector<Face> faces;

    long long edge_count() const;
    // lexicographically minimal rotation of the lexicographically smaller direction
    static Face canonical_face(const Face& f);
    // the face set as sorted canonical faces (identity of the map as data)
    std::vector<Face> canonical_face_set() const;
    bool same_faces(const PolyhedralMap& other) const;
};

PolyhedralMap relabel(const PolyhedralMap& m, const Permutation& p);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the polyhedral-map conditions: simple faces, every edge on exactly
// two faces, pairwise face intersections at most an edge, every vertex link a
// single cycle, connectivity. Violations are data, not exceptions.
ValidationReport validate(const PolyhedralMap& map);

// Link of a vertex as the cyclic sequence of edge-neighbors with the size of
// the face lying between each neighbor and the next.
struct VertexLink {
    int center = 0;
    struct Entry {
        int neighbor;
        int gon;  // size of the face between this neighbor and the next
    };
    std::vector<Entry> cycle;

    std::vector<int> gon_sequence() const;
};

// Throws std::runtime_error if the incident faces of v do not close into a
// single cycle (i.e. the map is not valid around v).
VertexLink vertex_link(const PolyhedralMap& map, int v);

// Canonical cyclic gon sequence read from the link of v.
FaceSequence face_sequence_at(const PolyhedralMap& map, int v);

// True iff every vertex realizes t.
bool is_sem(const PolyhedralMap& map, const FaceSequence& t);

// V - E + F
long long euler_characteristic(const PolyhedralMap& map);

// Per-vertex index from vertex label to (face id, position in face);
// rebuilt deterministically from the face list.
struct FaceIncidence {
    std::vector<std::vector<std::pair<int, int>>> at;  // vertex -> (face, pos)
    explicit FaceIncidence(const PolyhedralMap& map);
};

// Test helpers used across modules.
PolyhedralMap tetrahedron();

}  // namespace semc
