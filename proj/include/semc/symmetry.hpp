#pragma once

#include <string>
#include <vector>

#include "semc/map.hpp"
#include "semc/permgroup.hpp"

namespace semc {

// Named identification of small groups by (order, abelian?, element-order
// multiset); falls back to Other rather than guessing.
struct GroupId {
    enum class Name {
        Trivial, Z2, Z3, Z4, Z2xZ2, Z6, D6Order12, Z12, Z2xZ2xZ3, S4, Other
    };
    Name name = Name::Other;
    unsigned long order = 0;
    bool abelian = false;
    std::vector<int> element_orders;  // sorted, kept for Other and reporting

    std::string to_string() const;
};

GroupId identify_group(const PermGroup& g, unsigned long cap = 10000);

// Full automorphism group of a valid map, derived from the canonical-form
// dart machinery.
PermGroup automorphism_group(const PolyhedralMap& map);

struct Orbit {
    std::vector<int> members;  // sorted; for faces these are face indices
    int representative() const { return members.front(); }
    int size() const { return static_cast<int>(members.size()); }
};

std::vector<Orbit> vertex_orbits(const PermGroup& g);

// Face orbits; throws std::invalid_argument if some generator does not
// preserve the face set.
std::vector<Orbit> face_orbits(const PermGroup& g, const PolyhedralMap& map);

bool vertex_transitive(const PolyhedralMap& map);
int isohedral_number(const PolyhedralMap& map);

}  // namespace semc
