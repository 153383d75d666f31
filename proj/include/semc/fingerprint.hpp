#pragma once

#include <string>
#include <vector>

#include "semc/intpoly.hpp"
#include "semc/map.hpp"

namespace semc {

// Relabeling-invariant bundle: equal fingerprints are necessary, not
// sufficient, for isomorphism.
struct Fingerprint {
    long long euler = 0;
    bool orientable_flag = false;
    // sorted degree sequence of G_i for i = 0..n-1
    std::vector<std::vector<int>> gi_degrees;
    IntPolynomial edge_char_poly;

    bool operator==(const Fingerprint& o) const = default;
    // canonical JSON array (sorted-degree lists and coefficient strings)
    std::string to_json() const;
};

Fingerprint invariant_fingerprint(const PolyhedralMap& map);

}  // namespace semc
