#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semc/json_io.hpp"
#include "semc/map.hpp"

namespace semc {

// Reference expectations for one named catalog map. Optional fields are
// info-only (left blank by the source tabulation).
struct CatalogExpectation {
    std::string file;  // file name inside the catalog directory
    std::string name;
    std::string type;
    bool orientable;
    unsigned long aut_order;
    std::string group;
    bool transitive;
    std::vector<int> orbit_sizes;             // sorted; empty = not tabulated
    std::optional<int> listed_isohedral;      // the printed label, when it exists
    std::vector<std::pair<Face, int>> rep_orbits;  // listed face -> expected orbit size
    std::vector<std::string> generators;      // verified automorphism generators
    // claimed generators that fail verification; reported, never asserted
    std::vector<std::pair<std::string, std::string>> disputed_generators;  // (perm, note)
    // expected char poly coefficients (degree-descending), with assert flag
    std::vector<long long> char_poly_coeffs;
    bool char_poly_assert = false;
    struct GiData {
        int i;
        std::vector<std::pair<int, int>> edges;
        bool assert_equal;  // false: report-only comparison
        std::string note;
    };
    std::vector<GiData> gi_data;
    std::vector<Face> anchor_faces;  // faces the transcription must contain
};

const std::vector<CatalogExpectation>& catalog_expectations();

struct ClaimResult {
    std::string category;  // "structural", "aut", "generators", "charpoly", "gi", "orbits", "transitivity", "anchors", "distinctness"
    std::string label;
    bool pass;
    std::string detail;  // non-empty when failing or informational
};

struct CatalogReport {
    std::vector<ClaimResult> claims;
    std::vector<std::string> discrepancies;  // reference-data inconsistencies, computed resolutions
    bool all_pass = true;

    std::string to_text() const;
};

// Loads every catalog file from dir, recomputes all classification data and
// compares against the expectations. Recomputation errors become failed
// claims, never exceptions.
CatalogReport verify_catalog(const std::string& dir);

// Convenience: catalog entries as loaded maps, in table order.
std::vector<MapFile> load_catalog(const std::string& dir);

}  // namespace semc
