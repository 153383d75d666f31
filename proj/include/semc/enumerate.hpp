#pragma once

#include <optional>
#include <vector>

#include "semc/face_sequence.hpp"
#include "semc/map.hpp"

namespace semc {

struct EnumOptions {
    std::optional<long long> node_budget;  // unlimited when empty
    int jobs = 1;                          // worker count; 1 = serial reference path
    // WLOG seeding of lk(0): the canonical rotation only (default), or every
    // rotation/reflection of the type (for the seeding-soundness check).
    enum class Seed { CanonicalRotation, AllRotations } seed = Seed::CanonicalRotation;
};

struct CensusStats {
    long long nodes = 0;
    double wall_seconds = 0.0;
};

struct CensusResult {
    FaceSequence type;
    int n_vertices = 0;
    // one representative per isomorphism class, in canonical labeling,
    // sorted by canonical encoding
    std::vector<PolyhedralMap> representatives;
    CensusStats stats;
    bool complete = true;  // false iff the node budget ran out

    int count() const { return static_cast<int>(representatives.size()); }
};

// All isomorphism classes of semi-equivelar maps of the given type on
// exactly v labeled vertices. Deterministic irrespective of jobs.
CensusResult enumerate_sems(const FaceSequence& t, int v, const EnumOptions& opts = {});

struct SweepCell {
    int vertices;
    FaceSequence type;
    int classes;
    bool complete;
};

// Census over every admissible type for each vertex count up to v_max.
std::vector<SweepCell> sweep(int v_max, long long chi, const EnumOptions& opts = {});

}  // namespace semc
