#pragma once

#include "semc/map.hpp"

namespace semc {

// Tries to direct every face boundary so each shared edge is traversed once
// in each direction; true iff the propagation over face adjacency never
// conflicts. Requires a valid connected map.
bool orientable(const PolyhedralMap& map);

}  // namespace semc
