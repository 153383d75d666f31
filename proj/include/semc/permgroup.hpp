#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "semc/permutation.hpp"

namespace semc {

// Permutation group from generators with a base-and-strong-generating-set
// chain (Schreier-Sims). Order and membership are exact.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const mpz_class& order() const { return order_; }
    bool contains(const Permutation& p) const;

    // Every element, enumerated from the stabilizer chain. Throws if the
    // order exceeds the cap.
    std::vector<Permutation> elements(unsigned long cap = 10000) const;

    bool is_abelian() const;

    // Orbit partition of {0..n-1} under the generators; each orbit sorted,
    // orbits ordered by least element.
    std::vector<std::vector<int>> vertex_orbits() const;

private:
    struct Level {
        int base = -1;
        std::map<int, Permutation> transversal;  // point -> rep taking base to point
        std::vector<Permutation> gens;
    };

    void insert(const Permutation& g);
    // strips p through the chain starting at level; returns the residue and
    // the level it dropped at (chain size if it passed everything)
    std::pair<Permutation, size_t> strip(Permutation p, size_t level) const;
    void rebuild_orbit(size_t level);

    int n_;
    std::vector<Permutation> gens_;
    std::vector<Level> chain_;
    mpz_class order_ = 1;
};

}  // namespace semc
