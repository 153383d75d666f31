#include "semc/permgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace semc {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : n_(degree), gens_(std::move(generators)) {
    for (const Permutation& g : gens_)
        if (g.degree() != n_) throw std::invalid_argument("generator degree mismatch");
    std::vector<std::pair<size_t, Permutation>> work;
    for (const Permutation& g : gens_) work.push_back({0, g});
    while (!work.empty()) {
        auto [lvl, p] = work.back();
        work.pop_back();
        auto [residue, drop] = strip(std::move(p), lvl);
        if (residue.is_identity()) continue;
        if (drop == chain_.size()) {
            Level L;
            for (int x = 0; x < n_; ++x)
                if (residue(x) != x) { L.base = x; break; }
            chain_.push_back(std::move(L));
        }
        chain_[drop].gens.push_back(residue);
        rebuild_orbit(drop);
        // fresh Schreier generators at this level
        const Level& L = chain_[drop];
        for (const auto& [x, tx] : L.transversal) {
            for (const Permutation& h : L.gens) {
                const Permutation& thx = L.transversal.at(h(x));
                Permutation s = thx.inverse() * h * tx;
                if (!s.is_identity()) work.push_back({drop + 1, std::move(s)});
            }
        }
    }
    order_ = 1;
    for (const Level& L : chain_) order_ *= static_cast<unsigned long>(L.transversal.size());
}

std::pair<Permutation, size_t> PermGroup::strip(Permutation p, size_t level) const {
    for (size_t lvl = level; lvl < chain_.size(); ++lvl) {
        const Level& L = chain_[lvl];
        int x = p(L.base);
        auto it = L.transversal.find(x);
        if (it == L.transversal.end()) return {std::move(p), lvl};
        p = it->second.inverse() * p;
    }
    if (p.is_identity()) return {std::move(p), chain_.size()};
    return {std::move(p), chain_.size()};
}

void PermGroup::rebuild_orbit(size_t level) {
    Level& L = chain_[level];
    L.transversal.clear();
    L.transversal.emplace(L.base, Permutation::identity(n_));
    std::vector<int> frontier = {L.base};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            const Permutation tx = L.transversal.at(x);
            for (const Permutation& g : L.gens) {
                int y = g(x);
                if (!L.transversal.count(y)) {
                    L.transversal.emplace(y, g * tx);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != n_) return false;
    auto [residue, drop] = strip(p, 0);
    return residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(unsigned long cap) const {
    if (order_ > cap) throw std::runtime_error("group too large to enumerate (order " +
                                               order_.get_str() + ")");
    std::vector<Permutation> out = {Permutation::identity(n_)};
    for (size_t lvl = chain_.size(); lvl-- > 0;) {
        std::vector<Permutation> next;
        next.reserve(out.size() * chain_[lvl].transversal.size());
        for (const auto& [x, tx] : chain_[lvl].transversal)
            for (const Permutation& tail : out) next.push_back(tx * tail);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool PermGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
    return true;
}

std::vector<std::vector<int>> PermGroup::vertex_orbits() const {
    std::vector<int> comp(n_, -1);
    int nc = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Permutation& g : gens_) {
                for (int y : {g(x), g.inverse()(x)}) {
                    if (comp[y] < 0) {
                        comp[y] = nc;
                        stack.push_back(y);
                    }
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> orbits(nc);
    for (int v = 0; v < n_; ++v) orbits[comp[v]].push_back(v);
    return orbits;
}

}  // namespace semc
