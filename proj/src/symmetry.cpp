#include "semc/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "semc/isomorphism.hpp"

namespace semc {

std::string GroupId::to_string() const {
    switch (name) {
        case Name::Trivial: return "trivial";
        case Name::Z2: return "Z2";
        case Name::Z3: return "Z3";
        case Name::Z4: return "Z4";
        case Name::Z2xZ2: return "Z2xZ2";
        case Name::Z6: return "Z6";
        case Name::D6Order12: return "D6(order 12)";
        case Name::Z12: return "Z12";
        case Name::Z2xZ2xZ3: return "Z2xZ2xZ3";
        case Name::S4: return "S4";
        case Name::Other: break;
    }
    std::string o = "other(order=" + std::to_string(order) +
                    ", abelian=" + (abelian ? "yes" : "no") + ", element-orders=[";
    for (size_t i = 0; i < element_orders.size(); ++i) {
        if (i) o += ",";
        o += std::to_string(element_orders[i]);
    }
    return o + "])";
}

GroupId identify_group(const PermGroup& g, unsigned long cap) {
    GroupId id;
    if (g.order() > cap) throw std::runtime_error("group order exceeds identification cap");
    auto elems = g.elements(cap);
    id.order = static_cast<unsigned long>(elems.size());
    id.abelian = true;
    for (size_t i = 0; i < elems.size() && id.abelian; ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (!(elems[i] * elems[j] == elems[j] * elems[i])) { id.abelian = false; break; }
    for (const Permutation& p : elems) id.element_orders.push_back(p.order());
    std::sort(id.element_orders.begin(), id.element_orders.end());
    auto count_order = [&](int k) {
        return std::count(id.element_orders.begin(), id.element_orders.end(), k);
    };
    const unsigned long n = id.order;
    using N = GroupId::Name;
    if (n == 1) id.name = N::Trivial;
    else if (n == 2) id.name = N::Z2;
    else if (n == 3) id.name = N::Z3;
    else if (n == 4) id.name = count_order(4) ? N::Z4 : N::Z2xZ2;
    else if (n == 6 && id.abelian) id.name = N::Z6;
    else if (n == 12) {
        if (count_order(12)) id.name = N::Z12;
        else if (id.abelian && count_order(2) == 3 && count_order(6) == 6) id.name = N::Z2xZ2xZ3;
        else if (!id.abelian && count_order(2) == 7 && count_order(6) == 2) id.name = N::D6Order12;
        else id.name = N::Other;
    } else if (n == 24 && !id.abelian && count_order(2) == 9 && count_order(3) == 8 &&
               count_order(4) == 6) {
        id.name = N::S4;
    } else {
        id.name = N::Other;
    }
    return id;
}

PermGroup automorphism_group(const PolyhedralMap& map) {
    return PermGroup(map.n_vertices, map_automorphisms(map));
}

std::vector<Orbit> vertex_orbits(const PermGroup& g) {
    std::vector<Orbit> out;
    for (auto& members : g.vertex_orbits()) out.push_back({std::move(members)});
    return out;
}

std::vector<Orbit> face_orbits(const PermGroup& g, const PolyhedralMap& map) {
    auto canon = map.canonical_face_set();
    std::map<Face, int> index;
    for (int i = 0; i < static_cast<int>(canon.size()); ++i) index[canon[i]] = i;
    // the action must preserve the face set
    std::vector<std::vector<int>> gen_action;
    for (const Permutation& p : g.generators()) {
        std::vector<int> act(canon.size());
        for (int i = 0; i < static_cast<int>(canon.size()); ++i) {
            Face img(canon[i].size());
            for (size_t k = 0; k < canon[i].size(); ++k) img[k] = p(canon[i][k]);
            img = PolyhedralMap::canonical_face(img);
            auto it = index.find(img);
            if (it == index.end())
                throw std::invalid_argument("permutation " + p.to_cycles() +
                                            " is not an automorphism of the map");
            act[i] = it->second;
        }
        gen_action.push_back(std::move(act));
    }
    const int nf = static_cast<int>(canon.size());
    std::vector<int> comp(nf, -1);
    std::vector<Orbit> out;
    for (int s = 0; s < nf; ++s) {
        if (comp[s] >= 0) continue;
        Orbit orb;
        std::vector<int> stack = {s};
        comp[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            orb.members.push_back(x);
            for (const auto& act : gen_action)
                if (comp[act[x]] < 0) { comp[act[x]] = 1; stack.push_back(act[x]); }
        }
        std::sort(orb.members.begin(), orb.members.end());
        out.push_back(std::move(orb));
    }
    return out;
}

bool vertex_transitive(const PolyhedralMap& map) {
    PermGroup aut = automorphism_group(map);
    return vertex_orbits(aut).size() == 1;
}

int isohedral_number(const PolyhedralMap& map) {
    PermGroup aut = automorphism_group(map);
    return static_cast<int>(face_orbits(aut, map).size());
}

}  // namespace semc
