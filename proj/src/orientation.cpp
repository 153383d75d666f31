#include "semc/orientation.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace semc {

bool orientable(const PolyhedralMap& map) {
    const int nf = static_cast<int>(map.faces.size());
    std::map<std::pair<int, int>, std::vector<int>> ef;
    for (int fi = 0; fi < nf; ++fi) {
        const Face& f = map.faces[fi];
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int u = f[i], v = f[(i + 1) % len];
            if (u > v) std::swap(u, v);
            ef[{u, v}].push_back(fi);
        }
    }
    auto stored_has_uv = [&](int fi, int u, int v) {
        const Face& f = map.faces[fi];
        const int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i)
            if (f[i] == u && f[(i + 1) % len] == v) return true;
        return false;
    };
    // orient[fi]: +1 keep stored direction, -1 reverse; 0 unassigned
    std::vector<int> orient(nf, 0);
    for (int seed = 0; seed < nf; ++seed) {
        if (orient[seed]) continue;
        orient[seed] = 1;
        std::vector<int> stack = {seed};
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            const Face& f = map.faces[fi];
            const int len = static_cast<int>(f.size());
            for (int i = 0; i < len; ++i) {
                int u = f[i], v = f[(i + 1) % len];
                int a = u, b = v;
                if (a > b) std::swap(a, b);
                const auto& shared = ef.at({a, b});
                if (shared.size() != 2) throw std::runtime_error("orientability needs every edge on two faces");
                int fo = shared[0] == fi ? shared[1] : shared[0];
                // under its chosen direction, fi traverses u->v iff orient[fi]==+1
                bool fi_uv = orient[fi] == 1;
                // the neighbor must traverse v->u; it does so under +1 iff its
                // stored order contains v->u
                int need = stored_has_uv(fo, v, u) == fi_uv ? 1 : -1;
                if (orient[fo] == 0) {
                    orient[fo] = need;
                    stack.push_back(fo);
                } else if (orient[fo] != need) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace semc
