// One-face (unicellular) rooted maps. A rooted map with one face and e edges
// corresponds bijectively to a fixed-point-free involution on the 2e sides of
// a polygon: cut the map open along its unique face to obtain the polygon,
// whose sides are glued in pairs. Conversely a pairing alpha together with
// the polygon rotation phi = (1 2 ... 2e) determines the map via
// sigma = phi∘alpha.
#pragma once

#include <functional>
#include <vector>

#include "map.hpp"

namespace surfmap {

// Build the one-face rooted map whose face contour, read from the root, is
// the cycle (1 2 ... 2e) and whose side pairing is the involution `pairing`
// (size 2e+1, 1-indexed).
inline CombinatorialMap unicellular_from_pairing(const std::vector<int>& pairing) {
    CombinatorialMap m;
    m.n_darts = static_cast<int>(pairing.size()) - 1;
    m.alpha = pairing;
    m.sigma.assign(m.n_darts + 1, 0);
    for (int d = 1; d <= m.n_darts; ++d) {
        int ph = d % m.n_darts + 1;  // phi(alpha(alpha(d))) successor on the polygon
        m.sigma[pairing[d]] = ph;    // sigma = phi∘alpha, applied at alpha(d)
    }
    m.root_dart = 1;
    return m;
}

// Enumerate every fixed-point-free involution on 1..2e and hand the
// corresponding one-face map to `visit`. Each rooted one-face map with e
// edges is produced exactly once.
inline void for_each_unicellular(int e, const std::function<void(const CombinatorialMap&)>& visit) {
    int n = 2 * e;
    std::vector<int> pairing(n + 1, 0);
    std::function<void()> rec = [&]() {
        int first = 0;
        for (int d = 1; d <= n; ++d)
            if (!pairing[d]) { first = d; break; }
        if (!first) {
            visit(unicellular_from_pairing(pairing));
            return;
        }
        for (int o = first + 1; o <= n; ++o) {
            if (pairing[o]) continue;
            pairing[first] = o;
            pairing[o] = first;
            rec();
            pairing[first] = pairing[o] = 0;
        }
    };
    rec();
}

}  // namespace surfmap
