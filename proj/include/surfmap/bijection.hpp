// The bijection between rooted-pointed Eulerian maps of genus g and mobiles
// of genus g. The forward direction (mob) labels every vertex by its
// oriented distance from the pointed vertex, places an unlabelled vertex
// inside every face, and replaces each map edge by a mobile edge: an edge
// from the white face center to the greater extremity when the edge gains
// one along its canonical orientation (black face on the right), and a
// flagged edge joining the two face centers otherwise. The reverse
// direction (map_of) cuts the surface along the mobile, walks the contour of
// its unique face, and draws one chord out of every labelled corner and
// every flag toward its successor, recovering the map edges.
#pragma once

#include <climits>
#include <map>
#include <stdexcept>
#include <vector>

#include "map.hpp"
#include "mobile.hpp"

namespace surfmap {

// Oriented graph distance from the pointed vertex: the minimum number of
// edges of a path from it that follows canonical orientations (black face on
// the right of every step). Indexed like vertex_index_of_darts.
inline std::vector<int> oriented_distances(const CombinatorialMap& m, const FaceColoring& fc) {
    if (!m.has_pointed())
        throw std::invalid_argument("oriented_distances: map must carry a pointed vertex");
    auto vidx = vertex_index_of_darts(m);
    int nv = static_cast<int>(vertices(m).size());
    std::vector<std::vector<int>> adj(nv);
    for (int d = 1; d <= m.n_darts; ++d)
        if (fc.black(d)) adj[vidx[d]].push_back(vidx[m.alpha[d]]);
    std::vector<int> dist(nv, -1);
    std::vector<int> queue{vidx[m.pointed_vertex]};
    dist[queue[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (int v : adj[u]) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    for (int d : dist)
        if (d == -1) throw std::logic_error("oriented_distances: orientation not strongly connected");
    return dist;
}

// Forward direction of the bijection. The input must be rooted-pointed and
// face-bicolored (fc = *bicolor(m)); the output mobile has root label 0.
inline Mobile mob(const CombinatorialMap& m, const FaceColoring& fc) {
    std::vector<int> lab = oriented_distances(m, fc);
    auto vidx = vertex_index_of_darts(m);
    auto fcs = faces(m);

    if (!fc.black(m.root_dart))
        throw std::invalid_argument("mob: root dart must have its black face on the right");

    // One mobile edge per map edge, indexed by the black-side dart; the
    // white-center end is dart 2j-1 and the other end is dart 2j.
    std::vector<int> eidx(m.n_darts + 1, 0);
    int ne = 0;
    for (int d = 1; d <= m.n_darts; ++d)
        if (fc.black(d)) eidx[d] = ++ne;
    auto increasing = [&](int b) { return lab[vidx[m.alpha[b]]] == lab[vidx[b]] + 1; };

    Mobile t;
    t.map.n_darts = 2 * ne;
    t.map.sigma.assign(2 * ne + 1, 0);
    t.map.alpha.assign(2 * ne + 1, 0);
    t.kind_of_dart.assign(2 * ne + 1, MobileVertexKind::labelled);
    t.label_of_dart.assign(2 * ne + 1, 0);
    t.edge_flagged.assign(2 * ne + 1, 0);
    t.left_flag.assign(2 * ne + 1, 0);

    auto close_cycle = [&](const std::vector<int>& rot) {
        int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) t.map.sigma[rot[i]] = rot[(i + 1) % k];
    };

    // Rotations at face centers: the boundary read in face order walks
    // clockwise around the center (the face lies on the right of its darts),
    // so the counterclockwise rotation is the reversed cycle. A white face
    // contributes the white-center end of every boundary edge, a black face
    // the black-center end of its flagged boundary edges only.
    for (const auto& f : fcs) {
        std::vector<int> rot;
        if (fc.white(f[0])) {
            for (int w : f) rot.push_back(2 * eidx[m.alpha[w]] - 1);
        } else {
            for (int b : f)
                if (!increasing(b)) rot.push_back(2 * eidx[b]);
        }
        if (rot.empty()) continue;
        std::reverse(rot.begin(), rot.end());
        close_cycle(rot);
    }
    // Rotations at labelled vertices: an increasing edge arriving at v via
    // the white-side dart y attaches in the corner hugging the right side of
    // y, so reading the map rotation at v in order lists the plain mobile
    // darts counterclockwise.
    for (const auto& vc : vertices(m)) {
        std::vector<int> rot;
        for (int y : vc)
            if (fc.white(y) && increasing(m.alpha[y])) rot.push_back(2 * eidx[m.alpha[y]]);
        if (rot.empty()) continue;
        close_cycle(rot);
    }

    for (int b = 1; b <= m.n_darts; ++b) {
        if (!fc.black(b)) continue;
        int j = eidx[b], lu = lab[vidx[b]], lv = lab[vidx[m.alpha[b]]];
        t.map.alpha[2 * j - 1] = 2 * j;
        t.map.alpha[2 * j] = 2 * j - 1;
        t.kind_of_dart[2 * j - 1] = MobileVertexKind::white;
        if (increasing(b)) {
            t.kind_of_dart[2 * j] = MobileVertexKind::labelled;
            t.label_of_dart[2 * j] = lv;
        } else {
            t.kind_of_dart[2 * j] = MobileVertexKind::black;
            t.edge_flagged[2 * j - 1] = t.edge_flagged[2 * j] = 1;
            t.left_flag[2 * j - 1] = lv;  // flag on the extremity side
            t.left_flag[2 * j] = lu;      // flag on the origin side
        }
    }
    t.map.root_dart = 2 * eidx[m.root_dart] - 1;

    // Translate so that the root edge carries label 0.
    int shift = lab[vidx[m.alpha[m.root_dart]]];
    for (int d = 1; d <= 2 * ne; ++d) {
        if (t.kind_of_dart[d] == MobileVertexKind::labelled) t.label_of_dart[d] -= shift;
        if (t.edge_flagged[d]) t.left_flag[d] -= shift;
    }
    return t;
}

// Tunable orientation choices of the closure; the defaults are the ones
// under which map_of inverts mob (exercised by the round-trip tests).
struct ClosureConventions {
    bool search_forward = false;   // successor search runs against the face order
    bool v0_first = true;          // the chord to the pointed vertex comes first in its fan
    bool root_corner_after = true; // plain root: use the corner counterclockwise of the root edge
};

// Reverse direction of the bijection: rebuild the rooted-pointed Eulerian
// map from a mobile. Throws std::invalid_argument when the closure is
// structurally inconsistent (which cannot happen on images of mob).
inline CombinatorialMap map_of(const Mobile& t, const ClosureConventions& conv = {}) {
    const CombinatorialMap& tm = t.map;

    // Translate labels so that the smallest value over all flags and over
    // all vertex labels minus one is 0.
    int base = INT_MAX;
    for (int d = 1; d <= tm.n_darts; ++d) {
        if (t.kind(d) == MobileVertexKind::labelled) base = std::min(base, t.label_of_dart[d] - 1);
        if (t.flagged(d)) base = std::min(base, t.left_flag[d]);
    }
    if (base == INT_MAX) throw std::invalid_argument("map_of: empty mobile");
    auto lab = [&](int d) { return t.label_of_dart[d] - base; };
    auto flg = [&](int d) { return t.left_flag[d] - base; };

    // Contour of the unique face, in face order: traversing a dart passes
    // the flag on its right, then sweeps the corner (alpha(d), sigma(alpha(d)))
    // at the head of d.
    struct Elem {
        bool is_flag = false;
        bool active = false;  // labelled corner or flag
        int value = 0;        // corner label or flag value
        int dart = 0;         // flag: the traversed dart; corner: its key dart alpha(d)
    };
    std::vector<Elem> contour;
    std::vector<int> pos_of_corner(tm.n_darts + 1, -1);  // by corner key dart
    std::vector<int> pos_of_flag(tm.n_darts + 1, -1);    // by traversed dart
    {
        int d = tm.root_dart;
        do {
            if (t.flagged(d)) {
                pos_of_flag[d] = static_cast<int>(contour.size());
                contour.push_back({true, true, flg(tm.alpha[d]), d});
            }
            int y = tm.alpha[d];
            pos_of_corner[y] = static_cast<int>(contour.size());
            bool labelled = t.kind(y) == MobileVertexKind::labelled;
            contour.push_back({false, labelled, labelled ? lab(y) : 0, y});
            d = phi(tm, d);
        } while (d != tm.root_dart);
    }
    const int L = static_cast<int>(contour.size());
    const int V0 = -1;

    // One chord out of every labelled corner and every flag: toward the
    // first corner whose label is one unit lower (for corners) or equal (for
    // flags), or toward the pointed vertex when the target would go below
    // every label.
    int step = conv.search_forward ? 1 : L - 1;
    auto successor = [&](int p, int target) {
        for (int q = (p + step) % L; q != p; q = (q + step) % L) {
            if (contour[q].active && !contour[q].is_flag && contour[q].value == target)
                return q;
        }
        throw std::invalid_argument("map_of: dangling successor");
    };
    std::vector<int> out(L, -2);  // -2: no chord
    for (int p = 0; p < L; ++p) {
        const Elem& e = contour[p];
        if (!e.active) continue;
        if (e.is_flag) out[p] = e.value == 0 ? V0 : successor(p, e.value);
        else out[p] = e.value == 1 ? V0 : successor(p, e.value - 1);
    }
    // Map edges: a labelled corner chord is an edge on its own (oriented
    // from its landing point, one label lower, to the corner); the two
    // chords of a flag pair join through the crossing into a single edge
    // oriented from the landing of the origin-side flag (the one read off
    // the white-side dart) to the landing of the other.
    struct End {
        int at;   // corner position or V0
        int key;  // the chord's other attachment position (fan sort key)
    };
    struct Edge {
        End origin, extremity;
    };
    std::vector<Edge> edges;
    for (int p = 0; p < L; ++p) {
        const Elem& e = contour[p];
        if (!e.active || e.is_flag) continue;
        edges.push_back({{out[p], p}, {p, out[p]}});
    }
    for (int d = 1; d <= tm.n_darts; ++d) {
        if (!t.flagged(d) || t.kind(d) != MobileVertexKind::white) continue;
        int p_origin = pos_of_flag[d];            // carries the origin-side flag
        int p_extrem = pos_of_flag[tm.alpha[d]];  // carries the extremity-side flag
        edges.push_back({{out[p_origin], p_origin}, {out[p_extrem], p_extrem}});
    }

    // Dart numbering: edge j has darts 2j-1 (origin end) and 2j.
    int ne = static_cast<int>(edges.size());
    CombinatorialMap c;
    c.n_darts = 2 * ne;
    c.sigma.assign(2 * ne + 1, 0);
    c.alpha.assign(2 * ne + 1, 0);
    for (int j = 1; j <= ne; ++j) {
        c.alpha[2 * j - 1] = 2 * j;
        c.alpha[2 * j] = 2 * j - 1;
    }
    std::vector<std::vector<std::pair<int, int>>> at_corner(L);  // (fan key, dart)
    std::vector<std::pair<int, int>> at_v0;                      // (position, dart)
    for (int j = 1; j <= ne; ++j) {
        for (auto [end, dart] : {std::pair{edges[j - 1].origin, 2 * j - 1},
                                 std::pair{edges[j - 1].extremity, 2 * j}}) {
            if (end.at == V0) at_v0.push_back({end.key, dart});
            else at_corner[end.at].push_back({end.key, dart});
        }
    }

    // Fan order inside the corner at position p, counterclockwise: ascending
    // distance of the far attachment from p against the face order. A chord
    // to the pointed vertex sorts first or last per the convention.
    auto fan_rank = [&](int p, int key) {
        if (key == V0) return conv.v0_first ? 0 : 2 * L;
        return 2 * (((p - key) % L + L) % L) + 1;
    };
    auto close_cycle = [&](const std::vector<int>& rot) {
        int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) c.sigma[rot[i]] = rot[(i + 1) % k];
    };
    // Rotation at each labelled vertex: its corners in rotation order of
    // their key darts, each corner's fan sorted as above.
    std::vector<char> seen(tm.n_darts + 1, 0);
    for (int d0 = 1; d0 <= tm.n_darts; ++d0) {
        if (seen[d0] || t.kind(d0) != MobileVertexKind::labelled) continue;
        std::vector<int> rot;
        int y = d0;
        do {
            seen[y] = 1;
            int p = pos_of_corner[y];
            auto fan = at_corner[p];
            std::sort(fan.begin(), fan.end(), [&](auto a, auto b) {
                return fan_rank(p, a.first) < fan_rank(p, b.first);
            });
            for (auto [key, dart] : fan) rot.push_back(dart);
            y = tm.sigma[y];
        } while (y != d0);
        if (rot.empty()) throw std::invalid_argument("map_of: isolated labelled vertex");
        close_cycle(rot);
    }
    // Rotation at the pointed vertex: attachments in reverse face order.
    if (at_v0.empty()) throw std::invalid_argument("map_of: pointed vertex has no edge");
    std::sort(at_v0.begin(), at_v0.end(), std::greater<>());
    {
        std::vector<int> rot;
        for (auto [pos, dart] : at_v0) rot.push_back(dart);
        close_cycle(rot);
    }
    int pv = 2 * ne + 1;
    for (auto [pos, dart] : at_v0) pv = std::min(pv, dart);
    {
        // pointed vertex id: the minimal dart of its rotation cycle
        int d = pv, mn = pv;
        do { mn = std::min(mn, d); d = c.sigma[d]; } while (d != pv);
        c.pointed_vertex = mn;
    }

    // Root: a plain mobile root edge designates the chord out of the corner
    // of its labelled end adjacent to it; a flagged one designates the edge
    // through its own crossing. The root dart sits at the origin end.
    int rho = tm.root_dart;
    int root_edge = -1;
    if (t.flagged(rho)) {
        for (int j = 1; j <= ne; ++j)
            if (edges[j - 1].origin.key == pos_of_flag[rho] ||
                edges[j - 1].extremity.key == pos_of_flag[rho])
                root_edge = j;
    } else {
        int y = tm.alpha[rho];
        if (!conv.root_corner_after) {
            int x = y;
            while (tm.sigma[x] != y) x = tm.sigma[x];
            y = x;  // the corner clockwise of the root edge
        }
        int p = pos_of_corner[y];
        for (int j = 1; j <= ne; ++j)
            if (edges[j - 1].extremity.at == p && edges[j - 1].extremity.key == out[p])
                root_edge = j;
    }
    if (root_edge < 0) throw std::logic_error("map_of: root edge not found");
    c.root_dart = 2 * root_edge - 1;

    validate(c);
    return c;
}

}  // namespace surfmap
