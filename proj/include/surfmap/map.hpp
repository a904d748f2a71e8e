// Rooted combinatorial maps on orientable surfaces, encoded as rotation
// systems: a pair of permutations (sigma, alpha) acting on darts 1..n_darts.
// sigma gives the counterclockwise order of darts around each vertex, alpha
// is the fixed-point-free involution pairing the two darts of each edge.
// Faces are the cycles of phi = sigma∘alpha; with this convention the face
// of a dart lies on its right when the dart is traversed away from its base
// vertex (and the face of alpha(d) is the face on the left of d).
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfmap {

struct CombinatorialMap {
    int n_darts = 0;               // positive even; darts are 1..n_darts
    std::vector<int> sigma;        // size n_darts+1, index 0 unused
    std::vector<int> alpha;        // size n_darts+1, index 0 unused
    int root_dart = 1;
    int pointed_vertex = 0;        // 0 = absent; otherwise min dart of a sigma-cycle

    bool has_pointed() const { return pointed_vertex != 0; }

    bool operator==(const CombinatorialMap& o) const {
        return n_darts == o.n_darts && sigma == o.sigma && alpha == o.alpha &&
               root_dart == o.root_dart && pointed_vertex == o.pointed_vertex;
    }
    bool operator<(const CombinatorialMap& o) const {
        if (n_darts != o.n_darts) return n_darts < o.n_darts;
        if (sigma != o.sigma) return sigma < o.sigma;
        if (alpha != o.alpha) return alpha < o.alpha;
        if (root_dart != o.root_dart) return root_dart < o.root_dart;
        return pointed_vertex < o.pointed_vertex;
    }
};

enum class FaceColor : std::int8_t { white = 0, black = 1 };

// Proper 2-coloring of the faces; color_of_dart[d] is the color of the face
// containing dart d (the face on the right of d).
struct FaceColoring {
    std::vector<FaceColor> color_of_dart;  // size n_darts+1, index 0 unused
    bool black(int dart) const { return color_of_dart[dart] == FaceColor::black; }
    bool white(int dart) const { return color_of_dart[dart] == FaceColor::white; }
};

struct MapStats {
    int v = 0, e = 0, f = 0, genus = 0;
    std::vector<int> white_degrees;  // sorted white face degrees (when colored)
};

inline int phi(const CombinatorialMap& m, int d) { return m.sigma[m.alpha[d]]; }

namespace detail {

// Cycle decomposition of a permutation given as an image table over 1..n.
// Returns (cycles, cycle_index_of_element); within each cycle the minimal
// element comes first, and cycles are listed by increasing minimal element.
inline std::pair<std::vector<std::vector<int>>, std::vector<int>>
cycles_of(const std::vector<int>& perm, int n) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> idx(n + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (idx[s] >= 0) continue;
        std::vector<int> cyc;
        int d = s;
        do {
            idx[d] = static_cast<int>(cycles.size());
            cyc.push_back(d);
            d = perm[d];
        } while (d != s);
        cycles.push_back(std::move(cyc));
    }
    return {std::move(cycles), std::move(idx)};
}

}  // namespace detail

inline void validate(const CombinatorialMap& m) {
    if (m.n_darts <= 0 || m.n_darts % 2 != 0)
        throw std::invalid_argument("map must have a positive even number of darts");
    auto check_perm = [&](const std::vector<int>& p, const char* name) {
        if (static_cast<int>(p.size()) != m.n_darts + 1)
            throw std::invalid_argument(std::string(name) + ": wrong size");
        std::vector<char> seen(m.n_darts + 1, 0);
        for (int d = 1; d <= m.n_darts; ++d) {
            if (p[d] < 1 || p[d] > m.n_darts || seen[p[d]])
                throw std::invalid_argument(std::string(name) + ": not a permutation");
            seen[p[d]] = 1;
        }
    };
    check_perm(m.sigma, "sigma");
    check_perm(m.alpha, "alpha");
    for (int d = 1; d <= m.n_darts; ++d) {
        if (m.alpha[d] == d || m.alpha[m.alpha[d]] != d)
            throw std::invalid_argument("alpha is not a fixed-point-free involution");
    }
    if (m.root_dart < 1 || m.root_dart > m.n_darts)
        throw std::invalid_argument("root dart out of range");
    // Connectedness: <sigma, alpha> must act transitively on darts.
    std::vector<char> seen(m.n_darts + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        ++count;
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (!seen[e]) { seen[e] = 1; stack.push_back(e); }
        }
    }
    if (count != m.n_darts)
        throw std::invalid_argument("map is not connected");
    if (m.pointed_vertex != 0) {
        if (m.pointed_vertex < 1 || m.pointed_vertex > m.n_darts)
            throw std::invalid_argument("pointed vertex out of range");
        // Must name a sigma-cycle by its minimal dart.
        int d = m.pointed_vertex;
        int mn = d;
        do { mn = std::min(mn, d); d = m.sigma[d]; } while (d != m.pointed_vertex);
        if (mn != m.pointed_vertex)
            throw std::invalid_argument("pointed vertex is not a sigma-cycle minimum");
    }
}

// Vertices as sigma-cycles; a vertex is identified by the minimal dart of
// its cycle.
inline std::vector<std::vector<int>> vertices(const CombinatorialMap& m) {
    return detail::cycles_of(m.sigma, m.n_darts).first;
}

// Faces as cycles of phi = sigma∘alpha; a face is identified by the minimal
// dart of its cycle.
inline std::vector<std::vector<int>> faces(const CombinatorialMap& m) {
    std::vector<int> ph(m.n_darts + 1);
    for (int d = 1; d <= m.n_darts; ++d) ph[d] = phi(m, d);
    return detail::cycles_of(ph, m.n_darts).first;
}

// For each dart, the index (into faces(m)) of its face.
inline std::vector<int> face_index_of_darts(const CombinatorialMap& m) {
    std::vector<int> ph(m.n_darts + 1);
    for (int d = 1; d <= m.n_darts; ++d) ph[d] = phi(m, d);
    return detail::cycles_of(ph, m.n_darts).second;
}

// For each dart, the index (into vertices(m)) of its base vertex.
inline std::vector<int> vertex_index_of_darts(const CombinatorialMap& m) {
    return detail::cycles_of(m.sigma, m.n_darts).second;
}

inline MapStats stats(const CombinatorialMap& m) {
    MapStats s;
    s.v = static_cast<int>(vertices(m).size());
    s.e = m.n_darts / 2;
    s.f = static_cast<int>(faces(m).size());
    int twice_genus = 2 - s.v + s.e - s.f;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::runtime_error("corrupt map: Euler formula gives invalid genus");
    s.genus = twice_genus / 2;
    return s;
}

inline int genus(const CombinatorialMap& m) { return stats(m).genus; }

// The unique proper black/white face 2-coloring with a black face on the
// right of the root dart, or nullopt when the face adjacency graph is not
// bipartite. The face on the right of a dart d is its own face.
inline std::optional<FaceColoring> bicolor(const CombinatorialMap& m) {
    auto fcs = faces(m);
    auto fidx = face_index_of_darts(m);
    int nf = static_cast<int>(fcs.size());
    std::vector<int> color(nf, -1);
    // Seed: the face right of the root is black.
    color[fidx[m.root_dart]] = 1;
    std::vector<int> stack{fidx[m.root_dart]};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int d : fcs[f]) {
            int g = fidx[m.alpha[d]];
            if (color[g] == -1) { color[g] = 1 - color[f]; stack.push_back(g); }
            else if (color[g] == color[f]) return std::nullopt;
        }
    }
    // Connected face adjacency (the surface is connected), so all faces got
    // a color; assert that anyway.
    for (int c : color)
        if (c == -1) return std::nullopt;
    FaceColoring fc;
    fc.color_of_dart.assign(m.n_darts + 1, FaceColor::white);
    for (int d = 1; d <= m.n_darts; ++d)
        fc.color_of_dart[d] = color[fidx[d]] ? FaceColor::black : FaceColor::white;
    return fc;
}

// True iff every black face has degree m and every white face degree lies in
// m*D.
inline bool is_m_hypermap(const CombinatorialMap& m, const FaceColoring& fc,
                          int mm, const std::vector<int>& D) {
    for (const auto& f : faces(m)) {
        int deg = static_cast<int>(f.size());
        if (fc.black(f[0])) {
            if (deg != mm) return false;
        } else {
            if (deg % mm != 0) return false;
            if (std::find(D.begin(), D.end(), deg / mm) == D.end()) return false;
        }
    }
    return true;
}

// True iff the vertices admit a Z/mZ labelling that increases by 1 along
// every edge oriented with a black face on its right (equivalently, labels
// around every black face read 1..m in clockwise order). Decided by
// propagation from the root vertex anchored at label 1.
inline bool is_m_constellation(const CombinatorialMap& m, const FaceColoring& fc, int mm) {
    auto vidx = vertex_index_of_darts(m);
    int nv = 0;
    for (int i : vidx) nv = std::max(nv, i + 1);
    std::vector<int> label(nv, -1);
    label[vidx[m.root_dart]] = 1;
    std::vector<int> stack{vidx[m.root_dart]};
    // Precompute, per vertex, the constraint edges: a dart d with a black
    // face on its right is the canonical orientation of its edge, from
    // base(d) to base(alpha(d)), along which the label gains 1.
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (other vertex, delta)
    for (int d = 1; d <= m.n_darts; ++d) {
        if (fc.black(d)) {
            int u = vidx[d], v = vidx[m.alpha[d]];
            adj[u].push_back({v, +1});
            adj[v].push_back({u, -1});
        }
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, delta] : adj[u]) {
            int lv = (label[u] + delta % mm + mm) % mm;
            if (label[v] == -1) {
                label[v] = lv;
                stack.push_back(v);
            } else if (label[v] % mm != lv % mm) {
                return false;
            }
        }
    }
    return true;
}

// Relabel darts by breadth-first traversal from the root using the moves
// alpha then sigma. Two rooted maps are isomorphic iff their canonical forms
// are identical; the relabeling is idempotent on its own output.
inline CombinatorialMap canonical_form(const CombinatorialMap& m) {
    std::vector<int> newid(m.n_darts + 1, 0);  // old -> new
    std::vector<int> order;                    // new -> old, 0-based
    order.reserve(m.n_darts);
    newid[m.root_dart] = 1;
    order.push_back(m.root_dart);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {m.alpha[d], m.sigma[d]}) {
            if (!newid[e]) {
                newid[e] = static_cast<int>(order.size()) + 1;
                order.push_back(e);
            }
        }
    }
    CombinatorialMap c;
    c.n_darts = m.n_darts;
    c.sigma.assign(m.n_darts + 1, 0);
    c.alpha.assign(m.n_darts + 1, 0);
    c.root_dart = 1;
    for (int d = 1; d <= m.n_darts; ++d) {
        c.sigma[newid[d]] = newid[m.sigma[d]];
        c.alpha[newid[d]] = newid[m.alpha[d]];
    }
    if (m.pointed_vertex != 0) {
        int d = m.pointed_vertex, mn = m.n_darts + 1;
        do { mn = std::min(mn, newid[d]); d = m.sigma[d]; } while (d != m.pointed_vertex);
        c.pointed_vertex = mn;
    }
    return c;
}

// m=2 only: contract every black (degree-2) face to a single edge. The
// resulting even map has the black faces as edges, the white faces as faces
// of the same degree, and the same vertex set and genus. The surviving darts
// are those whose face is black; the new edge involution is phi restricted
// to them, the new rotation is sigma with non-surviving darts skipped, and
// the root dart (already black-sided) survives as the new root.
inline CombinatorialMap contract_black_faces(const CombinatorialMap& m,
                                             const FaceColoring& fc) {
    for (const auto& f : faces(m)) {
        if (fc.black(f[0]) && f.size() != 2)
            throw std::invalid_argument("contract_black_faces: a black face has degree != 2");
    }
    std::vector<int> keep;  // black-side darts
    for (int d = 1; d <= m.n_darts; ++d)
        if (fc.black(d)) keep.push_back(d);
    std::vector<int> newid(m.n_darts + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i) + 1;
    CombinatorialMap c;
    c.n_darts = static_cast<int>(keep.size());
    c.sigma.assign(c.n_darts + 1, 0);
    c.alpha.assign(c.n_darts + 1, 0);
    for (int d : keep) {
        c.alpha[newid[d]] = newid[phi(m, d)];
        int e = m.sigma[d];
        while (!newid[e]) e = m.sigma[e];
        c.sigma[newid[d]] = newid[e];
    }
    c.root_dart = newid[m.root_dart];
    if (m.pointed_vertex) {
        // Rename the pointed sigma-cycle by its new minimal surviving dart.
        int d = m.pointed_vertex, mn = c.n_darts + 1;
        do {
            if (newid[d]) mn = std::min(mn, newid[d]);
            d = m.sigma[d];
        } while (d != m.pointed_vertex);
        if (mn == c.n_darts + 1)
            throw std::runtime_error("contract_black_faces: pointed vertex lost");
        c.pointed_vertex = mn;
    }
    validate(c);
    return c;
}

// ---------------------------------------------------------------------------
// Text format. Line 1: "darts <2n>"; line 2: "sigma <image of 1> ... <image
// of 2n>"; line 3: "alpha ..."; line 4: "root <dart>"; optional line 5:
// "pointed <vertex-id>".
// ---------------------------------------------------------------------------

inline void write_map(std::ostream& os, const CombinatorialMap& m) {
    os << "darts " << m.n_darts << "\n";
    os << "sigma";
    for (int d = 1; d <= m.n_darts; ++d) os << ' ' << m.sigma[d];
    os << "\nalpha";
    for (int d = 1; d <= m.n_darts; ++d) os << ' ' << m.alpha[d];
    os << "\nroot " << m.root_dart << "\n";
    if (m.pointed_vertex) os << "pointed " << m.pointed_vertex << "\n";
}

inline std::string to_string(const CombinatorialMap& m) {
    std::ostringstream os;
    write_map(os, m);
    return os.str();
}

inline CombinatorialMap read_map(std::istream& is) {
    CombinatorialMap m;
    std::string kw;
    if (!(is >> kw) || kw != "darts") throw std::invalid_argument("map format: expected 'darts'");
    if (!(is >> m.n_darts) || m.n_darts <= 0) throw std::invalid_argument("map format: bad dart count");
    auto read_perm = [&](std::vector<int>& p, const char* name) {
        if (!(is >> kw) || kw != name)
            throw std::invalid_argument(std::string("map format: expected '") + name + "'");
        p.assign(m.n_darts + 1, 0);
        for (int d = 1; d <= m.n_darts; ++d)
            if (!(is >> p[d])) throw std::invalid_argument("map format: truncated permutation");
    };
    read_perm(m.sigma, "sigma");
    read_perm(m.alpha, "alpha");
    if (!(is >> kw) || kw != "root") throw std::invalid_argument("map format: expected 'root'");
    if (!(is >> m.root_dart)) throw std::invalid_argument("map format: bad root");
    if (is >> kw) {
        if (kw != "pointed") throw std::invalid_argument("map format: unexpected trailing data");
        if (!(is >> m.pointed_vertex)) throw std::invalid_argument("map format: bad pointed vertex");
    }
    validate(m);
    return m;
}

}  // namespace surfmap
