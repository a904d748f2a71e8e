// Mobiles: decorated one-face maps (plane trees when the genus is zero)
// whose vertices are of three kinds — labelled vertices carrying an integer,
// unlabelled white vertices, and unlabelled black vertices. Edges join a
// labelled vertex to a white vertex (plain edges) or a white vertex to a
// black vertex (flagged edges, carrying an integer flag on each side). The
// admissibility rules below constrain the clockwise order of labels and
// flags around white and black vertices.
#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "map.hpp"

namespace surfmap {

enum class MobileVertexKind : std::int8_t { labelled = 0, white = 1, black = 2 };

struct Mobile {
    CombinatorialMap map;                        // one-face rotation system
    std::vector<MobileVertexKind> kind_of_dart;  // kind of the base vertex of each dart
    std::vector<int> label_of_dart;              // label of the base vertex (labelled kind)
    std::vector<char> edge_flagged;              // 1 iff the dart's edge is flagged
    std::vector<int> left_flag;                  // flag on the left of each flagged dart

    MobileVertexKind kind(int d) const { return kind_of_dart[d]; }
    bool flagged(int d) const { return edge_flagged[d] != 0; }
    int right_flag(int d) const { return left_flag[map.alpha[d]]; }

    // Label carried by the root edge: the label of its labelled extremity for
    // a plain root edge, the flag on its left for a flagged one.
    int root_label() const {
        int r = map.root_dart;
        return flagged(r) ? left_flag[r] : label_of_dart[map.alpha[r]];
    }

    bool operator==(const Mobile& o) const {
        return map == o.map && kind_of_dart == o.kind_of_dart &&
               label_of_dart == o.label_of_dart && edge_flagged == o.edge_flagged &&
               left_flag == o.left_flag;
    }
    bool operator<(const Mobile& o) const {
        if (!(map == o.map)) return map < o.map;
        if (kind_of_dart != o.kind_of_dart) return kind_of_dart < o.kind_of_dart;
        if (label_of_dart != o.label_of_dart) return label_of_dart < o.label_of_dart;
        if (edge_flagged != o.edge_flagged) return edge_flagged < o.edge_flagged;
        return left_flag < o.left_flag;
    }
};

namespace detail {

// Darts based at the same vertex as d, in clockwise order (inverse rotation),
// starting from d.
inline std::vector<int> clockwise_star(const CombinatorialMap& m, int d) {
    std::vector<int> inv(m.n_darts + 1, 0);
    for (int x = 1; x <= m.n_darts; ++x) inv[m.sigma[x]] = x;
    std::vector<int> star;
    int x = d;
    do { star.push_back(x); x = inv[x]; } while (x != d);
    return star;
}

}  // namespace detail

// Structural and admissibility checks. Throws std::invalid_argument with a
// description of the first violated rule.
inline void validate_mobile(const Mobile& t) {
    const CombinatorialMap& m = t.map;
    validate(m);
    if (m.pointed_vertex != 0)
        throw std::invalid_argument("mobile: must not carry a pointed vertex");
    auto check_size = [&](std::size_t s, const char* name) {
        if (s != static_cast<std::size_t>(m.n_darts + 1))
            throw std::invalid_argument(std::string("mobile: bad array size for ") + name);
    };
    check_size(t.kind_of_dart.size(), "kinds");
    check_size(t.label_of_dart.size(), "labels");
    check_size(t.edge_flagged.size(), "edge flags");
    check_size(t.left_flag.size(), "left flags");

    if (faces(m).size() != 1)
        throw std::invalid_argument("mobile: underlying map must have a single face");

    // Kinds and labels are per-vertex data.
    for (int d = 1; d <= m.n_darts; ++d) {
        int e = m.sigma[d];
        if (t.kind_of_dart[e] != t.kind_of_dart[d])
            throw std::invalid_argument("mobile: vertex kind not constant on a vertex");
        if (t.kind_of_dart[d] == MobileVertexKind::labelled &&
            t.label_of_dart[e] != t.label_of_dart[d])
            throw std::invalid_argument("mobile: label not constant on a vertex");
    }
    // Edge kinds: labelled-white plain, white-black flagged.
    for (int d = 1; d <= m.n_darts; ++d) {
        MobileVertexKind a = t.kind_of_dart[d], b = t.kind_of_dart[m.alpha[d]];
        bool lw = (a == MobileVertexKind::labelled && b == MobileVertexKind::white) ||
                  (a == MobileVertexKind::white && b == MobileVertexKind::labelled);
        bool wb = (a == MobileVertexKind::white && b == MobileVertexKind::black) ||
                  (a == MobileVertexKind::black && b == MobileVertexKind::white);
        if (!lw && !wb)
            throw std::invalid_argument("mobile: edge must join labelled-white or white-black");
        if (t.flagged(d) != wb || t.flagged(m.alpha[d]) != wb)
            throw std::invalid_argument("mobile: exactly the white-black edges carry flags");
    }

    if (t.kind(m.root_dart) != MobileVertexKind::white)
        throw std::invalid_argument("mobile: root dart must leave a white vertex");
    if (t.root_label() != 0)
        throw std::invalid_argument("mobile: root edge label must be 0");

    // Around a white vertex, read clockwise: a plain edge contributes the
    // label of its labelled end; a flagged edge contributes the pair
    // (left flag, right flag) of its white-side dart, with right >= left.
    // After an item whose last value is l, the next item starts at l-1 when
    // the item was a plain edge and at l when it was a flag pair.
    std::vector<char> done(m.n_darts + 1, 0);
    for (int d = 1; d <= m.n_darts; ++d) {
        if (done[d] || t.kind(d) != MobileVertexKind::white) continue;
        auto star = detail::clockwise_star(m, d);
        for (int x : star) done[x] = 1;
        int k = static_cast<int>(star.size());
        for (int i = 0; i < k; ++i) {
            int x = star[i], y = star[(i + 1) % k];
            int exit_x, drop;
            if (t.flagged(x)) {
                if (t.right_flag(x) < t.left_flag[x])
                    throw std::invalid_argument("mobile: white-side flag pair must not decrease");
                exit_x = t.right_flag(x);
                drop = 0;
            } else {
                exit_x = t.label_of_dart[m.alpha[x]];
                drop = 1;
            }
            int entry_y = t.flagged(y) ? t.left_flag[y] : t.label_of_dart[m.alpha[y]];
            if (entry_y != exit_x - drop)
                throw std::invalid_argument("mobile: clockwise rule violated at a white vertex");
        }
    }
    // Around a black vertex, read clockwise: each (flagged) edge contributes
    // the pair (left flag, right flag) of its black-side dart, with
    // right <= left, and the next pair starts at or above the previous
    // right flag.
    for (int d = 1; d <= m.n_darts; ++d) {
        if (done[d] || t.kind(d) != MobileVertexKind::black) continue;
        auto star = detail::clockwise_star(m, d);
        for (int x : star) done[x] = 1;
        int k = static_cast<int>(star.size());
        for (int i = 0; i < k; ++i) {
            int x = star[i], y = star[(i + 1) % k];
            if (t.right_flag(x) > t.left_flag[x])
                throw std::invalid_argument("mobile: black-side flag pair must not increase");
            if (t.left_flag[y] < t.right_flag(x))
                throw std::invalid_argument("mobile: clockwise rule violated at a black vertex");
        }
    }
}

inline bool is_valid_mobile(const Mobile& t) {
    try {
        validate_mobile(t);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// Degree conditions singling out the mobiles of m-hypermaps with white face
// degrees in m*D: every white vertex has degree m*k for some k in D, and
// around every black vertex the flag drops tau_e = left - right satisfy
// sum(tau_e + 1) = m.
inline bool is_hypermap_mobile(const Mobile& t, int m, const std::vector<int>& D) {
    std::vector<char> done(t.map.n_darts + 1, 0);
    for (int d = 1; d <= t.map.n_darts; ++d) {
        if (done[d] || t.kind(d) == MobileVertexKind::labelled) continue;
        auto star = detail::clockwise_star(t.map, d);
        for (int x : star) done[x] = 1;
        if (t.kind(d) == MobileVertexKind::white) {
            int deg = static_cast<int>(star.size());
            if (deg % m != 0) return false;
            if (std::find(D.begin(), D.end(), deg / m) == D.end()) return false;
        } else {
            int total = 0;
            for (int x : star) total += t.left_flag[x] - t.right_flag(x) + 1;
            if (total != m) return false;
        }
    }
    return true;
}

// The mobiles of m-constellations are those whose black vertices all have
// degree one, equivalently whose flagged edges all drop by exactly m-1.
inline bool is_constellation_mobile(const Mobile& t, int m) {
    for (int d = 1; d <= t.map.n_darts; ++d) {
        if (t.kind(d) == MobileVertexKind::black && t.left_flag[d] - t.right_flag(d) != m - 1)
            return false;
    }
    return true;
}

// Rooted canonical form: relabel darts by the breadth-first traversal of the
// underlying map and permute the decorations along.
inline Mobile canonical_mobile(const Mobile& t) {
    const CombinatorialMap& m = t.map;
    std::vector<int> newid(m.n_darts + 1, 0);
    std::vector<int> order{m.root_dart};
    newid[m.root_dart] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {m.alpha[d], m.sigma[d]}) {
            if (!newid[e]) {
                newid[e] = static_cast<int>(order.size()) + 1;
                order.push_back(e);
            }
        }
    }
    Mobile c;
    c.map.n_darts = m.n_darts;
    c.map.root_dart = 1;
    c.map.sigma.assign(m.n_darts + 1, 0);
    c.map.alpha.assign(m.n_darts + 1, 0);
    c.kind_of_dart.assign(m.n_darts + 1, MobileVertexKind::labelled);
    c.label_of_dart.assign(m.n_darts + 1, 0);
    c.edge_flagged.assign(m.n_darts + 1, 0);
    c.left_flag.assign(m.n_darts + 1, 0);
    for (int d = 1; d <= m.n_darts; ++d) {
        c.map.sigma[newid[d]] = newid[m.sigma[d]];
        c.map.alpha[newid[d]] = newid[m.alpha[d]];
        c.kind_of_dart[newid[d]] = t.kind_of_dart[d];
        c.label_of_dart[newid[d]] = t.label_of_dart[d];
        c.edge_flagged[newid[d]] = t.edge_flagged[d];
        c.left_flag[newid[d]] = t.left_flag[d];
    }
    return c;
}

// ---------------------------------------------------------------------------
// Text format: the four map lines, then "vtype" with one token per vertex in
// increasing vertex-id order (L<label>, W or B), then one "flags <edge-id>
// <left> <right>" line per flagged edge, where the edge id is the smaller of
// its two darts and left/right are taken relative to that dart.
// ---------------------------------------------------------------------------

inline void write_mobile(std::ostream& os, const Mobile& t) {
    write_map(os, t.map);
    os << "vtype";
    for (const auto& vc : vertices(t.map)) {
        int d = vc[0];
        switch (t.kind(d)) {
            case MobileVertexKind::labelled: os << " L" << t.label_of_dart[d]; break;
            case MobileVertexKind::white: os << " W"; break;
            case MobileVertexKind::black: os << " B"; break;
        }
    }
    os << "\n";
    for (int d = 1; d <= t.map.n_darts; ++d) {
        if (d < t.map.alpha[d] && t.flagged(d))
            os << "flags " << d << ' ' << t.left_flag[d] << ' ' << t.right_flag(d) << "\n";
    }
}

inline std::string to_string(const Mobile& t) {
    std::ostringstream os;
    write_mobile(os, t);
    return os.str();
}

inline Mobile read_mobile(std::istream& is) {
    Mobile t;
    CombinatorialMap& m = t.map;
    std::string kw;
    if (!(is >> kw) || kw != "darts") throw std::invalid_argument("mobile format: expected 'darts'");
    if (!(is >> m.n_darts) || m.n_darts <= 0)
        throw std::invalid_argument("mobile format: bad dart count");
    auto read_perm = [&](std::vector<int>& p, const char* name) {
        if (!(is >> kw) || kw != name)
            throw std::invalid_argument(std::string("mobile format: expected '") + name + "'");
        p.assign(m.n_darts + 1, 0);
        for (int d = 1; d <= m.n_darts; ++d)
            if (!(is >> p[d])) throw std::invalid_argument("mobile format: truncated permutation");
    };
    read_perm(m.sigma, "sigma");
    read_perm(m.alpha, "alpha");
    if (!(is >> kw) || kw != "root") throw std::invalid_argument("mobile format: expected 'root'");
    if (!(is >> m.root_dart)) throw std::invalid_argument("mobile format: bad root");
    validate(m);

    t.kind_of_dart.assign(m.n_darts + 1, MobileVertexKind::labelled);
    t.label_of_dart.assign(m.n_darts + 1, 0);
    t.edge_flagged.assign(m.n_darts + 1, 0);
    t.left_flag.assign(m.n_darts + 1, 0);
    if (!(is >> kw) || kw != "vtype") throw std::invalid_argument("mobile format: expected 'vtype'");
    for (const auto& vc : vertices(m)) {
        std::string tok;
        if (!(is >> tok)) throw std::invalid_argument("mobile format: truncated vtype line");
        MobileVertexKind kind;
        int label = 0;
        if (tok == "W") kind = MobileVertexKind::white;
        else if (tok == "B") kind = MobileVertexKind::black;
        else if (tok.size() > 1 && tok[0] == 'L') {
            kind = MobileVertexKind::labelled;
            label = std::stoi(tok.substr(1));
        } else throw std::invalid_argument("mobile format: bad vtype token '" + tok + "'");
        for (int d : vc) {
            t.kind_of_dart[d] = kind;
            t.label_of_dart[d] = label;
        }
    }
    while (is >> kw) {
        if (kw != "flags") throw std::invalid_argument("mobile format: unexpected trailing data");
        int d, left, right;
        if (!(is >> d >> left >> right)) throw std::invalid_argument("mobile format: bad flags line");
        if (d < 1 || d > m.n_darts || d > m.alpha[d])
            throw std::invalid_argument("mobile format: flags must name the smaller dart");
        t.edge_flagged[d] = t.edge_flagged[m.alpha[d]] = 1;
        t.left_flag[d] = left;
        t.left_flag[m.alpha[d]] = right;
    }
    validate_mobile(t);
    return t;
}

}  // namespace surfmap
