// Schemes: the finite skeletons of one-face maps of positive genus. A scheme
// is a rooted one-face map with all vertex degrees >= 3; every one-face map
// reduces to its scheme by pruning degree-1 vertices and contracting
// degree-2 paths. Typings are Z/mZ edge labellings obeying a Kirchhoff law;
// dominant pairs are cubic schemes with an ordering of their vertices, and
// carry the rational constants entering the asymptotic counting formulas.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "map.hpp"
#include "unicellular.hpp"

namespace surfmap {

// A scheme with its fixed edge numbering: edge i joins the darts
// edge_dart[i] and alpha(edge_dart[i]); the canonical orientation points
// away from edge_dart[i] (the smaller of the two darts).
struct Scheme {
    CombinatorialMap map;
    std::vector<int> edge_dart;     // edge index -> canonical dart
    std::vector<int> edge_of_dart;  // dart -> edge index
    int n_edges() const { return map.n_darts / 2; }
};

inline Scheme make_scheme(const CombinatorialMap& m) {
    validate(m);
    if (faces(m).size() != 1)
        throw std::invalid_argument("scheme must have exactly one face");
    for (const auto& vc : vertices(m))
        if (vc.size() < 3) throw std::invalid_argument("scheme must have min degree 3");
    Scheme s;
    s.map = m;
    s.edge_of_dart.assign(m.n_darts + 1, -1);
    for (int d = 1; d <= m.n_darts; ++d) {
        if (d < m.alpha[d]) {
            s.edge_of_dart[d] = s.edge_of_dart[m.alpha[d]] = static_cast<int>(s.edge_dart.size());
            s.edge_dart.push_back(d);
        }
    }
    return s;
}

// Degree constraint of one-face maps with min degree 3:
// sum_i (i-2)/2 * n_i = 2g - 1, where n_i counts degree-i vertices.
inline bool scheme_degree_constraint(const CombinatorialMap& m, int g) {
    int twice_sum = 0;
    for (const auto& vc : vertices(m)) twice_sum += static_cast<int>(vc.size()) - 2;
    return twice_sum == 2 * (2 * g - 1);
}

// All schemes of genus g, as canonical rooted maps. A scheme has between 2g
// and 6g-3 edges (min degree 3 bounds the vertex count), so we filter the
// one-face map generator over that range.
inline std::vector<Scheme> enumerate_schemes(int g) {
    std::vector<Scheme> out;
    if (g <= 0) return out;
    std::set<CombinatorialMap> seen;
    for (int e = 2 * g; e <= 6 * g - 3; ++e) {
        for_each_unicellular(e, [&](const CombinatorialMap& m) {
            for (const auto& vc : vertices(m))
                if (vc.size() < 3) return;
            if (genus(m) != g) return;
            CombinatorialMap c = canonical_form(m);
            if (seen.insert(c).second) out.push_back(make_scheme(c));
        });
    }
    return out;
}

// ----- typings ------------------------------------------------------------

using Typing = std::vector<int>;  // per edge index, values in [0, m)

// True iff the typing satisfies the Kirchhoff law
//   sum_outgoing tau - sum_ingoing tau = 0 (mod m)  at every vertex,
// with the canonical orientation (outgoing at the base of the canonical dart).
inline bool typing_valid(const Scheme& s, const Typing& tau, int m) {
    auto vidx = vertex_index_of_darts(s.map);
    int nv = static_cast<int>(vertices(s.map).size());
    std::vector<int> bal(nv, 0);
    for (int i = 0; i < s.n_edges(); ++i) {
        int d = s.edge_dart[i];
        bal[vidx[d]] += tau[i];
        bal[vidx[s.map.alpha[d]]] -= tau[i];
    }
    for (int b : bal)
        if ((b % m + m) % m != 0) return false;
    return true;
}

// All typings of a scheme: the cycle space of the underlying graph over
// Z/mZ. Free values live on the complement of a spanning tree (dimension 2g)
// and the tree edges are solved bottom-up from the leaves.
inline std::vector<Typing> enumerate_typings(const Scheme& s, int m) {
    auto vidx = vertex_index_of_darts(s.map);
    int nv = static_cast<int>(vertices(s.map).size());
    int k = s.n_edges();
    // BFS spanning tree on the vertex graph (self-loops can never be chosen)
    std::vector<int> parent_edge(nv, -1), order;
    std::vector<char> vis(nv, 0);
    vis[0] = 1;
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int i = 0; i < k; ++i) {
            int a = vidx[s.edge_dart[i]], b = vidx[s.map.alpha[s.edge_dart[i]]];
            int w = (a == v) ? b : (b == v) ? a : -1;
            if (w < 0 || vis[w]) continue;
            vis[w] = 1;
            parent_edge[w] = i;
            order.push_back(w);
        }
    }
    std::vector<char> in_tree(k, 0);
    for (int v = 1; v < nv; ++v) in_tree[parent_edge[v]] = 1;
    std::vector<int> free_edges;
    for (int i = 0; i < k; ++i)
        if (!in_tree[i]) free_edges.push_back(i);

    std::vector<Typing> result;
    Typing tau(k, 0);
    std::vector<int> choice(free_edges.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_edges.size(); ++i) tau[free_edges[i]] = choice[i];
        // solve tree edges from the deepest vertices upward
        for (int h = static_cast<int>(order.size()) - 1; h >= 1; --h) {
            int v = order[h];
            int pe = parent_edge[v];
            // balance at v over all non-parent edges
            long long bal = 0;
            for (int i = 0; i < k; ++i) {
                if (i == pe) continue;
                int a = vidx[s.edge_dart[i]], b = vidx[s.map.alpha[s.edge_dart[i]]];
                if (a == v) bal += tau[i];
                if (b == v) bal -= tau[i];
            }
            int a = vidx[s.edge_dart[pe]];
            // outgoing at v: +tau(pe) + bal = 0;  ingoing: -tau(pe) + bal = 0
            int t = (a == v) ? static_cast<int>(((-bal) % m + m) % m)
                             : static_cast<int>((bal % m + m) % m);
            tau[pe] = t;
        }
        if (!typing_valid(s, tau, m)) throw std::runtime_error("typing solver failed");
        result.push_back(tau);
        // next assignment of the free edges
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == m) choice[pos++] = 0;
        if (pos == choice.size()) break;
        if (choice.empty()) break;
    }
    return result;
}

// ----- reduction of a one-face map to its scheme ----------------------------

struct CoreScheme {
    Scheme scheme;
    std::vector<int> to_map;              // scheme dart -> original dart at a node
    std::vector<std::vector<int>> path;   // per scheme dart: original darts along the
                                          // path, one per traversed vertex, starting
                                          // at the node and following the orientation
    std::vector<char> in_core;            // per original dart
};

// Reduce a one-face map of positive genus to its scheme: prune degree-1
// vertices recursively (transferring the root clockwise past deleted
// subtrees), then contract the maximal degree-2 paths of the core.
inline CoreScheme scheme_of(const CombinatorialMap& t) {
    validate(t);
    if (faces(t).size() != 1)
        throw std::invalid_argument("scheme_of: input must have one face");
    if (genus(t) == 0)
        throw std::invalid_argument("scheme_of: genus-0 input has an empty core");
    int n = t.n_darts;
    auto vidx = vertex_index_of_darts(t);
    int nv = 0;
    for (int d = 1; d <= n; ++d) nv = std::max(nv, vidx[d] + 1);
    std::vector<int> deg(nv, 0);
    std::vector<char> alive(n + 1, 1);
    for (int d = 1; d <= n; ++d) ++deg[vidx[d]];
    std::vector<int> sigma_inv(n + 1);
    for (int d = 1; d <= n; ++d) sigma_inv[t.sigma[d]] = d;

    int root = t.root_dart;
    // prune leaves
    std::vector<int> queue;
    for (int v = 0; v < nv; ++v)
        if (deg[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (deg[v] != 1) continue;
        int du = 0;
        for (int d = 1; d <= n; ++d)
            if (alive[d] && vidx[d] == v) { du = d; break; }
        int dv = t.alpha[du];
        if (root == du || root == dv) {
            // next live dart clockwise around the surviving endpoint
            int x = sigma_inv[dv];
            while (!alive[x] || x == dv) x = sigma_inv[x];
            root = x;
        }
        alive[du] = alive[dv] = 0;
        deg[v] = 0;
        int w = vidx[dv];
        if (--deg[w] == 1) queue.push_back(w);
    }
    // sigma restricted to the core
    auto next_alive = [&](int d) {
        int x = t.sigma[d];
        while (!alive[x]) x = t.sigma[x];
        return x;
    };
    // nodes = core vertices of degree >= 3
    std::vector<char> is_node(nv, 0);
    bool any_node = false;
    for (int v = 0; v < nv; ++v)
        if (deg[v] >= 3) { is_node[v] = 1; any_node = true; }
    if (!any_node) throw std::runtime_error("scheme_of: core has no node");

    // collect scheme darts: live darts based at nodes
    std::vector<int> sdarts;
    for (int d = 1; d <= n; ++d)
        if (alive[d] && is_node[vidx[d]]) sdarts.push_back(d);
    std::vector<int> newid(n + 1, 0);
    for (std::size_t i = 0; i < sdarts.size(); ++i) newid[sdarts[i]] = static_cast<int>(i) + 1;

    CoreScheme cs;
    cs.in_core = alive;
    CombinatorialMap sm;
    sm.n_darts = static_cast<int>(sdarts.size());
    sm.sigma.assign(sm.n_darts + 1, 0);
    sm.alpha.assign(sm.n_darts + 1, 0);
    cs.to_map.assign(sm.n_darts + 1, 0);
    cs.path.assign(sm.n_darts + 1, {});
    for (int d : sdarts) {
        cs.to_map[newid[d]] = d;
        sm.sigma[newid[d]] = newid[next_alive(d)];
        // follow the degree-2 path to the next node
        std::vector<int> pth{d};
        int x = d;
        while (true) {
            int y = t.alpha[x];
            if (is_node[vidx[y]]) {
                sm.alpha[newid[d]] = newid[y];
                break;
            }
            x = next_alive(y);  // the other live dart at the degree-2 vertex
            pth.push_back(x);
        }
        cs.path[newid[d]] = std::move(pth);
    }
    // transfer the root along its path back to the node that starts it
    int r = root;
    while (!is_node[vidx[r]]) r = t.alpha[next_alive(r)];
    sm.root_dart = newid[r];
    validate(sm);
    cs.scheme = make_scheme(sm);
    return cs;
}

// ----- vertex classification (cubic typed schemes) --------------------------

enum class SchemeVertexType { t1, t2, t31, t32 };

// For a cubic scheme with a typing, classify every vertex by its special
// half-edges: with tau~ = tau(e) for an ingoing special edge and m - tau(e)
// for an outgoing one, a vertex sees 0 special half-edges (type 1), two with
// tau~ sum m (type 2), or three with tau~ sum m (type 3.1) or 2m (type 3.2).
inline std::vector<SchemeVertexType> classify_vertices(const Scheme& s, const Typing& tau,
                                                       int m) {
    auto vcs = vertices(s.map);
    auto vidx = vertex_index_of_darts(s.map);
    std::vector<SchemeVertexType> out;
    for (const auto& vc : vcs) {
        if (vc.size() != 3)
            throw std::invalid_argument("classify_vertices: scheme is not cubic");
        int count = 0, sum = 0;
        for (int d : vc) {
            int e = s.edge_of_dart[d];
            if (tau[e] == 0) continue;
            ++count;
            bool outgoing = (d == s.edge_dart[e]);
            sum += outgoing ? m - tau[e] : tau[e];
        }
        SchemeVertexType ty;
        if (count == 0) ty = SchemeVertexType::t1;
        else if (count == 2 && sum == m) ty = SchemeVertexType::t2;
        else if (count == 3 && sum == m) ty = SchemeVertexType::t31;
        else if (count == 3 && sum == 2 * m) ty = SchemeVertexType::t32;
        else throw std::runtime_error("classify_vertices: impossible special half-edge pattern");
        out.push_back(ty);
    }
    return out;
}

// ----- dominant pairs -------------------------------------------------------

struct DominantPair {
    Scheme scheme;                   // cubic, 6g-3 edges, 4g-2 vertices
    std::vector<int> lambda;         // per vertex index: bijection onto [0, 4g-3]
    boost::multiprecision::cpp_rational c;  // c_{s,lambda}
};

// All dominant pairs of genus g with their exact constants
//   c_{s,lambda} = 1 / prod_{j=1}^{M} #{edges e : lambda(e-) < j <= lambda(e+)}.
inline std::vector<DominantPair> dominant_pairs(int g) {
    std::vector<DominantPair> out;
    for (const Scheme& s : enumerate_schemes(g)) {
        auto vcs = vertices(s.map);
        bool cubic = s.n_edges() == 6 * g - 3;
        for (const auto& vc : vcs) cubic &= vc.size() == 3;
        if (!cubic) continue;
        auto vidx = vertex_index_of_darts(s.map);
        int nv = static_cast<int>(vcs.size());
        std::vector<int> lam(nv);
        std::iota(lam.begin(), lam.end(), 0);
        do {
            boost::multiprecision::cpp_rational c = 1;
            int M = nv - 1;
            for (int j = 1; j <= M; ++j) {
                int cut = 0;
                for (int i = 0; i < s.n_edges(); ++i) {
                    int a = lam[vidx[s.edge_dart[i]]];
                    int b = lam[vidx[s.map.alpha[s.edge_dart[i]]]];
                    if (std::min(a, b) < j && j <= std::max(a, b)) ++cut;
                }
                if (cut == 0) throw std::runtime_error("dominant pair: empty level cut");
                c /= cut;
            }
            out.push_back({s, lam, c});
        } while (std::next_permutation(lam.begin(), lam.end()));
    }
    return out;
}

// S_g = sum over dominant pairs of c_{s,lambda}.
inline boost::multiprecision::cpp_rational scheme_constant_sum(int g) {
    boost::multiprecision::cpp_rational s = 0;
    for (const auto& p : dominant_pairs(g)) s += p.c;
    return s;
}

}  // namespace surfmap
