// Decomposition of a genus-g mobile into its full scheme (scheme, typing,
// nodal stars, correcting stars, label order) together with the concrete
// residual data (superchain contents and attached planar parts), and the
// inverse reconstruction. The decomposition cuts the mobile along its scheme:
// flagged edges adjacent to nodal stars are cut in half (each half keeps its
// flag), and shared labelled vertices are split into a "socket" side that
// owns the rotation and "plug" darts contributed by neighbouring pieces.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "mobile.hpp"
#include "schemes.hpp"

namespace surfmap {

// A standalone piece of a mobile. Labels and flags are stored relative to a
// per-fragment reference; absolute values are recovered at reconstruction
// from the label order of the full scheme.
struct MobileFragment {
    int n_darts = 0;
    // vertex rotations; entries are darts (>= 1) or sockets (-(s+1))
    std::vector<std::vector<int>> cycles;
    std::vector<int> cycle_label;       // per cycle: relative label of its vertex
    std::vector<int> alpha;             // size n_darts+1; 0 marks a stub dart
    std::vector<MobileVertexKind> kind; // base-vertex kind per dart
    std::vector<int> label;             // relative base-vertex label per dart
    std::vector<char> flagged;
    std::vector<int> lflag;             // relative left flag per flagged dart
    std::vector<int> stub_other;        // per stub dart: relative left flag of the
                                        // missing half of the cut edge
    std::vector<int> plugs;             // plug darts (no rotation of their own)
    std::vector<int> plug_label;        // relative merge-vertex label per plug
    int n_sockets = 0;

    // how this piece connects: one port per incident scheme half-edge
    // (vertex pieces) or two ports, in and out (edge pieces)
    enum PortType { stub = 0, socket = 1, plug = 2, none = 3 };
    struct Port {
        int type = none;
        int index = 0;  // stub: dart; socket: socket id; plug: plug id
        auto tie() const { return std::tie(type, index); }
        bool operator==(const Port& o) const { return tie() == o.tie(); }
        bool operator<(const Port& o) const { return tie() < o.tie(); }
    };
    std::vector<Port> ports;

    auto tie() const {
        return std::tie(n_darts, cycles, cycle_label, alpha, kind, label, flagged, lflag,
                        stub_other, plugs, plug_label, n_sockets, ports);
    }
    bool operator==(const MobileFragment& o) const { return tie() == o.tie(); }
    bool operator<(const MobileFragment& o) const { return tie() < o.tie(); }
};

struct FullSchemeData {
    CombinatorialMap scheme;      // canonical rooted scheme (root = chosen secondary root)
    std::vector<int> typing;      // per edge index of make_scheme(scheme)
    std::vector<int> lambda;      // per scheme vertex index: normalized label rank
    std::vector<int> delta;       // positive gaps between consecutive label values
    std::vector<char> a1, a2;     // per edge: leading black / trailing white correcting star
    std::vector<MobileFragment> vfrag;  // per scheme vertex
    std::vector<MobileFragment> efrag;  // per scheme edge
    int root_owner_kind = 0;      // 0: vertex fragment, 1: edge fragment
    int root_owner = 0;
    int root_dart = 0;            // local dart id within the owner fragment

    auto tie() const {
        return std::tie(scheme, typing, lambda, delta, a1, a2, vfrag, efrag,
                        root_owner_kind, root_owner, root_dart);
    }
    bool operator==(const FullSchemeData& o) const { return tie() == o.tie(); }
    bool operator<(const FullSchemeData& o) const { return tie() < o.tie(); }
};

namespace detail {

// Flag drop of a flagged edge: left minus right on its black-side dart.
// The split-edge type of the edge is drop + 1, on both of its sides.
inline int edge_drop(const Mobile& t, int d) {
    int b = (t.kind(d) == MobileVertexKind::black) ? d : t.map.alpha[d];
    return t.left_flag[b] - t.right_flag(b);
}

inline bool edge_special(const Mobile& t, int d, int m) {
    return t.flagged(d) && edge_drop(t, d) != m - 1;
}

// Incremental fragment builder copying decorations from the host mobile.
struct FragBuilder {
    const Mobile& t;
    MobileFragment f;
    std::map<int, int> local;  // mobile dart -> fragment dart

    explicit FragBuilder(const Mobile& tt) : t(tt) {
        f.alpha.push_back(0);
        f.kind.push_back(MobileVertexKind::labelled);
        f.label.push_back(0);
        f.flagged.push_back(0);
        f.lflag.push_back(0);
        f.stub_other.push_back(0);
    }
    int add(int md) {
        auto [it, fresh] = local.try_emplace(md, f.n_darts + 1);
        if (!fresh) return it->second;
        ++f.n_darts;
        f.alpha.push_back(0);
        f.kind.push_back(t.kind(md));
        f.label.push_back(t.label_of_dart[md]);
        f.flagged.push_back(t.edge_flagged[md]);
        f.lflag.push_back(t.flagged(md) ? t.left_flag[md] : 0);
        f.stub_other.push_back(0);
        return it->second;
    }
    bool has(int md) const { return local.count(md) != 0; }

    // Collect every dart reachable from `start` without visiting darts in
    // `forbidden` (moves: sigma and alpha).
    void collect(int start, const std::set<int>& forbidden) {
        if (forbidden.count(start)) return;
        std::vector<int> stack{start};
        std::set<int> seen{start};
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            add(d);
            for (int e : {t.map.sigma[d], t.map.alpha[d]})
                if (!seen.count(e) && !forbidden.count(e)) {
                    seen.insert(e);
                    stack.push_back(e);
                }
        }
    }

    // Close the fragment: resolve internal alphas (external flagged halves
    // become stubs), emit rotation cycles for every complete vertex, and
    // shift all labels and flags by -ref. Darts listed in `no_cycle` (plugs)
    // and vertices listed with sockets are handled by the caller.
    void finish(int ref, const std::set<int>& plug_darts,
                const std::map<int, int>& socket_of_foreign_dart) {
        for (auto [md, ld] : local) {
            int ma = t.map.alpha[md];
            if (has(ma)) {
                f.alpha[ld] = local.at(ma);
            } else {
                if (!t.flagged(md))
                    throw std::runtime_error("fragment: plain edge cut in half");
                f.alpha[ld] = 0;
                f.stub_other[ld] = t.left_flag[ma];
            }
        }
        // rotation cycles per mobile vertex having at least one owned,
        // non-plug dart; insert sockets where foreign darts sit
        std::set<int> done;
        for (auto [md, ld] : local) {
            if (plug_darts.count(md) || done.count(md)) continue;
            // walk the full mobile rotation of this vertex
            std::vector<int> cyc;
            int lab = t.label_of_dart[md];
            int x = md;
            bool owned_seen = false;
            do {
                if (socket_of_foreign_dart.count(x)) {
                    cyc.push_back(-(socket_of_foreign_dart.at(x) + 1));
                } else if (has(x) && !plug_darts.count(x)) {
                    cyc.push_back(local.at(x));
                    done.insert(x);
                    owned_seen = true;
                } else {
                    throw std::runtime_error("fragment: unowned dart in a rotation");
                }
                x = t.map.sigma[x];
            } while (x != md);
            if (!owned_seen) throw std::runtime_error("fragment: empty rotation");
            f.cycles.push_back(std::move(cyc));
            f.cycle_label.push_back(lab - ref);
        }
        for (int d = 1; d <= f.n_darts; ++d) {
            f.label[d] -= ref;
            if (f.flagged[d]) {
                f.lflag[d] -= ref;
                if (f.alpha[d] == 0) f.stub_other[d] -= ref;
            }
        }
    }
};

}  // namespace detail

// Decompose a mobile of positive genus into its full scheme plus residual
// fragments. `secondary_root` is a dart of scheme_of(t.map) used to (re)root
// the scheme before canonicalization; 0 keeps the primary root. Every choice
// of secondary root yields a decomposition that reconstructs to the same
// mobile (in 2k ways for a scheme with k edges).
inline FullSchemeData decompose_mobile(const Mobile& t, int m, int secondary_root = 0) {
    using detail::edge_drop;
    using detail::edge_special;
    const CombinatorialMap& tm = t.map;
    CoreScheme cs = scheme_of(tm);
    CombinatorialMap sm = cs.scheme.map;
    if (secondary_root != 0) sm.root_dart = secondary_root;

    // canonical renumbering of the (re)rooted scheme, keeping the dart map
    std::vector<int> old2new(sm.n_darts + 1, 0), new2old{0};
    {
        std::vector<int> order{sm.root_dart};
        old2new[sm.root_dart] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int e : {sm.alpha[order[i]], sm.sigma[order[i]]})
                if (!old2new[e]) {
                    old2new[e] = static_cast<int>(order.size()) + 1;
                    order.push_back(e);
                }
        new2old.insert(new2old.end(), order.begin(), order.end());
    }
    CombinatorialMap can;
    can.n_darts = sm.n_darts;
    can.sigma.assign(can.n_darts + 1, 0);
    can.alpha.assign(can.n_darts + 1, 0);
    can.root_dart = 1;
    for (int d = 1; d <= sm.n_darts; ++d) {
        can.sigma[old2new[d]] = old2new[sm.sigma[d]];
        can.alpha[old2new[d]] = old2new[sm.alpha[d]];
    }
    Scheme S = make_scheme(can);
    int k = S.n_edges();
    auto vidx_t = vertex_index_of_darts(tm);
    auto [vcs, vidx_s] = detail::cycles_of(can.sigma, can.n_darts);
    int nv = static_cast<int>(vcs.size());

    auto path_of = [&](int can_dart) -> const std::vector<int>& {
        return cs.path[new2old[can_dart]];
    };
    auto mobile_end_dart = [&](int can_dart) {
        // last mobile dart of the path of can_dart; alpha of it is at the far node
        return path_of(can_dart).back();
    };

    FullSchemeData out;
    out.scheme = can;
    out.typing.assign(k, 0);
    out.a1.assign(k, 0);
    out.a2.assign(k, 0);

    // ----- types of the superchains -----
    for (int i = 0; i < k; ++i) {
        const auto& P = path_of(S.edge_dart[i]);
        bool any_special = false, all_special = true;
        for (int d : P) {
            bool sp = edge_special(t, d, m);
            any_special |= sp;
            all_special &= sp;
        }
        if (!any_special) {
            out.typing[i] = 0;
            continue;
        }
        if (!all_special)
            throw std::runtime_error("decompose: special and standard edges on one path");
        int last = P.back();
        int far = tm.alpha[last];
        int type_last = edge_drop(t, last) + 1;
        if (t.kind(far) == MobileVertexKind::labelled)
            throw std::runtime_error("decompose: special path ends at a labelled node");
        out.typing[i] =
            (t.kind(far) == MobileVertexKind::white) ? type_last : m - type_last;
        if (P.size() >= 2) {
            out.a1[i] = t.kind(tm.alpha[P[0]]) == MobileVertexKind::black;
            out.a2[i] = t.kind(P.back()) == MobileVertexKind::white;
        }
    }

    // ----- canonical elements and the label order -----
    std::vector<int> lv(nv, 0);
    std::vector<int> canon_mobile_dart(nv, 0);  // labelled corner dart or flagged dart
    std::vector<char> v_labelled(nv, 0);
    for (int v = 0; v < nv; ++v) {
        int V = vidx_t[cs.to_map[new2old[vcs[v][0]]]];
        // collect the mobile rotation at the node's centre
        int d0 = cs.to_map[new2old[vcs[v][0]]];
        if (t.kind(d0) == MobileVertexKind::labelled) {
            v_labelled[v] = 1;
            lv[v] = t.label_of_dart[d0];
            canon_mobile_dart[v] = 0;
            continue;
        }
        int best_corner = 0, best_flag = 0;
        int x = d0;
        do {
            if (t.flagged(x)) {
                if (!best_flag || x < best_flag) best_flag = x;
            } else {
                if (!best_corner || x < best_corner) best_corner = x;
            }
            x = tm.sigma[x];
        } while (x != d0);
        if (best_corner) {
            canon_mobile_dart[v] = best_corner;
            lv[v] = t.label_of_dart[tm.alpha[best_corner]];
        } else {
            canon_mobile_dart[v] = best_flag;
            lv[v] = t.left_flag[best_flag];
        }
        (void)V;
    }
    {
        std::vector<int> vals(lv.begin(), lv.end());
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        out.lambda.assign(nv, 0);
        for (int v = 0; v < nv; ++v)
            out.lambda[v] = static_cast<int>(
                std::lower_bound(vals.begin(), vals.end(), lv[v]) - vals.begin());
        for (std::size_t i = 1; i < vals.size(); ++i)
            out.delta.push_back(vals[i] - vals[i - 1]);
    }

    // ----- fragments -----
    // ownership of the root dart is resolved after all fragments are built
    std::vector<std::map<int, int>> owner_local_v(nv), owner_local_e(k);

    // vertex fragments
    out.vfrag.resize(nv);
    for (int v = 0; v < nv; ++v) {
        detail::FragBuilder fb(t);
        std::set<int> plug_darts;
        std::map<int, int> socket_of;
        std::vector<MobileFragment::Port> ports;
        if (v_labelled[v]) {
            // ring node: owns its attachments; every incident path plugs in
            int V_dart = cs.to_map[new2old[vcs[v][0]]];
            // scheme darts at v in rotation order starting at the minimum
            for (int sd : vcs[v]) {
                int x = cs.to_map[new2old[sd]];  // mobile path dart of sd
                socket_of[x] = fb.f.n_sockets;
                ports.push_back({MobileFragment::socket, fb.f.n_sockets});
                ++fb.f.n_sockets;
            }
            // attachments: non-path darts at the node vertex and their trees
            std::set<int> at_node;
            int x = V_dart;
            do { at_node.insert(x); x = tm.sigma[x]; } while (x != V_dart);
            for (int d : at_node) {
                if (socket_of.count(d)) continue;
                fb.add(d);
                fb.collect(tm.alpha[d], at_node);
            }
            fb.finish(lv[v], plug_darts, socket_of);
            if (fb.f.cycles.empty()) {
                // node with no attachments at all: emit the bare ring
                std::vector<int> ring;
                int s = 0;
                int y = V_dart;
                do {
                    ring.push_back(-(socket_of.at(y) + 1));
                    y = tm.sigma[y];
                    ++s;
                } while (y != V_dart);
                fb.f.cycles.push_back(std::move(ring));
                fb.f.cycle_label.push_back(0);
            }
        } else {
            // nodal star: owns the full rotation at the centre
            int V_dart = cs.to_map[new2old[vcs[v][0]]];
            std::set<int> at_node;
            int x = V_dart;
            do { at_node.insert(x); x = tm.sigma[x]; } while (x != V_dart);
            std::set<int> path_darts;
            for (int sd : vcs[v]) path_darts.insert(cs.to_map[new2old[sd]]);
            for (int d : at_node) {
                fb.add(d);
                if (path_darts.count(d)) continue;
                if (t.flagged(d)) {
                    // standard split edge: keep the univalent black end
                    fb.collect(tm.alpha[d], at_node);
                } else {
                    // plain edge into an attached planar part
                    fb.collect(tm.alpha[d], at_node);
                }
            }
            // ports in scheme-rotation order
            for (int sd : vcs[v]) {
                int x = cs.to_map[new2old[sd]];
                int e = S.edge_of_dart[sd];
                if (out.typing[e] != 0) {
                    // cut the flagged edge: x stays as a stub
                    ports.push_back({MobileFragment::stub, fb.local.at(x)});
                } else {
                    // keep the whole plain edge; the item dart is the plug
                    int item = tm.alpha[x];
                    fb.add(item);
                    plug_darts.insert(item);
                    fb.f.plugs.push_back(fb.local.at(item));
                    fb.f.plug_label.push_back(t.label_of_dart[item] - lv[v]);
                    ports.push_back(
                        {MobileFragment::plug, static_cast<int>(fb.f.plugs.size()) - 1});
                }
            }
            fb.finish(lv[v], plug_darts, socket_of);
        }
        fb.f.ports = std::move(ports);
        out.vfrag[v] = std::move(fb.f);
        owner_local_v[v] = std::move(fb.local);
    }

    // edge fragments
    out.efrag.resize(k);
    for (int i = 0; i < k; ++i) {
        int c = S.edge_dart[i];
        const auto& P = path_of(c);
        int u = vidx_s[c], v = vidx_s[can.alpha[c]];
        int L = static_cast<int>(P.size());
        int p0 = P.front(), plast = P.back();
        detail::FragBuilder fb(t);
        std::set<int> plug_darts;
        std::map<int, int> socket_of;
        std::vector<MobileFragment::Port> ports(2);
        int ref = 0;
        if (out.typing[i] != 0) {
            if (L == 1) {
                ports[0] = ports[1] = {MobileFragment::none, 0};
            } else {
                // interior of the path, cut at the two end flagged edges
                std::set<int> forbid{p0, tm.alpha[plast]};
                fb.collect(tm.alpha[p0], forbid);
                ports[0] = {MobileFragment::stub, fb.local.at(tm.alpha[p0])};
                ports[1] = {MobileFragment::stub, fb.local.at(plast)};
                ref = t.left_flag[tm.alpha[p0]];
            }
        } else {
            bool u_lab = v_labelled[u], v_lab = v_labelled[v];
            // foreign darts: everything at the node centres, plus the item
            // darts owned by unlabelled nodal stars
            std::set<int> forbid;
            for (int V0 : {cs.to_map[new2old[vcs[u][0]]], cs.to_map[new2old[vcs[v][0]]]}) {
                int x = V0;
                do { forbid.insert(x); x = tm.sigma[x]; } while (x != V0);
            }
            if (!u_lab) forbid.insert(tm.alpha[p0]);
            if (!v_lab) forbid.insert(plast);
            if (L == 1) {
                // single plain edge owned by the unlabelled end's nodal star
                if (u_lab == v_lab)
                    throw std::runtime_error("decompose: plain path edge between equal ends");
                ports[0] = ports[1] = {MobileFragment::none, 0};
            } else {
                // sockets at the shared end vertices
                if (!u_lab) socket_of[tm.alpha[p0]] = fb.f.n_sockets++;
                if (!v_lab) socket_of[plast] = fb.f.n_sockets++;
                // collect the rotation of every interior path vertex and all
                // subtrees hanging from it; foreign darts stay out
                for (int j = 1; j < L; ++j) {
                    int x = P[j];
                    do {
                        if (!forbid.count(x)) {
                            fb.add(x);
                            fb.collect(tm.alpha[x], forbid);
                        }
                        x = tm.sigma[x];
                    } while (x != P[j]);
                }
                if (u_lab) {
                    fb.add(p0);
                    plug_darts.insert(p0);
                    fb.f.plugs.push_back(fb.local.at(p0));
                    ref = t.label_of_dart[p0];
                    fb.f.plug_label.push_back(0);
                    ports[0] = {MobileFragment::plug,
                                static_cast<int>(fb.f.plugs.size()) - 1};
                } else {
                    ref = t.label_of_dart[tm.alpha[p0]];
                    ports[0] = {MobileFragment::socket, socket_of.at(tm.alpha[p0])};
                }
                if (v_lab) {
                    int pl = tm.alpha[plast];
                    fb.add(pl);
                    plug_darts.insert(pl);
                    fb.f.plugs.push_back(fb.local.at(pl));
                    fb.f.plug_label.push_back(t.label_of_dart[pl] - ref);
                    ports[1] = {MobileFragment::plug,
                                static_cast<int>(fb.f.plugs.size()) - 1};
                } else {
                    ports[1] = {MobileFragment::socket, socket_of.at(plast)};
                }
            }
        }
        if (L > 1) fb.finish(ref, plug_darts, socket_of);
        // a shared labelled vertex whose every dart is foreign (a bare glue
        // vertex between two nodal stars) still needs its rotation emitted
        for (auto [anchor, sid] : socket_of) {
            bool seen = false;
            for (const auto& cy : fb.f.cycles)
                for (int e : cy) seen |= (e == -(sid + 1));
            if (seen) continue;
            std::vector<int> cyc;
            int x = anchor;
            do {
                cyc.push_back(-(socket_of.at(x) + 1));
                x = tm.sigma[x];
            } while (x != anchor);
            fb.f.cycles.push_back(std::move(cyc));
            fb.f.cycle_label.push_back(t.label_of_dart[anchor] - ref);
        }
        fb.f.ports = std::move(ports);
        out.efrag[i] = std::move(fb.f);
        owner_local_e[i] = std::move(fb.local);
    }

    // ----- locate the root dart -----
    {
        int r = tm.root_dart;
        bool found = false;
        for (int v = 0; v < nv && !found; ++v)
            if (owner_local_v[v].count(r)) {
                out.root_owner_kind = 0;
                out.root_owner = v;
                out.root_dart = owner_local_v[v].at(r);
                found = true;
            }
        for (int i = 0; i < k && !found; ++i)
            if (owner_local_e[i].count(r)) {
                out.root_owner_kind = 1;
                out.root_owner = i;
                out.root_dart = owner_local_e[i].at(r);
                found = true;
            }
        if (!found) throw std::runtime_error("decompose: root dart not owned");
    }
    return out;
}

// Rebuild the mobile encoded by a full scheme with its residual fragments.
inline Mobile reconstruct_mobile(const FullSchemeData& f) {
    Scheme S = make_scheme(f.scheme);
    int k = S.n_edges();
    auto [vcs, vidx_s] = detail::cycles_of(f.scheme.sigma, f.scheme.n_darts);
    int nv = static_cast<int>(vcs.size());

    // absolute label values of the scheme vertices from lambda and delta
    std::vector<long long> rankval(f.delta.size() + 1, 0);
    for (std::size_t i = 0; i < f.delta.size(); ++i)
        rankval[i + 1] = rankval[i] + f.delta[i];
    std::vector<long long> lv(nv);
    for (int v = 0; v < nv; ++v) lv[v] = rankval[f.lambda[v]];

    // global dart numbering
    std::vector<int> voff(nv + 1, 0), eoff(k + 1, 0);
    int total = 0;
    for (int v = 0; v < nv; ++v) { voff[v] = total; total += f.vfrag[v].n_darts; }
    for (int i = 0; i < k; ++i) { eoff[i] = total; total += f.efrag[i].n_darts; }

    // fragment bases (label offsets), propagated through the ports
    std::vector<long long> vbase(nv), ebase(k);
    std::vector<char> ebase_known(k, 0);
    for (int v = 0; v < nv; ++v) vbase[v] = lv[v];

    struct Conn {  // one side of a scheme half-edge connection
        const MobileFragment* frag;
        long long* base;
        bool base_known;
        int off;
    };
    // socket -> (global plug dart) bindings, per vertex/edge fragment
    std::vector<std::map<int, int>> vsock(nv), esock(k);
    // relative label carried by a port element
    auto port_rel_label = [&](const MobileFragment& fr, const MobileFragment::Port& p)
        -> long long {
        switch (p.type) {
            case MobileFragment::stub: return fr.stub_other[p.index];
            case MobileFragment::plug: return fr.plug_label[p.index];
            case MobileFragment::socket: {
                for (std::size_t c = 0; c < fr.cycles.size(); ++c)
                    for (int e : fr.cycles[c])
                        if (e == -(p.index + 1)) return fr.cycle_label[c];
                throw std::runtime_error("reconstruct: dangling socket");
            }
            default: throw std::runtime_error("reconstruct: empty port queried");
        }
    };

    std::vector<std::pair<int, int>> stub_pairs;  // global dart pairs to join

    auto connect = [&](int vA, const MobileFragment::Port& pA, int offA, long long baseA,
                       int eB, const MobileFragment::Port& pB) {
        // A is a vertex fragment (base known), B an edge fragment
        const MobileFragment& A = f.vfrag[vA];
        const MobileFragment& B = f.efrag[eB];
        auto bind = [&](long long want_base) {
            if (!ebase_known[eB]) {
                ebase[eB] = want_base;
                ebase_known[eB] = 1;
            } else if (ebase[eB] != want_base) {
                throw std::runtime_error("reconstruct: inconsistent label offsets");
            }
        };
        if (pA.type == MobileFragment::stub && pB.type == MobileFragment::stub) {
            // two halves of one flagged edge: flags must coincide
            bind(baseA + A.stub_other[pA.index] - B.lflag[pB.index]);
            if (baseA + A.lflag[pA.index] != ebase[eB] + B.stub_other[pB.index])
                throw std::runtime_error("reconstruct: stub flag mismatch");
            stub_pairs.push_back({offA + pA.index, eoff[eB] + pB.index});
        } else if (pA.type == MobileFragment::plug && pB.type == MobileFragment::socket) {
            bind(baseA + A.plug_label[pA.index] - port_rel_label(B, pB));
            esock[eB][pB.index] = offA + A.plugs[pA.index];
        } else if (pA.type == MobileFragment::socket && pB.type == MobileFragment::plug) {
            bind(baseA + port_rel_label(A, pA) - B.plug_label[pB.index]);
            vsock[vA][pA.index] = eoff[eB] + B.plugs[pB.index];
        } else {
            throw std::runtime_error("reconstruct: incompatible ports");
        }
    };

    // walk the scheme edges; resolve the empty-fragment shortcuts directly
    for (int i = 0; i < k; ++i) {
        int c = S.edge_dart[i];
        int u = vidx_s[c], v = vidx_s[f.scheme.alpha[c]];
        // the port position of a scheme dart within its vertex fragment
        auto vport_pos = [&](int vtx, int sd) {
            for (std::size_t j = 0; j < vcs[vtx].size(); ++j)
                if (vcs[vtx][j] == sd) return static_cast<int>(j);
            throw std::runtime_error("reconstruct: scheme dart not at vertex");
        };
        const MobileFragment& FU = f.vfrag[u];
        const MobileFragment& FV = f.vfrag[v];
        MobileFragment::Port pu = FU.ports[vport_pos(u, c)];
        MobileFragment::Port pv = FV.ports[vport_pos(v, f.scheme.alpha[c])];
        const MobileFragment& E = f.efrag[i];
        if (E.n_darts == 0 && E.n_sockets == 0) {
            // direct connection between the two vertex fragments
            if (pu.type == MobileFragment::stub && pv.type == MobileFragment::stub) {
                if (vbase[u] + FU.stub_other[pu.index] != vbase[v] + FV.lflag[pv.index] ||
                    vbase[v] + FV.stub_other[pv.index] != vbase[u] + FU.lflag[pu.index])
                    throw std::runtime_error("reconstruct: stub flag mismatch (direct)");
                stub_pairs.push_back({voff[u] + pu.index, voff[v] + pv.index});
            } else if (pu.type == MobileFragment::plug &&
                       pv.type == MobileFragment::socket) {
                if (vbase[u] + FU.plug_label[pu.index] !=
                    vbase[v] + port_rel_label(FV, pv))
                    throw std::runtime_error("reconstruct: merge label mismatch (direct)");
                vsock[v][pv.index] = voff[u] + FU.plugs[pu.index];
            } else if (pu.type == MobileFragment::socket &&
                       pv.type == MobileFragment::plug) {
                if (vbase[v] + FV.plug_label[pv.index] !=
                    vbase[u] + port_rel_label(FU, pu))
                    throw std::runtime_error("reconstruct: merge label mismatch (direct)");
                vsock[u][pu.index] = voff[v] + FV.plugs[pv.index];
            } else {
                throw std::runtime_error("reconstruct: incompatible direct ports");
            }
            continue;
        }
        connect(u, pu, voff[u], vbase[u], i, E.ports[0]);
        connect(v, pv, voff[v], vbase[v], i, E.ports[1]);
    }
    for (int i = 0; i < k; ++i)
        if ((f.efrag[i].n_darts > 0 || f.efrag[i].n_sockets > 0) && !ebase_known[i])
            throw std::runtime_error("reconstruct: disconnected edge fragment");

    // ----- assemble the global mobile -----
    Mobile t;
    t.map.n_darts = total;
    t.map.sigma.assign(total + 1, 0);
    t.map.alpha.assign(total + 1, 0);
    t.kind_of_dart.assign(total + 1, MobileVertexKind::labelled);
    t.label_of_dart.assign(total + 1, 0);
    t.edge_flagged.assign(total + 1, 0);
    t.left_flag.assign(total + 1, 0);

    auto emit = [&](const MobileFragment& fr, int off, long long base,
                    const std::map<int, int>& sock) {
        for (int d = 1; d <= fr.n_darts; ++d) {
            int g = off + d;
            t.kind_of_dart[g] = fr.kind[d];
            if (fr.kind[d] == MobileVertexKind::labelled)
                t.label_of_dart[g] = static_cast<int>(base + fr.label[d]);
            if (fr.flagged[d]) {
                t.edge_flagged[g] = 1;
                t.left_flag[g] = static_cast<int>(base + fr.lflag[d]);
            }
            if (fr.alpha[d]) t.map.alpha[g] = off + fr.alpha[d];
        }
        for (std::size_t c = 0; c < fr.cycles.size(); ++c) {
            std::vector<int> cyc;
            for (int e : fr.cycles[c])
                cyc.push_back(e >= 1 ? off + e : sock.at(-e - 1));
            for (std::size_t j = 0; j < cyc.size(); ++j)
                t.map.sigma[cyc[j]] = cyc[(j + 1) % cyc.size()];
            // plug darts merged here take the labels of this vertex
            long long vlab = base + fr.cycle_label[c];
            for (int g : cyc)
                if (t.kind_of_dart[g] == MobileVertexKind::labelled)
                    t.label_of_dart[g] = static_cast<int>(vlab);
        }
    };
    for (int v = 0; v < nv; ++v) emit(f.vfrag[v], voff[v], vbase[v], vsock[v]);
    for (int i = 0; i < k; ++i) emit(f.efrag[i], eoff[i], ebase[i], esock[i]);
    for (auto [a, b] : stub_pairs) {
        t.map.alpha[a] = b;
        t.map.alpha[b] = a;
    }

    // root and final label shift
    int root = (f.root_owner_kind == 0 ? voff[f.root_owner] : eoff[f.root_owner]) +
               f.root_dart;
    t.map.root_dart = root;
    int shift = t.flagged(root) ? t.left_flag[root] : t.label_of_dart[t.map.alpha[root]];
    if (shift != 0) {
        for (int d = 1; d <= total; ++d) {
            if (t.kind_of_dart[d] == MobileVertexKind::labelled) t.label_of_dart[d] -= shift;
            if (t.edge_flagged[d]) t.left_flag[d] -= shift;
        }
    }
    validate_mobile(t);
    return t;
}

// The full scheme of a mobile (primary rooting).
inline FullSchemeData full_scheme_of(const Mobile& t, int m) {
    return decompose_mobile(t, m, 0);
}

}  // namespace surfmap
