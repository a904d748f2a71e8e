// Direct exhaustive enumeration of mobiles, independent of the bijection:
// used to certify that the number of mobiles of given genus and degree data
// equals the number of rooted-pointed hypermaps.
//
// Phase one generates the decorated skeleton (rotation system, vertex kinds,
// and the drop tau of every flagged edge) dart by dart in breadth-first
// canonical order, so each rooted skeleton is produced exactly once, pruning
// branches that close a face cycle early (the result must have one face) or
// violate a degree bound. Phase two solves for the labels: the clockwise
// rule around white vertices rigidly chains all values within a white star,
// so the equalities split the value nodes into components handled by a
// weighted union-find; the clockwise rule around black vertices yields
// difference inequalities between components, and every integer solution of
// that system gives exactly one admissible labelling.
#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mobile.hpp"

namespace surfmap {

namespace detail {

class MobileGenerator {
  public:
    MobileGenerator(int m, std::vector<int> D, int n_black, int genus,
                    std::function<void(const Mobile&)> emit)
        : m_(m), D_(std::move(D)), n_black_(n_black), genus_(genus), emit_(std::move(emit)) {
        nd_ = 2 * m_ * n_black_;
        v_target_ = m_ * n_black_ + 1 - 2 * genus_;
        max_white_ = 0;
        for (int k : D_) max_white_ = std::max(max_white_, m_ * k);
        alpha_.assign(nd_ + 1, 0);
        sigma_.assign(nd_ + 1, 0);
        sinv_.assign(nd_ + 1, 0);
        kind_.assign(nd_ + 1, MobileVertexKind::labelled);
        tau_.assign(nd_ + 1, -1);  // per dart; >= 0 iff the edge is flagged
        fnext_.assign(nd_ + 1, 0);
    }

    void run() {
        if (nd_ <= 0 || v_target_ <= 0) return;
        kind_[1] = MobileVertexKind::white;
        process(1, /*stage=*/0);
    }

  private:
    // ----- face-cycle tracking: fnext_ is the known part of sigma∘alpha -----

    // Record the face link x -> y unless it would close a cycle shorter than
    // the full face.
    bool add_flink(int x, int y) {
        int z = y, len = 1;
        while (z != x && fnext_[z]) { z = fnext_[z]; ++len; }
        if (z == x && len < nd_) return false;  // would close a short face cycle
        fnext_[x] = y;
        return true;
    }
    void remove_flink(int x) { fnext_[x] = 0; }
    template <class Fn>
    void with_flinks(const std::vector<std::pair<int, int>>& links, Fn&& cont) {
        std::size_t added = 0;
        bool ok = true;
        for (; added < links.size(); ++added) {
            if (!add_flink(links[added].first, links[added].second)) { ok = false; break; }
        }
        if (ok) cont();
        for (std::size_t i = added; i-- > 0;) remove_flink(links[i].first);
    }

    // ----- rotation-chain helpers -------------------------------------------

    int chain_head(int x) const {
        while (sinv_[x]) x = sinv_[x];
        return x;
    }
    // Length and black-weight bounds of the chain from its head: a paired
    // dart contributes tau+1 exactly, an unpaired one 1 to m.
    struct ChainInfo { int len = 0, wmin = 0, wmax = 0; };
    ChainInfo chain_info(int head) const {
        ChainInfo c;
        for (int x = head; x; x = sigma_[x]) {
            ++c.len;
            if (tau_[x] >= 0) { c.wmin += tau_[x] + 1; c.wmax += tau_[x] + 1; }
            else if (alpha_[x] == 0) { c.wmin += 1; c.wmax += m_; }
            else { c.wmin += 1; c.wmax += 1; }  // paired, plain edge
            if (sigma_[x] == head) break;
        }
        return c;
    }
    bool may_close(int d) const {
        ChainInfo c = chain_info(chain_head(d));
        switch (kind_[d]) {
            case MobileVertexKind::white:
                return c.len % m_ == 0 &&
                       std::find(D_.begin(), D_.end(), c.len / m_) != D_.end();
            case MobileVertexKind::black:
                return c.wmin <= m_ && m_ <= c.wmax;
            case MobileVertexKind::labelled:
                return true;
        }
        return false;
    }
    bool may_grow(int d, int extra_len, int extra_wmin) const {
        ChainInfo c = chain_info(chain_head(d));
        switch (kind_[d]) {
            case MobileVertexKind::white:
                return c.len + extra_len <= max_white_;
            case MobileVertexKind::black:
                return c.wmin + extra_wmin <= m_;
            case MobileVertexKind::labelled:
                return true;
        }
        return false;
    }

    // ----- skeleton generation ----------------------------------------------

    void process(int d, int stage) {
        if (d > created_) {
            if (created_ == nd_ && open_chains_ == 0 && n_b_ == n_black_ &&
                n_vertices_ == v_target_)
                solve_labels();
            return;
        }
        if (stage == 0) {
            if (alpha_[d]) { process(d, 1); return; }
            // Pair d with an existing unpaired dart...
            for (int e = d + 1; e <= created_; ++e) {
                if (alpha_[e]) continue;
                if (!compatible(kind_[d], kind_[e])) continue;
                pair_darts(d, e);
            }
            // ...or with a brand-new dart starting a new vertex.
            if (created_ < nd_) {
                int e = ++created_;
                ++n_vertices_;
                ++open_chains_;
                for (MobileVertexKind k : other_side(kind_[d])) {
                    // No cap on n_b_ here: black chains started separately may
                    // later splice into one vertex, so the running count may
                    // overshoot the target before merges bring it back down.
                    if (k == MobileVertexKind::black) ++n_b_;
                    kind_[e] = k;
                    pair_darts(d, e);
                    if (k == MobileVertexKind::black) --n_b_;
                }
                --open_chains_;
                --n_vertices_;
                --created_;
            }
            return;
        }
        // stage 1: the rotation image of d.
        if (sigma_[d]) { process(d + 1, 0); return; }
        int head = chain_head(d);
        // Close this vertex.
        if (may_close(d)) assign_sigma(d, head, /*closing=*/true);
        // Extend the vertex with a new dart.
        if (created_ < nd_ && may_grow(d, 1, 1)) {
            int e = ++created_;
            kind_[e] = kind_[d];
            assign_sigma(d, e, false);
            --created_;
        }
        // Or splice in another chain of the same kind, at its head.
        for (int e = 1; e <= created_; ++e) {
            if (sinv_[e] || e == head || e == d || kind_[e] != kind_[d]) continue;
            ChainInfo other = chain_info(e);
            if (!may_grow(d, other.len, other.wmin)) continue;
            --open_chains_;
            --n_vertices_;  // two started vertices fuse into one
            if (kind_[d] == MobileVertexKind::black) --n_b_;
            assign_sigma(d, e, false);
            if (kind_[d] == MobileVertexKind::black) ++n_b_;
            ++n_vertices_;
            ++open_chains_;
        }
    }

    static bool compatible(MobileVertexKind a, MobileVertexKind b) {
        if (a == MobileVertexKind::white)
            return b != MobileVertexKind::white;
        return b == MobileVertexKind::white;
    }
    static std::vector<MobileVertexKind> other_side(MobileVertexKind k) {
        if (k == MobileVertexKind::white)
            return {MobileVertexKind::labelled, MobileVertexKind::black};
        return {MobileVertexKind::white};
    }

    void pair_darts(int d, int e) {
        bool flagged =
            kind_[d] == MobileVertexKind::black || kind_[e] == MobileVertexKind::black;
        alpha_[d] = e;
        alpha_[e] = d;
        std::vector<std::pair<int, int>> links;
        if (sigma_[e]) links.push_back({d, sigma_[e]});
        if (sigma_[d]) links.push_back({e, sigma_[d]});
        if (!flagged) {
            with_flinks(links, [&] { process(d, 1); });
        } else {
            int b = kind_[d] == MobileVertexKind::black ? d : e;
            for (int tau = 0; tau < m_; ++tau) {
                tau_[d] = tau_[e] = tau;
                if (black_weight_ok(b)) with_flinks(links, [&] { process(d, 1); });
            }
            tau_[d] = tau_[e] = -1;
        }
        alpha_[d] = alpha_[e] = 0;
    }
    bool black_weight_ok(int b) const {
        // The chain of b is still open here (a chain only closes at the
        // rotation step of one of its darts, after that dart is paired), so
        // later growth can only add weight: check the lower bound alone.
        return chain_info(chain_head(b)).wmin <= m_;
    }

    void assign_sigma(int d, int e, bool closing) {
        sigma_[d] = e;
        sinv_[e] = d;
        if (closing) --open_chains_;
        std::vector<std::pair<int, int>> links;
        if (alpha_[d]) links.push_back({alpha_[d], e});
        with_flinks(links, [&] { process(d + 1, 0); });
        if (closing) ++open_chains_;
        sinv_[e] = 0;
        sigma_[d] = 0;
    }

    // ----- label solving ------------------------------------------------------

    struct Dsu {
        std::vector<int> parent, offset;  // value(x) = offset(x) + value(root(x))
        explicit Dsu(int n) : parent(n), offset(n, 0) {
            for (int i = 0; i < n; ++i) parent[i] = i;
        }
        std::pair<int, int> find(int x) {
            if (parent[x] == x) return {x, 0};
            auto [r, off] = find(parent[x]);
            parent[x] = r;
            offset[x] += off;
            return {r, offset[x]};
        }
        bool unite(int a, int b, int diff) {  // impose value(a) - value(b) = diff
            auto [ra, oa] = find(a);
            auto [rb, ob] = find(b);
            if (ra == rb) return oa - ob == diff;
            parent[ra] = rb;
            offset[ra] = diff + ob - oa;
            return true;
        }
    };

    void solve_labels() {
        // Value nodes: nd_+v for the label of the vertex with minimal dart v,
        // and the white-side dart of each flagged edge for the flag at its
        // white extremity (the black-side flag is that plus tau).
        std::vector<int> vid(nd_ + 1, 0);
        for (int d = 1; d <= nd_; ++d) {
            if (vid[d]) continue;
            int mn = d;
            for (int x = sigma_[d]; x != d; x = sigma_[x]) mn = std::min(mn, x);
            int x = d;
            do { vid[x] = mn; x = sigma_[x]; } while (x != d);
        }
        auto node_of = [&](int dart_at_white) {
            if (tau_[dart_at_white] >= 0) return dart_at_white;
            return nd_ + vid[alpha_[dart_at_white]];
        };
        Dsu dsu(2 * nd_ + 1);
        // White stars, clockwise: value(next item) = value(item) + (tau or -1).
        for (int d = 1; d <= nd_; ++d) {
            if (kind_[d] != MobileVertexKind::white || vid[d] != d) continue;
            int x = d;
            do {
                int y = sinv_[x];
                int step = tau_[x] >= 0 ? tau_[x] : -1;
                if (!dsu.unite(node_of(y), node_of(x), step)) return;
                x = y;
            } while (x != d);
        }
        // Components of the rigid value graph.
        std::vector<int> comp_roots;
        std::vector<int> comp_index(2 * nd_ + 1, -1);
        auto comp_of = [&](int node) {
            auto [r, off] = dsu.find(node);
            if (comp_index[r] < 0) {
                comp_index[r] = static_cast<int>(comp_roots.size());
                comp_roots.push_back(r);
            }
            return std::pair{comp_index[r], off};
        };
        auto [c_anchor, off_anchor] = comp_of(node_of(1));  // root edge label = 0
        // Black stars, clockwise: left flag of the next edge >= right flag of
        // the current one, i.e. value(next) + tau(next) >= value(cur).
        struct CompCons { int ca, cb, bound; };  // shift(ca) - shift(cb) >= bound
        std::vector<CompCons> ccons;
        for (int d = 1; d <= nd_; ++d) {
            if (kind_[d] != MobileVertexKind::black || vid[d] != d) continue;
            int x = d;
            do {
                int y = sinv_[x];
                auto [ca, oa] = comp_of(alpha_[y]);
                auto [cb, ob] = comp_of(alpha_[x]);
                ccons.push_back({ca, cb, -tau_[y] - oa + ob});
                x = y;
            } while (x != d);
        }
        int ncomp = static_cast<int>(comp_roots.size());
        // Tightest pairwise bounds shift(a) - shift(b) <= dist[b][a] by
        // all-pairs shortest paths on the difference-constraint graph.
        const int INF = 1 << 28;
        std::vector<std::vector<int>> dist(ncomp, std::vector<int>(ncomp, INF));
        for (int i = 0; i < ncomp; ++i) dist[i][i] = 0;
        for (const auto& c : ccons)  // shift(cb) - shift(ca) <= -bound
            dist[c.ca][c.cb] = std::min(dist[c.ca][c.cb], -c.bound);
        for (int k = 0; k < ncomp; ++k)
            for (int i = 0; i < ncomp; ++i) {
                if (dist[i][k] == INF) continue;
                for (int j = 0; j < ncomp; ++j) {
                    if (dist[k][j] == INF) continue;
                    dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
                }
            }
        for (int i = 0; i < ncomp; ++i)
            if (dist[i][i] < 0) return;  // contradictory cycle: no labelling
        for (int i = 0; i < ncomp; ++i) {
            if (dist[c_anchor][i] == INF || dist[i][c_anchor] == INF)
                throw std::logic_error("mobile enumeration: unbounded label component");
        }
        // Enumerate the integer points: every component's shift lies in the
        // interval forced by the anchor; reject assignments violating a
        // pairwise bound as they are extended.
        std::vector<int> shift(ncomp, 0);
        shift[c_anchor] = -off_anchor;
        std::vector<int> order;
        for (int i = 0; i < ncomp; ++i)
            if (i != c_anchor) order.push_back(i);
        std::function<void(std::size_t)> rec = [&](std::size_t idx) {
            if (idx == order.size()) {
                emit_mobile(vid, dsu, comp_index, shift);
                return;
            }
            int c = order[idx];
            int lo = shift[c_anchor] - dist[c][c_anchor];
            int hi = shift[c_anchor] + dist[c_anchor][c];
            for (int i = 0; i < static_cast<int>(idx); ++i) {
                int p = order[i];
                if (dist[c][p] != INF) lo = std::max(lo, shift[p] - dist[c][p]);
                if (dist[p][c] != INF) hi = std::min(hi, shift[p] + dist[p][c]);
            }
            for (int s = lo; s <= hi; ++s) {
                shift[c] = s;
                rec(idx + 1);
            }
        };
        rec(0);
    }

    void emit_mobile(const std::vector<int>& vid, Dsu& dsu,
                     const std::vector<int>& comp_index, const std::vector<int>& shift) {
        auto value = [&](int node) {
            auto [r, off] = dsu.find(node);
            return off + shift[comp_index[r]];
        };
        Mobile t;
        t.map.n_darts = nd_;
        t.map.root_dart = 1;
        t.map.sigma = sigma_;
        t.map.alpha = alpha_;
        t.kind_of_dart = kind_;
        t.label_of_dart.assign(nd_ + 1, 0);
        t.edge_flagged.assign(nd_ + 1, 0);
        t.left_flag.assign(nd_ + 1, 0);
        for (int d = 1; d <= nd_; ++d) {
            if (kind_[d] == MobileVertexKind::labelled)
                t.label_of_dart[d] = value(nd_ + vid[d]);
            if (tau_[d] >= 0 && kind_[d] != MobileVertexKind::black) {
                t.edge_flagged[d] = t.edge_flagged[alpha_[d]] = 1;
                t.left_flag[d] = value(d);
                t.left_flag[alpha_[d]] = value(d) + tau_[d];
            }
        }
        validate_mobile(t);  // paranoia: the construction satisfies all rules
        if (genus(t.map) != genus_)
            throw std::logic_error("mobile enumeration: genus mismatch");
        emit_(t);
    }

    int m_;
    std::vector<int> D_;
    int n_black_, genus_, nd_, v_target_, max_white_;
    int created_ = 1, open_chains_ = 1, n_b_ = 0, n_vertices_ = 1;
    std::vector<int> alpha_, sigma_, sinv_, tau_, fnext_;
    std::vector<MobileVertexKind> kind_;
    std::function<void(const Mobile&)> emit_;
};

}  // namespace detail

// Enumerate every mobile with n black vertices, the given genus, white
// degrees in m*D and black weights m (the mobiles of m-hypermaps of size n).
// The visitor receives each rooted mobile exactly once, in canonical form.
inline void enumerate_mobiles(int m, const std::vector<int>& D, int genus, int n,
                              const std::function<void(const Mobile&)>& visit) {
    detail::MobileGenerator gen(m, D, n, genus, [&](const Mobile& t) {
        if (!is_hypermap_mobile(t, m, D))
            throw std::logic_error("mobile enumeration: degree filter failed");
        visit(t);
    });
    gen.run();
}

}  // namespace surfmap
