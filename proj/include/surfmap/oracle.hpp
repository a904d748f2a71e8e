// Exhaustive enumeration of rooted m-hypermaps and m-constellations of small
// size — the exact ground truth against which the analytic modules are
// validated.
//
// Encoding used by the generator: in an m-hypermap every edge borders exactly
// one black face, so the edges can be identified with the darts lying in
// black faces. Reading the faces of the map then gives two permutations of
// the edge set E:
//   beta  — rotation of edges around black faces (all cycles of length m),
//   omega — rotation of edges around white faces (cycle lengths in mD),
// and conversely a transitive pair (beta, omega) with these cycle types,
// together with a root edge, reconstructs the rooted hypermap. The generator
// therefore walks over canonically labelled transitive pairs: elements are
// numbered in breadth-first discovery order from the root edge with the move
// order (beta, omega), which produces every rooted isomorphism class exactly
// once with no post-hoc deduplication.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "map.hpp"

namespace surfmap {

using BigInt = boost::multiprecision::cpp_int;

enum class OracleMode { hypermap, constellation };

struct EnumSpec {
    int m = 2;
    std::vector<int> D;     // finite nonempty set of positive integers
    int genus = 0;
    int size = 1;           // number of black faces
    OracleMode mode = OracleMode::hypermap;
    bool pointed = false;   // rooted-pointed counting (sums vertex counts)
    int dart_cap = 24;      // guard: total darts 2*m*size must not exceed this
};

inline void validate(const EnumSpec& s) {
    if (s.m < 2) throw std::invalid_argument("m must be >= 2");
    if (s.D.empty()) throw std::invalid_argument("degree set D must be nonempty");
    for (int k : s.D)
        if (k <= 0) throw std::invalid_argument("degree set D must be positive");
    if (s.m == 2 && s.D == std::vector<int>{1})
        throw std::invalid_argument("for m=2 the degree set {1} is excluded");
    if (s.genus < 0 || s.size < 0) throw std::invalid_argument("genus and size must be >= 0");
    if (2 * s.m * s.size > s.dart_cap)
        throw std::length_error("enumeration size exceeds the dart cap");
}

// Reconstruct the rooted hypermap from an edge-permutation pair. Edge i gets
// a black-side dart 2i-1 and a white-side dart 2i; the face permutation is
// phi(2i-1) = 2*beta(i)-1, phi(2i) = 2*omega(i), and sigma = phi∘alpha. The
// root dart 1 then has the black face of edge 1 on its right, as required by
// the rooting convention.
inline CombinatorialMap map_from_edge_permutations(const std::vector<int>& beta,
                                                   const std::vector<int>& omega) {
    int ne = static_cast<int>(beta.size()) - 1;
    CombinatorialMap m;
    m.n_darts = 2 * ne;
    m.sigma.assign(m.n_darts + 1, 0);
    m.alpha.assign(m.n_darts + 1, 0);
    std::vector<int> ph(m.n_darts + 1, 0);
    for (int i = 1; i <= ne; ++i) {
        m.alpha[2 * i - 1] = 2 * i;
        m.alpha[2 * i] = 2 * i - 1;
        ph[2 * i - 1] = 2 * beta[i] - 1;
        ph[2 * i] = 2 * omega[i];
    }
    for (int d = 1; d <= m.n_darts; ++d) m.sigma[m.alpha[d]] = ph[d];
    m.root_dart = 1;
    return m;
}

namespace detail {

// Backtracking generator of canonically labelled transitive pairs
// (beta, omega) on {1..n_edges} with beta cycles of length exactly m and
// omega cycle lengths of the form m*k, k in D. Elements are processed in
// numeric order; for each element x the generator chooses beta(x) then
// omega(x), and a brand-new element always receives the next unused number,
// so the numbering coincides with the breadth-first canonical labelling.
class HypermapGenerator {
  public:
    HypermapGenerator(int m, std::vector<int> D, int n_edges,
                      std::function<void(const std::vector<int>&, const std::vector<int>&)> emit)
        : m_(m), D_(std::move(D)), n_(n_edges), emit_(std::move(emit)) {
        max_white_ = 0;
        for (int k : D_) max_white_ = std::max(max_white_, m_ * k);
        beta_.assign(n_ + 1, 0);
        binv_.assign(n_ + 1, 0);
        omega_.assign(n_ + 1, 0);
        oinv_.assign(n_ + 1, 0);
    }

    void run() {
        if (n_ % m_ != 0) return;
        assign(1, /*which=*/0);
    }

  private:
    // Head and length of the partial-permutation chain containing x, found
    // by walking the inverse links (chains never exceed a face degree).
    static std::pair<int, int> chain_head(const std::vector<int>& inv, int x) {
        int len = 1;
        while (inv[x]) { x = inv[x]; ++len; }
        return {x, len};
    }
    // Length of the chain starting at head y, following forward links.
    static int chain_len_from(const std::vector<int>& fwd, int y) {
        int len = 1;
        while (fwd[y]) { y = fwd[y]; ++len; }
        return len;
    }

    // Assign the image of x under beta (which = 0) or omega (which = 1),
    // then recurse. x is always the tail of its chain at this point.
    void assign(int x, int which) {
        std::vector<int>& fwd = which == 0 ? beta_ : omega_;
        std::vector<int>& inv = which == 0 ? binv_ : oinv_;
        auto [head, len] = chain_head(inv, x);
        int cap = which == 0 ? m_ : max_white_;

        auto step = [&](int y) {
            fwd[x] = y;
            inv[y] = x;
            if (which == 0) assign(x, 1);
            else next(x);
            fwd[x] = 0;
            inv[y] = 0;
        };

        // Close the cycle through x when its length is admissible.
        bool closable = which == 0 ? (len == m_)
                                   : (len % m_ == 0 &&
                                      std::find(D_.begin(), D_.end(), len / m_) != D_.end());
        if (closable) step(head);
        if (len >= cap) return;
        // Continue with a fresh element (canonical: the next unused number).
        if (created_ < n_) {
            ++created_;
            step(created_);
            --created_;
        }
        // Or merge with a previously discovered chain, entering at its head.
        for (int y = 1; y <= created_; ++y) {
            if (inv[y] || y == head) continue;  // only heads of other chains
            if (len + chain_len_from(fwd, y) > cap) continue;
            step(y);
        }
    }

    void next(int x) {
        if (x == created_) {
            // No further element was ever discovered: the structure is
            // complete and transitive on 1..created_.
            if (created_ == n_) emit_(beta_, omega_);
            return;
        }
        assign(x + 1, 0);
    }

    int m_;
    std::vector<int> D_;
    int n_;
    int max_white_;
    int created_ = 1;
    std::vector<int> beta_, binv_, omega_, oinv_;
    std::function<void(const std::vector<int>&, const std::vector<int>&)> emit_;
};

}  // namespace detail

// Enumerate the rooted maps of the requested class, in a deterministic order
// (lexicographic on the canonical sigma images). The visitor receives each
// map in canonical form together with its face coloring.
inline void enumerate(const EnumSpec& spec,
                      const std::function<void(const CombinatorialMap&, const FaceColoring&)>& visit) {
    validate(spec);
    int gcd = 0;
    for (int k : spec.D) gcd = std::gcd(gcd, k);
    std::vector<CombinatorialMap> out;
    if (spec.size > 0 && spec.size % gcd == 0) {
        detail::HypermapGenerator gen(
            spec.m, spec.D, spec.m * spec.size,
            [&](const std::vector<int>& beta, const std::vector<int>& omega) {
                CombinatorialMap m = map_from_edge_permutations(beta, omega);
                if (genus(m) != spec.genus) return;
                auto fc = bicolor(m);
                if (!fc) throw std::logic_error("oracle produced a non-Eulerian map");
                if (spec.mode == OracleMode::constellation &&
                    !is_m_constellation(m, *fc, spec.m))
                    return;
                out.push_back(canonical_form(m));
            });
        gen.run();
    }
    std::sort(out.begin(), out.end());
    for (const auto& m : out) {
        auto fc = bicolor(m);
        visit(m, *fc);
    }
}

struct CountEntry {
    BigInt count = 0;         // rooted maps
    BigInt vertex_sum = 0;    // sum of vertex counts = rooted-pointed count
};

inline CountEntry count(const EnumSpec& spec) {
    CountEntry entry;
    enumerate(spec, [&](const CombinatorialMap& m, const FaceColoring&) {
        entry.count += 1;
        entry.vertex_sum += static_cast<int>(vertices(m).size());
    });
    return entry;
}

// Brute-force reference: enumerate every rotation system on 2e darts with
// the standard involution (1 2)(3 4)..., keep the connected Eulerian maps of
// the requested class, and deduplicate rooted isomorphs by canonical form.
// Exponential in e; used only to certify the generator at tiny sizes.
inline std::set<CombinatorialMap> brute_force_reference(const EnumSpec& spec) {
    validate(spec);
    std::set<CombinatorialMap> result;
    int ne = spec.m * spec.size;  // edges of the hypermap
    int nd = 2 * ne;
    std::vector<int> perm(nd);
    for (int i = 0; i < nd; ++i) perm[i] = i + 1;
    CombinatorialMap m;
    m.n_darts = nd;
    m.alpha.assign(nd + 1, 0);
    for (int d = 1; d <= nd; d += 2) { m.alpha[d] = d + 1; m.alpha[d + 1] = d; }
    m.root_dart = 1;
    do {
        m.sigma.assign(nd + 1, 0);
        for (int d = 1; d <= nd; ++d) m.sigma[d] = perm[d - 1];
        try {
            validate(m);
        } catch (const std::invalid_argument&) {
            continue;  // disconnected
        }
        if (genus(m) != spec.genus) continue;
        auto fc = bicolor(m);
        if (!fc) continue;
        // Count black faces: this encoding does not fix which darts are
        // black, so recover the size from the coloring.
        int black_darts = 0;
        for (int d = 1; d <= nd; ++d)
            if (fc->black(d)) ++black_darts;
        if (!is_m_hypermap(m, *fc, spec.m, spec.D)) continue;
        if (black_darts != spec.m * spec.size) continue;
        if (spec.mode == OracleMode::constellation && !is_m_constellation(m, *fc, spec.m))
            continue;
        result.insert(canonical_form(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

}  // namespace surfmap
