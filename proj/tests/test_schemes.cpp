#include <catch_amalgamated.hpp>

#include <surfmap/mobile_enum.hpp>
#include <surfmap/mobile_scheme.hpp>
#include <surfmap/schemes.hpp>
#include <surfmap/series.hpp>

#include <set>

using namespace surfmap;

TEST_CASE("genus-1 schemes") {
    auto schemes = enumerate_schemes(1);
    REQUIRE(schemes.size() == 2);
    std::multiset<std::vector<int>> profiles;
    for (const auto& s : schemes) {
        std::vector<int> prof;
        for (const auto& vc : vertices(s.map)) prof.push_back((int)vc.size());
        std::sort(prof.begin(), prof.end());
        profiles.insert(prof);
        CHECK(scheme_degree_constraint(s.map, 1));
        CHECK(faces(s.map).size() == 1);
        // a scheme is its own scheme
        CoreScheme cs = scheme_of(s.map);
        CHECK(canonical_form(cs.scheme.map) == canonical_form(s.map));
    }
    CHECK(profiles.count({3, 3}) == 1);
    CHECK(profiles.count({4}) == 1);
}

TEST_CASE("typings: count and zero element") {
    for (int m : {2, 3, 4})
        for (const auto& s : enumerate_schemes(1)) {
            auto ts = enumerate_typings(s, m);
            CHECK((int)ts.size() == m * m);
            bool has_zero = false;
            for (const auto& t : ts)
                has_zero |= std::all_of(t.begin(), t.end(), [](int x) { return x == 0; });
            CHECK(has_zero);
            // brute force over all m^k edge assignments
            int k = s.n_edges();
            long long total = 1, valid = 0;
            for (int i = 0; i < k; ++i) total *= m;
            for (long long a = 0; a < total; ++a) {
                Typing t(k);
                long long x = a;
                for (int i = 0; i < k; ++i) { t[i] = x % m; x /= m; }
                valid += typing_valid(s, t, m);
            }
            CHECK(valid == (long long)ts.size());
        }
}

TEST_CASE("vertex classification identities at genus 1") {
    for (int m : {2, 3, 4})
        for (const auto& s : enumerate_schemes(1)) {
            bool cubic = true;
            for (const auto& vc : vertices(s.map)) cubic &= vc.size() == 3;
            if (!cubic) continue;
            for (const auto& t : enumerate_typings(s, m)) {
                auto cls = classify_vertices(s, t, m);
                int v2 = 0, v31 = 0, v32 = 0, nneq = 0;
                for (auto c : cls) {
                    v2 += c == SchemeVertexType::t2;
                    v31 += c == SchemeVertexType::t31;
                    v32 += c == SchemeVertexType::t32;
                }
                for (int x : t) nneq += x != 0;
                CHECK(v31 == v32);
                CHECK(2 * nneq == 3 * v31 + 3 * v32 + 2 * v2);
            }
        }
}

TEST_CASE("dominant pairs at genus 1") {
    auto dps = dominant_pairs(1);
    REQUIRE(dps.size() == 2);
    BigRat sum = 0;
    for (const auto& p : dps) {
        CHECK(p.c == BigRat(1, 3));
        sum += p.c;
    }
    CHECK(sum == BigRat(2, 3));
    CHECK(scheme_constant_sum(1) == BigRat(2, 3));
}

TEST_CASE("full-scheme decomposition is the identity with 2k rootings") {
    struct Fam {
        int m, nmax;
        std::vector<int> D;
    };
    for (const Fam& f : {Fam{2, 4, {2}}, Fam{3, 2, {1, 2}}}) {
        for (int n = 1; n <= f.nmax; ++n)
            enumerate_mobiles(f.m, f.D, 1, n, [&](const Mobile& t) {
                Mobile ct = canonical_mobile(t);
                FullSchemeData fs = full_scheme_of(t, f.m);
                Scheme S = make_scheme(fs.scheme);
                CHECK(typing_valid(S, fs.typing, f.m));
                if (is_constellation_mobile(t, f.m))
                    CHECK(std::all_of(fs.typing.begin(), fs.typing.end(),
                                      [](int x) { return x == 0; }));
                int nd = scheme_of(t.map).scheme.map.n_darts;
                std::set<FullSchemeData> vals;
                for (int d = 1; d <= nd; ++d) {
                    FullSchemeData f2 = decompose_mobile(t, f.m, d);
                    REQUIRE(canonical_mobile(reconstruct_mobile(f2)) == ct);
                    vals.insert(f2);
                }
                CHECK((int)vals.size() == nd);
            });
    }
}
