#include <catch_amalgamated.hpp>

#include <surfmap/bijection.hpp>
#include <surfmap/mobile_enum.hpp>
#include <surfmap/oracle.hpp>

using namespace surfmap;

namespace {

// hand-encoded pair: the triangle 3-constellation on the sphere, pointed at
// the root vertex, and the mobile derived from it step by step by hand
CombinatorialMap golden_map() {
    CombinatorialMap m;
    m.n_darts = 6;
    m.sigma = {0, 6, 3, 2, 5, 4, 1};
    m.alpha = {0, 2, 1, 4, 3, 6, 5};
    m.root_dart = 1;
    m.pointed_vertex = 1;
    return m;
}

Mobile golden_mobile() {
    Mobile t;
    t.map.n_darts = 6;
    t.map.sigma = {0, 3, 2, 5, 4, 1, 6};
    t.map.alpha = {0, 2, 1, 4, 3, 6, 5};
    t.map.root_dart = 1;
    t.kind_of_dart = {MobileVertexKind::labelled, MobileVertexKind::white,
                      MobileVertexKind::labelled, MobileVertexKind::white,
                      MobileVertexKind::labelled, MobileVertexKind::white,
                      MobileVertexKind::black};
    t.label_of_dart = {0, 0, 0, 0, 1, 0, 0};
    t.edge_flagged = {0, 0, 0, 0, 0, 1, 1};
    t.left_flag = {0, 0, 0, 0, 0, -1, 1};
    return t;
}

}  // namespace

TEST_CASE("golden pair") {
    CombinatorialMap m = golden_map();
    validate(m);
    auto fc = bicolor(m);
    REQUIRE(fc.has_value());
    REQUIRE(genus(m) == 0);
    REQUIRE(is_m_constellation(m, *fc, 3));

    Mobile t = golden_mobile();
    validate_mobile(t);
    CHECK(is_constellation_mobile(t, 3));

    CHECK(canonical_mobile(mob(m, *fc)) == canonical_mobile(t));
    CHECK(canonical_form(map_of(t)) == canonical_form(m));
}

TEST_CASE("round-trip on small families") {
    struct Fam {
        int m, genus, nmax;
        std::vector<int> D;
    };
    for (const Fam& f : {Fam{2, 0, 4, {2}}, Fam{2, 1, 4, {2}}, Fam{3, 0, 2, {1, 2}},
                         Fam{3, 1, 2, {1, 2}}}) {
        for (int n = 1; n <= f.nmax; ++n) {
            EnumSpec spec;
            spec.m = f.m;
            spec.D = f.D;
            spec.genus = f.genus;
            spec.size = n;
            spec.mode = OracleMode::hypermap;
            long long pointed = 0;
            enumerate(spec, [&](const CombinatorialMap& base, const FaceColoring&) {
                for (const auto& vc : vertices(base)) {
                    CombinatorialMap mp = base;
                    mp.pointed_vertex = *std::min_element(vc.begin(), vc.end());
                    auto fc = bicolor(mp);
                    Mobile t = mob(mp, *fc);
                    validate_mobile(t);
                    REQUIRE(canonical_form(map_of(t)) == canonical_form(mp));
                    ++pointed;
                }
            });
            long long mobiles = 0;
            enumerate_mobiles(f.m, f.D, f.genus, n, [&](const Mobile&) { ++mobiles; });
            CHECK(mobiles == pointed);
        }
    }
}

TEST_CASE("constellation criterion carries over") {
    // a hypermap is an m-constellation iff its mobile has no flag drop
    // other than m-1
    EnumSpec spec;
    spec.m = 2;
    spec.D = {2};
    spec.genus = 1;
    spec.size = 4;
    spec.mode = OracleMode::hypermap;
    enumerate(spec, [&](const CombinatorialMap& base, const FaceColoring&) {
        for (const auto& vc : vertices(base)) {
            CombinatorialMap mp = base;
            mp.pointed_vertex = *std::min_element(vc.begin(), vc.end());
            auto fc = bicolor(mp);
            Mobile t = mob(mp, *fc);
            CHECK(is_m_constellation(mp, *fc, 2) == is_constellation_mobile(t, 2));
        }
    });
}
