#include <catch_amalgamated.hpp>

#include <surfmap/oracle.hpp>

using namespace surfmap;

namespace {

CountEntry run(int m, std::vector<int> D, int genus, int size, OracleMode mode) {
    EnumSpec s;
    s.m = m;
    s.D = std::move(D);
    s.genus = genus;
    s.size = size;
    s.mode = mode;
    s.dart_cap = 48;
    return count(s);
}

}  // namespace

TEST_CASE("planar quartic counts follow the closed formula") {
    // rooted planar maps with q edges: 2, 9, 54, 378, 2916 (q = size/2)
    CHECK(run(2, {2}, 0, 2, OracleMode::constellation).count == 2);
    CHECK(run(2, {2}, 0, 4, OracleMode::constellation).count == 9);
    CHECK(run(2, {2}, 0, 6, OracleMode::constellation).count == 54);
    CHECK(run(2, {2}, 0, 8, OracleMode::constellation).count == 378);
    // planar hypermaps coincide with constellations
    CHECK(run(2, {2}, 0, 6, OracleMode::hypermap).count == 54);
}

TEST_CASE("frozen reference counts") {
    // genus 1, m=2, D={2}
    CHECK(run(2, {2}, 1, 6, OracleMode::hypermap).count == 198);
    CHECK(run(2, {2}, 1, 6, OracleMode::hypermap).vertex_sum == 594);
    CHECK(run(2, {2}, 1, 6, OracleMode::constellation).count == 20);
    // genus 2, m=2, D={2}
    CHECK(run(2, {2}, 2, 6, OracleMode::hypermap).count == 45);
    CHECK(run(2, {2}, 2, 6, OracleMode::constellation).count == 0);
    // mixed degree set {1,2}
    CHECK(run(2, {1, 2}, 0, 6, OracleMode::hypermap).count == 220);
    CHECK(run(2, {1, 2}, 1, 6, OracleMode::hypermap).count == 438);
    CHECK(run(2, {1, 2}, 1, 6, OracleMode::hypermap).vertex_sum == 1059);
    // m = 3
    CHECK(run(3, {1, 2}, 0, 4, OracleMode::hypermap).count == 371);
    CHECK(run(3, {1, 2}, 1, 4, OracleMode::hypermap).count == 8438);
    CHECK(run(3, {1, 2}, 1, 4, OracleMode::constellation).count == 409);
    CHECK(run(3, {2}, 1, 4, OracleMode::constellation).count == 154);
}

TEST_CASE("counts vanish off multiples of gcd(D)") {
    for (int n : {1, 3, 5}) {
        CHECK(run(2, {2}, 0, n, OracleMode::hypermap).count == 0);
        CHECK(run(2, {2}, 1, n, OracleMode::hypermap).count == 0);
    }
    // gcd{1,2} = 1: odd sizes are populated
    CHECK(run(2, {1, 2}, 0, 3, OracleMode::hypermap).count > 0);
}

TEST_CASE("generator agrees with the brute-force reference") {
    // the reference walks every rotation system, so keep the sizes tiny
    struct Case {
        int m, size;
        std::vector<int> D;
    };
    for (const Case& c : {Case{2, 1, {1, 2}}, Case{2, 2, {1, 2}}, Case{2, 2, {2}},
                          Case{3, 1, {1, 2}}}) {
        EnumSpec s;
        s.m = c.m;
        s.D = c.D;
        s.genus = 0;
        s.size = c.size;
        s.mode = OracleMode::hypermap;
        auto ref = brute_force_reference(s);
        std::set<CombinatorialMap> got;
        enumerate(s, [&](const CombinatorialMap& m, const FaceColoring&) {
            got.insert(m);
        });
        CHECK(got == ref);
    }
}
