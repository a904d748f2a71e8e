#include <catch_amalgamated.hpp>

#include <surfmap/asymptotics.hpp>

using namespace surfmap;

TEST_CASE("the genus-1 constant") {
    SchemeConstant sc = t_g_constant(1);
    CHECK(sc.Sg == BigRat(2, 3));
    CHECK(abs(sc.tg - Real(1) / 24) < 1e-60);
    // the alternative assembly at m=2 differs: (1/24) * 4 / 3 = 1/18
    CHECK(abs(sc.tg_variant(2) - Real(1) / 18) < 1e-60);
    CHECK(abs(t_0_constant() - 2 / sqrt(boost::math::constants::pi<Real>())) < 1e-60);
}

TEST_CASE("generic and single-degree formulas agree") {
    for (int m : {2, 3})
        for (int k : {2, 3}) {
            AsymptoticFormula a = constellation_asymptotics(1, m, {k});
            AsymptoticFormula b = constellation_asymptotics_single(1, m, k);
            CHECK(abs(a.growth / b.growth - 1) < 1e-35);
            CHECK(abs(a.prefactor / b.prefactor - 1) < 1e-35);
            CHECK(a.period == k);
            CHECK(a.exponent == 0);
        }
}

TEST_CASE("known growth rates") {
    // m=2, D={2}: growth per black face is sqrt(12)
    AsymptoticFormula f = constellation_asymptotics(1, 2, {2});
    CHECK(abs(f.growth * f.growth - 12) < 1e-35);
    // hypermaps carry the extra factor m^{2g}
    AsymptoticFormula h = hypermap_asymptotics(1, 2, {2});
    CHECK(abs(h.prefactor / f.prefactor - 4) < 1e-35);
    CHECK(h.hypermap);
    // unrestricted degrees: m^{m+1}/(m-1)^{m-1}
    CHECK(abs(all_constellations_asymptotics(1, 2).growth - 8) < 1e-35);
    CHECK(abs(all_constellations_asymptotics(1, 3).growth - Real("20.25")) < 1e-35);
}

TEST_CASE("de-pointing ratio, two routes") {
    for (auto [m, D] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {2}}, {2, {1, 2}}, {3, {1, 2}}, {3, {2}}}) {
        Real a = depoint_ratio(m, D);
        Real b = depoint_ratio_bivariate(m, D);
        CHECK(abs(a - b) < 1e-35);
    }
    // m=2, D={2}: beta = 2, so the ratio is 1/2
    CHECK(abs(depoint_ratio(2, {2}) - Real("0.5")) < 1e-35);
}

TEST_CASE("rooted-map recurrence") {
    auto Q = rooted_map_counts(2, 6);
    std::vector<BigRat> q0{1, 2, 9, 54, 378, 2916, 24057};
    std::vector<BigRat> q1{0, 0, 1, 20, 307, 4280, 56914};
    for (int n = 0; n <= 6; ++n) {
        CHECK(Q[0][n] == q0[n]);
        CHECK(Q[1][n] == q1[n]);
    }
    CHECK(Q[2][4] == 21);
    CHECK(Q[2][5] == 966);
}

TEST_CASE("t_1 recovered from exact counts") {
    Real est = t1_from_map_counts(100);
    CHECK(abs(est * 24 - 1) < Real("0.01"));
}
