#include <catch_amalgamated.hpp>

#include <surfmap/series.hpp>

using namespace surfmap;

TEST_CASE("planar mobile series coefficients") {
    // m=2, D={2}: T = 1 + 3 z^2 T^2, the ternary-tree numbers 1, 3, 18, 135
    // on the even powers of z
    TruncatedSeries T = planar_series(2, {2}, 6);
    CHECK(T[0] == 1);
    CHECK(T[2] == 3);
    CHECK(T[4] == 18);
    CHECK(T[6] == 135);
    CHECK(T[1] == 0);
    CHECK(T[3] == 0);
}

TEST_CASE("characteristic polynomial, small case") {
    // m=2, D={2}: P = t^2 (X^{-1} + 1 + X)
    LaurentPoly P = characteristic_polynomial(2, {2});
    CHECK(P.symmetric());
    for (int e : {-1, 0, 1}) {
        TruncatedSeries s = P.get(e);
        CHECK(s[2] == 1);
        for (int i = 0; i <= s.order; ++i)
            if (i != 2) CHECK(s[i] == 0);
    }
    CHECK(P.get(2) == TruncatedSeries(P.order));
}

TEST_CASE("total cell count per degree") {
    // [t^k] P(1, t) = ((m-1)k - 1) binom(mk-1, k)
    for (auto [m, D] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {2}}, {2, {2, 3}}, {3, {2}}, {3, {1, 3}}}) {
        LaurentPoly P = characteristic_polynomial(m, D);
        TruncatedSeries tot = P.at_X1();
        for (int k : D)
            CHECK(tot[k] == BigRat(((m - 1) * k - 1) * binomial(m * k - 1, k)));
    }
}

TEST_CASE("critical constants, closed forms") {
    // m=2, D={2}: t_c = 1/sqrt(3), beta = 2, gamma = 2, z_c^{-2} = 12
    CriticalConstants cc = critical_constants(2, {2});
    CHECK(abs(cc.t_c - 1 / sqrt(Real(3))) < 1e-40);
    CHECK(abs(cc.beta - 2) < 1e-40);
    CHECK(abs(cc.gamma - 2) < 1e-40);
    CHECK(abs(1 / (cc.z_c * cc.z_c) - 12) < 1e-38);
    // single-degree closed forms beta = (m-1)k/((m-1)k-1), gamma = (m-1)k
    for (int m : {2, 3})
        for (int k : {2, 3, 4}) {
            CriticalConstants c = critical_constants(m, {k});
            int q = (m - 1) * k;
            CHECK(abs(c.beta - Real(q) / (q - 1)) < 1e-40);
            CHECK(abs(c.gamma - q) < 1e-40);
        }
}

TEST_CASE("derivative identities at the critical point") {
    for (auto [m, D] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {2}}, {2, {2, 3}}, {3, {2}}, {3, {1, 3}}}) {
        CriticalConstants cc = critical_constants(m, D);
        LaurentPoly P = characteristic_polynomial(m, D);
        Real P1 = 0, tPt = 0, PX = 0, PXX = 0;
        for (const auto& [e, s] : P.coef)
            for (int i = 0; i <= s.order; ++i) {
                if (s[i].is_zero()) continue;
                Real c = Real(s[i]) * pow(cc.t_c, i);
                P1 += c;
                tPt += i * c;
                PX += e * c;
                PXX += Real(e) * (e - 1) * c;
            }
        CHECK(abs(P1 - 1) < 1e-40);
        CHECK(abs(tPt - cc.gamma / (m - 1)) < 1e-38);
        CHECK(abs(PX) < 1e-38);
        CHECK(abs(PXX - Real(m) * cc.gamma / 6) < 1e-38);
    }
}

TEST_CASE("second moment of cell increments") {
    // sum over cells of increment^2 = mk(m-1)((m-1)k-1)/6 binom(mk-1,k)
    for (int m : {2, 3, 4})
        for (int k : {1, 2, 3}) {
            auto expect = boost::multiprecision::cpp_int(m) * k * (m - 1) *
                          ((m - 1) * k - 1) * binomial(m * k - 1, k) / 6;
            CHECK(cell_second_moment(m, k) == expect);
        }
}

TEST_CASE("pinning identity for split-edge stars") {
    // (1 + X + ... + X^{m-2}) r_k(X) has the same coefficients as
    // binom(mk-1,k) + the degree-k part of P(X)
    for (int m : {2, 3, 4})
        for (int k : {1, 2, 3})
            for (int tau = 1; tau <= m - 1; ++tau) {
                std::map<int, boost::multiprecision::cpp_int> lhs, rhs;
                for (const auto& [inc, cnt] : r_k_walks(m, k, tau))
                    for (int b = 0; b <= m - 2; ++b) lhs[inc + b] += cnt;
                rhs[0] = binomial(m * k - 1, k);
                for_each_type0_cell(m, k, [&](int inc) { rhs[inc] += 1; });
                for (auto it = lhs.begin(); it != lhs.end();)
                    it = it->second == 0 ? lhs.erase(it) : std::next(it);
                for (auto it = rhs.begin(); it != rhs.end();)
                    it = it->second == 0 ? rhs.erase(it) : std::next(it);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("partial fractions match the contour integral") {
    for (auto [m, D] : std::vector<std::pair<int, std::vector<int>>>{{2, {2}}, {3, {2}}}) {
        CriticalConstants cc = critical_constants(m, D);
        LaurentPoly P = characteristic_polynomial(m, D);
        Real t = cc.t_c * Real("0.6");
        KernelRoots kr = kernel_roots(P, m, D, t);
        for (int n = -3; n <= 3; ++n) {
            Complex pf = chain_series_Mn_roots(kr, n);
            Complex ct = chain_series_Mn_contour(P, n, t);
            CHECK(Real(abs(pf - ct)) < 1e-8);
        }
    }
}

TEST_CASE("partial fractions match the exact truncated series") {
    int m = 2;
    std::vector<int> D{2};
    CriticalConstants cc = critical_constants(m, D);
    LaurentPoly P = characteristic_polynomial(m, D);
    Real t = cc.t_c * Real("0.5");
    KernelRoots kr = kernel_roots(P, m, D, t);
    for (int n = 0; n <= 3; ++n) {
        Real exact = chain_series_Mn(m, D, n, 40).eval(t);
        Real pf = Real(chain_series_Mn_roots(kr, n).real());
        CHECK(abs(exact - pf) < 1e-12);
    }
}

TEST_CASE("chains of nonzero type reduce to type zero") {
    // H^tau_n(z) = T(z) H^0_n(z), coefficient by coefficient
    for (int m : {2, 3}) {
        std::vector<int> D = (m == 2) ? std::vector<int>{2} : std::vector<int>{1, 2};
        int N = 6;
        TruncatedSeries T = planar_series(m, D, N);
        for (int tau = 1; tau <= m - 1; ++tau)
            for (int n = -2; n <= 2; ++n) {
                TruncatedSeries lhs = H_tau(m, D, tau, n, N);
                TruncatedSeries rhs = T * H_zero(m, D, n, N);
                for (int i = 0; i <= N; ++i) CHECK(lhs[i] == rhs[i]);
            }
    }
}

TEST_CASE("square-root singularities") {
    // near t_c: 1 - alpha_1 ~ sqrt(12/(m(m-1))) eps^{1/2},
    //           C_1 ~ (sqrt(3(m-1)/m)/gamma) eps^{-1/2}
    int m = 2;
    std::vector<int> D{2};
    CriticalConstants cc = critical_constants(m, D);
    LaurentPoly P = characteristic_polynomial(m, D);
    auto y_alpha = [&](const Real& eps) {
        KernelRoots kr = kernel_roots(P, m, D, cc.t_c * (1 - eps));
        return Real(1) - kr.alpha[0].real();
    };
    auto y_C1 = [&](const Real& eps) {
        KernelRoots kr = kernel_roots(P, m, D, cc.t_c * (1 - eps));
        return Real(kr.C[0].real());
    };
    PuiseuxFit fa = puiseux_fit(y_alpha, 1e-6, 1e-9);
    PuiseuxFit fc = puiseux_fit(y_C1, 1e-6, 1e-9);
    CHECK(abs(fa.slope - Real("0.5")) < Real("0.01"));
    CHECK(abs(fc.slope + Real("0.5")) < Real("0.01"));
    Real amp_a = sqrt(Real(12) / (Real(m) * (m - 1)));
    Real amp_c = sqrt(Real(3) * (m - 1) / m) / cc.gamma;
    CHECK(abs(fa.amplitude / amp_a - 1) < Real("0.05"));
    CHECK(abs(fc.amplitude / amp_c - 1) < Real("0.05"));
}
