// surfmap: command-line front end for the library. Subcommands cover exact
// enumeration, bijection verification, scheme/typing inspection, critical
// constants, series identity checks, and asymptotic formulas with oracle
// comparison tables.
#include <CLI11.hpp>
#include <json.hpp>

#include <surfmap/asymptotics.hpp>
#include <surfmap/bijection.hpp>
#include <surfmap/mobile_enum.hpp>
#include <surfmap/mobile_scheme.hpp>
#include <surfmap/oracle.hpp>
#include <surfmap/schemes.hpp>
#include <surfmap/series.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace surfmap;

namespace {

std::vector<int> parse_degrees(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw CLI::ValidationError("--degrees", "empty degree list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string real_str(const Real& x, int prec) {
    std::ostringstream os;
    os.precision(prec);
    os << x;
    return os.str();
}

std::string map_str(const CombinatorialMap& m) {
    std::ostringstream os;
    os << "sigma";
    for (int d = 1; d <= m.n_darts; ++d) os << ' ' << m.sigma[d];
    os << " alpha";
    for (int d = 1; d <= m.n_darts; ++d) os << ' ' << m.alpha[d];
    return os.str();
}

int cmd_enumerate(int m, const std::vector<int>& D, int genus, int size,
                  const std::string& mode, bool pointed, const std::string& emit) {
    EnumSpec spec;
    spec.m = m;
    spec.D = D;
    spec.genus = genus;
    spec.size = size;
    spec.mode = (mode == "const") ? OracleMode::constellation : OracleMode::hypermap;
    spec.dart_cap = 48;
    std::ofstream out;
    if (!emit.empty()) out.open(emit);
    BigInt count = 0, vsum = 0;
    enumerate(spec, [&](const CombinatorialMap& mp, const FaceColoring&) {
        count += 1;
        vsum += static_cast<int>(vertices(mp).size());
        if (out.is_open()) write_map(out, mp);
    });
    json j;
    j["g"] = genus;
    j["n"] = size;
    j["count"] = (pointed ? vsum : count).str();
    if (pointed) j["rooted_count"] = count.str();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_verify_bijection(int m, const std::vector<int>& D, int genus, int max_size) {
    bool all_ok = true;
    for (int n = 1; n <= max_size; ++n) {
        EnumSpec spec;
        spec.m = m;
        spec.D = D;
        spec.genus = genus;
        spec.size = n;
        spec.mode = OracleMode::hypermap;
        spec.dart_cap = 48;
        long long roundtrips = 0, failures = 0;
        BigInt vsum = 0;
        enumerate(spec, [&](const CombinatorialMap& base, const FaceColoring&) {
            for (const auto& vc : vertices(base)) {
                CombinatorialMap mp = base;
                mp.pointed_vertex = *std::min_element(vc.begin(), vc.end());
                auto fc = bicolor(mp);
                Mobile t = mob(mp, *fc);
                validate_mobile(t);
                CombinatorialMap back = map_of(t);
                ++roundtrips;
                vsum += 1;
                if (!(canonical_form(back) == canonical_form(mp))) ++failures;
            }
        });
        long long mobiles = 0;
        enumerate_mobiles(m, D, genus, n, [&](const Mobile&) { ++mobiles; });
        bool ok = failures == 0 && BigInt(mobiles) == vsum;
        all_ok &= ok;
        std::cout << "n=" << n << " roundtrips=" << roundtrips
                  << " failures=" << failures << " mobiles=" << mobiles
                  << " rooted_pointed=" << vsum << (ok ? "  ok" : "  MISMATCH")
                  << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_schemes(int genus, int m, bool dominant) {
    auto schemes = enumerate_schemes(genus);
    BigRat csum = 0;
    if (dominant) csum = scheme_constant_sum(genus);
    for (const auto& s : schemes) {
        json j;
        j["scheme"] = map_str(s.map);
        j["n_vertices"] = static_cast<int>(vertices(s.map).size());
        j["n_edges"] = s.n_edges();
        j["typing_count"] = static_cast<long long>(enumerate_typings(s, m).size());
        bool cubic = true;
        for (const auto& vc : vertices(s.map)) cubic &= vc.size() == 3;
        j["dominant"] = cubic && s.n_edges() == 6 * genus - 3;
        if (dominant) {
            std::ostringstream os;
            os << csum;
            j["c_sum"] = os.str();
        }
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int cmd_constants(int m, const std::vector<int>& D, int prec) {
    CriticalConstants cc = critical_constants(m, D);
    json j;
    j["t_c"] = real_str(cc.t_c, prec);
    j["beta"] = real_str(cc.beta, prec);
    j["gamma"] = real_str(cc.gamma, prec);
    j["z_c"] = real_str(cc.z_c, prec);
    j["growth_rate"] = real_str(1 / cc.z_c, prec);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_series_check(const std::string& what, int m, const std::vector<int>& D) {
    bool ok = true;
    std::cout.precision(6);
    if (what == "kernel") {
        CriticalConstants cc = critical_constants(m, D);
        LaurentPoly P = characteristic_polynomial(m, D);
        Real tPt = 0, PX = 0, PXX = 0;
        for (const auto& [e, s] : P.coef)
            for (int i = 0; i <= s.order; ++i) {
                if (s[i].is_zero()) continue;
                Real c = Real(s[i]) * pow(cc.t_c, i);
                tPt += i * c;
                PX += e * c;
                PXX += Real(e) * (e - 1) * c;
            }
        Real r1 = tPt - cc.gamma / (m - 1), r2 = PX, r3 = PXX - Real(m) * cc.gamma / 6;
        ok = abs(r1) < 1e-10 && abs(r2) < 1e-10 && abs(r3) < 1e-10;
        std::cout << (ok ? "pass" : "FAIL") << " kernel derivative identities: residuals "
                  << Real(abs(r1)) << " " << Real(abs(r2)) << " " << Real(abs(r3)) << "\n";
    } else if (what == "Mn") {
        CriticalConstants cc = critical_constants(m, D);
        LaurentPoly P = characteristic_polynomial(m, D);
        Real worst = 0;
        for (double frac : {0.3, 0.6, 0.9, 0.99}) {
            Real t = cc.t_c * Real(frac);
            KernelRoots kr = kernel_roots(P, m, D, t);
            for (int n = -4; n <= 4; ++n)
                worst = std::max(worst, Real(abs(chain_series_Mn_roots(kr, n) -
                                                chain_series_Mn_contour(P, n, t))));
        }
        ok = worst < 1e-8;
        std::cout << (ok ? "pass" : "FAIL")
                  << " partial fractions vs contour: max residual " << worst << "\n";
    } else if (what == "Htau") {
        TruncatedSeries T = planar_series(m, D, 8);
        for (int tau = 1; tau <= m - 1 && ok; ++tau)
            for (int n = -3; n <= 3 && ok; ++n) {
                TruncatedSeries lhs = H_tau(m, D, tau, n, 8);
                TruncatedSeries rhs = T * H_zero(m, D, n, 8);
                for (int i = 0; i <= 8; ++i) ok &= (lhs[i] == rhs[i]);
            }
        std::cout << (ok ? "pass" : "FAIL")
                  << " chain series identity to order 8 (exact)\n";
    } else if (what == "puiseux") {
        CriticalConstants cc = critical_constants(m, D);
        LaurentPoly P = characteristic_polynomial(m, D);
        auto y_alpha = [&](const Real& eps) {
            KernelRoots kr = kernel_roots(P, m, D, cc.t_c * (1 - eps));
            return Real(1) - kr.alpha[0].real();
        };
        PuiseuxFit fa = puiseux_fit(y_alpha, 1e-6, 1e-9);
        ok = abs(fa.slope - Real("0.5")) < Real("0.01");
        std::cout << (ok ? "pass" : "FAIL") << " principal root exponent: slope "
                  << fa.slope << " amplitude " << fa.amplitude << "\n";
    } else {
        std::cerr << "unknown check: " << what << "\n";
        return 2;
    }
    return ok ? 0 : 1;
}

int cmd_asymptotics(int genus, int m, const std::vector<int>& D,
                    const std::string& mode, bool compare) {
    AsymptoticFormula f = (mode == "hyper") ? hypermap_asymptotics(genus, m, D)
                                            : constellation_asymptotics(genus, m, D);
    json j;
    j["prefactor"] = real_str(f.prefactor, 15);
    j["exponent"] = real_str(f.exponent, 15);
    j["growth_rate"] = real_str(f.growth, 15);
    if (genus >= 1) {
        SchemeConstant sc = t_g_constant(genus);
        std::ostringstream os;
        os << sc.Sg;
        j["tg"] = real_str(sc.tg, 15);
        j["Sg"] = os.str();
        j["tg_variant"] = real_str(sc.tg_variant(m), 15);
    } else {
        j["tg"] = real_str(t_0_constant(), 15);
    }
    std::cout << j.dump() << "\n";
    if (compare) {
        std::cout << "n,exact,predicted,ratio\n";
        for (int n = f.period; 2 * m * n <= 24; n += f.period) {
            EnumSpec spec;
            spec.m = m;
            spec.D = D;
            spec.genus = genus;
            spec.size = n;
            spec.mode = (mode == "hyper") ? OracleMode::hypermap
                                          : OracleMode::constellation;
            auto c = count(spec);
            Real pred = f.predict(n);
            Real exact = Real(c.count.str());
            std::cout << n << "," << c.count << "," << real_str(pred, 15) << ","
                      << (pred > 0 ? real_str(exact / pred, 15) : "nan") << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic enumeration of Eulerian maps on surfaces"};
    app.require_subcommand(1);

    std::string degrees = "2", mode = "hyper", emit, check = "kernel";
    int m = 2, genus = 0, size = 1, max_size = 4, prec = 15;
    bool pointed = false, dominant = false, compare = false;

    auto* en = app.add_subcommand("enumerate", "count or list maps of one size");
    en->add_option("--m", m)->required();
    en->add_option("--degrees", degrees)->required();
    en->add_option("--genus", genus)->required();
    en->add_option("--size", size)->required();
    en->add_option("--mode", mode)->check(CLI::IsMember({"hyper", "const"}));
    en->add_flag("--pointed", pointed);
    en->add_option("--emit", emit);

    auto* vb = app.add_subcommand("verify-bijection", "round-trip every map");
    vb->add_option("--m", m)->required();
    vb->add_option("--degrees", degrees)->required();
    vb->add_option("--genus", genus)->required();
    vb->add_option("--max-size", max_size)->required();

    auto* sc = app.add_subcommand("schemes", "list schemes of a genus");
    sc->add_option("--genus", genus)->required();
    sc->add_option("--m", m);
    sc->add_flag("--dominant", dominant);

    auto* co = app.add_subcommand("constants", "critical constants");
    co->add_option("--m", m)->required();
    co->add_option("--degrees", degrees)->required();
    co->add_option("--precision", prec);

    auto* se = app.add_subcommand("series", "series identity checks");
    se->add_option("--check", check)
        ->check(CLI::IsMember({"kernel", "Htau", "puiseux", "Mn"}));
    se->add_option("--m", m);
    se->add_option("--degrees", degrees);

    auto* as = app.add_subcommand("asymptotics", "asymptotic formulas");
    as->add_option("--genus", genus)->required();
    as->add_option("--m", m)->required();
    as->add_option("--degrees", degrees)->required();
    as->add_option("--mode", mode)->check(CLI::IsMember({"const", "hyper"}));
    as->add_flag("--compare", compare);

    CLI11_PARSE(app, argc, argv);
    try {
        std::vector<int> D = parse_degrees(degrees);
        if (en->parsed()) return cmd_enumerate(m, D, genus, size, mode, pointed, emit);
        if (vb->parsed()) return cmd_verify_bijection(m, D, genus, max_size);
        if (sc->parsed()) return cmd_schemes(genus, m, dominant);
        if (co->parsed()) return cmd_constants(m, D, prec);
        if (se->parsed()) return cmd_series_check(check, m, D);
        if (as->parsed()) return cmd_asymptotics(genus, m, D, mode, compare);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
