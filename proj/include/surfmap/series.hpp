// Generating-series engine: exact truncated power series over the rationals,
// the planar mobile series, critical constants, the characteristic Laurent
// polynomial of type-0 cells, kernel roots with partial-fraction coefficients,
// chain series, and the chain-type identity relating types 0 and tau.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace surfmap {

using BigRat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

inline boost::multiprecision::cpp_int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    boost::multiprecision::cpp_int r = 1;
    for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

// ----- exact truncated power series ------------------------------------------

// Power series truncated at a fixed order, with exact rational coefficients.
struct TruncatedSeries {
    int order = 0;             // coefficients are kept for exponents 0..order
    std::vector<BigRat> c;     // size order + 1

    TruncatedSeries() : c(1) {}
    explicit TruncatedSeries(int n) : order(n), c(n + 1) {}
    static TruncatedSeries constant(const BigRat& v, int n) {
        TruncatedSeries s(n);
        s.c[0] = v;
        return s;
    }
    static TruncatedSeries variable(int n) {
        TruncatedSeries s(n);
        if (n >= 1) s.c[1] = 1;
        return s;
    }
    const BigRat& operator[](int i) const {
        static const BigRat zero = 0;
        return (i >= 0 && i <= order) ? c[i] : zero;
    }
    BigRat& at(int i) { return c.at(i); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order, b.order));
        for (int i = 0; i <= r.order; ++i) r.c[i] = a[i] + b[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order, b.order));
        for (int i = 0; i <= r.order; ++i) r.c[i] = a[i] - b[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order, b.order));
        for (int i = 0; i <= r.order; ++i)
            for (int j = 0; i + j <= r.order && j <= b.order; ++j)
                if (!a[i].is_zero() && !b[j].is_zero()) r.c[i + j] += a[i] * b[j];
        return r;
    }
    friend TruncatedSeries operator*(const BigRat& v, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& x : r.c) x *= v;
        return r;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order != b.order) return false;
        return a.c == b.c;
    }

    TruncatedSeries pow(int k) const {
        TruncatedSeries r = constant(1, order);
        TruncatedSeries base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            base = base * base;
        }
        return r;
    }
    // 1 / this; requires an invertible constant term.
    TruncatedSeries reciprocal() const {
        if (c[0].is_zero()) throw std::invalid_argument("reciprocal: zero constant term");
        TruncatedSeries r(order);
        r.c[0] = 1 / c[0];
        for (int i = 1; i <= order; ++i) {
            BigRat s = 0;
            for (int j = 1; j <= i; ++j) s += (*this)[j] * r.c[i - j];
            r.c[i] = -s / c[0];
        }
        return r;
    }
    // this(inner); requires inner to have zero constant term.
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        if (!inner[0].is_zero())
            throw std::invalid_argument("compose: inner constant term must vanish");
        int n = std::min(order, inner.order);
        TruncatedSeries r = constant((*this)[0], n);
        TruncatedSeries p = constant(1, n);
        for (int i = 1; i <= order; ++i) {
            p = p * inner;
            if (!(*this)[i].is_zero()) r = r + (*this)[i] * p;
        }
        return r;
    }
    template <class F>
    F eval(const F& x) const {
        F r = 0;
        for (int i = order; i >= 0; --i) r = r * x + F(c[i]);
        return r;
    }
};

// ----- planar mobile series ---------------------------------------------------

// The unique power-series solution of
//   T(z) = 1 + sum_{k in D} binom(mk-1, k) z^k T(z)^{(m-1)k},
// counting planar mobiles rooted at a labelled corner by black vertices.
inline TruncatedSeries planar_series(int m, const std::vector<int>& D, int N) {
    TruncatedSeries z = TruncatedSeries::variable(N);
    TruncatedSeries T = TruncatedSeries::constant(1, N);
    for (int it = 0; it <= N + 1; ++it) {
        TruncatedSeries next = TruncatedSeries::constant(1, N);
        for (int k : D)
            next = next + BigRat(binomial(m * k - 1, k)) * (z.pow(k) * T.pow((m - 1) * k));
        T = next;
    }
    return T;
}

// Bivariate variant at u: T(z,u) = u + sum binom(mk-1,k) z^k T^{(m-1)k},
// evaluated numerically for the de-pointing checks (u counts labelled
// vertices); returns the smallest positive solution at given (z, u).
inline Real planar_series_value(int m, const std::vector<int>& D, const Real& z,
                                const Real& u) {
    auto phi = [&](const Real& T) {
        Real s = u - T;
        for (int k : D)
            s += Real(binomial(m * k - 1, k)) * pow(z, k) * pow(T, (m - 1) * k);
        return s;  // = 0 at the fixed point
    };
    // The relevant branch is the smallest root >= u; bracket and bisect.
    Real lo = u, hi = u;
    while (phi(hi) > 0) {
        hi += Real("0.5");
        if (hi > u + 1000) throw std::runtime_error("planar series: no fixed point");
    }
    for (int i = 0; i < 400; ++i) {
        Real mid = (lo + hi) / 2;
        (phi(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

// ----- critical constants -----------------------------------------------------

struct CriticalConstants {
    Real t_c, beta, gamma, z_c, T_c;
};

// t_c is the unique positive root of
//   sum_{k in D} [(m-1)k - 1] binom(mk-1, k) t^k = 1,
// and beta, gamma, z_c follow from their defining sums.
inline CriticalConstants critical_constants(int m, const std::vector<int>& D) {
    auto f = [&](const Real& t) {
        Real s = 0;
        for (int k : D)
            s += Real((m - 1) * k - 1) * Real(binomial(m * k - 1, k)) * pow(t, k);
        return s;
    };
    Real lo = 0, hi = 1;
    while (f(hi) < 1) hi *= 2;
    for (int i = 0; i < 500; ++i) {
        Real mid = (lo + hi) / 2;
        (f(mid) < 1 ? lo : hi) = mid;
    }
    CriticalConstants cc;
    cc.t_c = (lo + hi) / 2;
    cc.beta = 0;
    cc.gamma = 0;
    for (int k : D) {
        Real term = Real(binomial(m * k - 1, k)) * pow(cc.t_c, k);
        cc.beta += Real((m - 1) * k) * term;
        cc.gamma += Real((m - 1) * k) * Real((m - 1) * k - 1) * term;
    }
    cc.z_c = cc.t_c * pow(cc.beta, 1 - m);
    cc.T_c = cc.beta;
    return cc;
}

// ----- Laurent polynomials over truncated series ------------------------------

// Laurent polynomial in X whose coefficients are truncated series in t.
struct LaurentPoly {
    int order = 0;  // t-truncation order shared by all coefficients
    std::map<int, TruncatedSeries> coef;

    explicit LaurentPoly(int n = 0) : order(n) {}
    TruncatedSeries get(int e) const {
        auto it = coef.find(e);
        return it != coef.end() ? it->second : TruncatedSeries(order);
    }
    void add_term(int e, int tpow, const BigRat& v) {
        if (tpow > order) return;
        auto [it, fresh] = coef.try_emplace(e, order);
        it->second.c[tpow] += v;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(std::min(a.order, b.order));
        for (const auto& [e, s] : a.coef) r.coef.emplace(e, s);
        for (const auto& [e, s] : b.coef) {
            auto [it, fresh] = r.coef.try_emplace(e, s);
            if (!fresh) it->second = it->second + s;
        }
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(std::min(a.order, b.order));
        for (const auto& [ea, sa] : a.coef)
            for (const auto& [eb, sb] : b.coef) {
                TruncatedSeries p = sa * sb;
                bool nonzero = false;
                for (const auto& x : p.c) nonzero |= !x.is_zero();
                if (!nonzero) continue;
                auto [it, fresh] = r.coef.try_emplace(ea + eb, p);
                if (!fresh) it->second = it->second + p;
            }
        return r;
    }
    // Substitute X = 1.
    TruncatedSeries at_X1() const {
        TruncatedSeries s(order);
        for (const auto& [e, t] : coef) s = s + t;
        return s;
    }
    // Numeric evaluation at complex X and real t.
    Complex eval(const Complex& X, const Real& t) const {
        Complex r = 0;
        for (const auto& [e, s] : coef) {
            Complex xe = pow(X, e >= 0 ? e : -e);
            if (e < 0) xe = Complex(1) / xe;
            r += xe * Complex(s.eval(t));
        }
        return r;
    }
    bool symmetric() const {  // invariance under X <-> 1/X
        for (const auto& [e, s] : coef)
            if (!(get(-e) == s)) return false;
        return true;
    }
};

// ----- type-0 cells and the characteristic polynomial -------------------------

// A type-0 cell of total degree mk is encoded by an m-walk of length mk that
// begins with a -1 step (the in vertex) and carries one later -1 step
// distinguished (the out vertex); its increment is the walk ordinate just
// before the distinguished step.
template <class Visit>
inline void for_each_type0_cell(int m, int k, Visit&& visit) {
    int len = m * k;
    std::vector<int> steps(len + 1, -1);
    // choose the positions (among 2..len) of the k steps of value m-1
    std::vector<int> pos(k);
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == k) {
            std::vector<int> x(len + 1, 0);  // x[i] = ordinate after step i
            for (int i = 1; i <= len; ++i) x[i] = x[i - 1] + steps[i];
            for (int p = 2; p <= len; ++p)
                if (steps[p] == -1) visit(x[p - 1]);  // increment of the cell
            return;
        }
        for (int p = from; p <= len; ++p) {
            steps[p] = m - 1;
            rec(idx + 1, p + 1);
            steps[p] = -1;
        }
    };
    rec(0, 2);
}

// P_{m,D}(X, t) = sum over type-0 cells of t^{size} X^{increment}.
inline LaurentPoly characteristic_polynomial(int m, const std::vector<int>& D) {
    int N = *std::max_element(D.begin(), D.end());
    LaurentPoly P(N);
    for (int k : D)
        for_each_type0_cell(m, k, [&](int inc) { P.add_term(inc, k, 1); });
    return P;
}

// Second moment of cell increments at fixed k, for the p_k closed form.
inline boost::multiprecision::cpp_int cell_second_moment(int m, int k) {
    boost::multiprecision::cpp_int s = 0;
    for_each_type0_cell(m, k, [&](int inc) { s += boost::multiprecision::cpp_int(inc) * inc; });
    return s;
}

// ----- kernel roots and partial fractions --------------------------------------

struct KernelRoots {
    std::vector<Complex> alpha;  // the r roots finite at t = 0; alpha[0] principal
    std::vector<Complex> C;      // partial-fraction coefficients, same indexing
};

namespace detail {

// All roots of a complex polynomial (coefficients low to high) by Durand-Kerner
// iteration at full working precision.
inline std::vector<Complex> poly_roots(std::vector<Complex> a) {
    while (a.size() > 1 && abs(a.back()) < 1e-60) a.pop_back();
    int n = static_cast<int>(a.size()) - 1;
    if (n <= 0) return {};
    for (auto& x : a) x /= a[n];
    auto eval = [&](const Complex& x) {
        Complex r = 0;
        for (int i = n; i >= 0; --i) r = r * x + a[i];
        return r;
    };
    std::vector<Complex> z(n);
    Complex seed(Real("0.4"), Real("0.9"));
    Complex p = 1;
    for (int i = 0; i < n; ++i) { p *= seed; z[i] = p; }
    for (int it = 0; it < 500; ++it) {
        Real worst = 0;
        for (int i = 0; i < n; ++i) {
            Complex denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            Complex delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, Real(abs(delta)));
        }
        if (worst < Real("1e-85")) break;
    }
    return z;
}

}  // namespace detail

// Roots of 1 - P(X, t) finite at t=0 (the r "small branches") and the
// coefficients C_i of the partial-fraction expansion of 1/(1-P).
// At t = t_c the double root at X = 1 is deflated before solving.
inline KernelRoots kernel_roots(const LaurentPoly& P, int m, const std::vector<int>& D,
                                const Real& t, bool at_critical = false) {
    int r = 0;
    for (const auto& [e, s] : P.coef) r = std::max(r, std::abs(e));
    // Q(X) = X^r (1 - P(X,t)) has degree 2r.
    std::vector<Complex> q(2 * r + 1, Complex(0));
    q[r] = 1;
    for (const auto& [e, s] : P.coef) q[e + r] -= Complex(s.eval(t));
    std::vector<Complex> roots;
    if (at_critical) {
        // divide by (X - 1) twice; the remainders must be ~0
        auto deflate = [&](std::vector<Complex>& p) {
            std::vector<Complex> out(p.size() - 1);
            Complex carry = 0;
            for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
                carry = p[i] + carry;
                out[i - 1] = carry;
            }
            Complex rem = p[0] + carry;
            if (abs(rem) > 1e-60) throw std::runtime_error("kernel deflation: X=1 not a root");
            p = out;
        };
        deflate(q);
        deflate(q);
        roots = detail::poly_roots(q);
        roots.push_back(Complex(1));
        roots.push_back(Complex(1));
    } else {
        roots = detail::poly_roots(q);
    }
    if (static_cast<int>(roots.size()) != 2 * r)
        throw std::runtime_error("kernel root count mismatch");
    // small roots: the r of smallest modulus; principal branch = the real
    // positive one among them (it has the largest modulus of the small family)
    std::sort(roots.begin(), roots.end(),
              [](const Complex& a, const Complex& b) { return abs(a) < abs(b); });
    std::vector<Complex> small(roots.begin(), roots.begin() + r);
    int principal = 0;
    for (int i = 0; i < r; ++i)
        if (abs(small[i]) > abs(small[principal])) principal = i;
    if (abs(small[principal].imag()) > 1e-40 || small[principal].real() <= 0)
        throw std::runtime_error("kernel: principal branch is not real positive");
    std::swap(small[0], small[principal]);
    KernelRoots kr;
    kr.alpha = small;
    kr.C.resize(r);
    // leading coefficient of X^r (1 - P): normalizes the factored form
    Complex lead = 0;
    for (const auto& [e, s] : P.coef)
        if (e == r) lead = -Complex(s.eval(t));
    for (int i = 0; i < r; ++i) {
        Complex denom = lead * small[i];
        for (int j = 0; j < r; ++j) denom *= Complex(1) - Complex(1) / (small[i] * small[j]);
        for (int j = 0; j < r; ++j)
            if (j != i) denom *= small[i] - small[j];
        kr.C[i] = Complex(1) / denom;
    }
    return kr;
}

// ----- chain series -----------------------------------------------------------

// S(X, t) = 1/(1 - P) truncated at t-order N, as an exact Laurent object.
inline LaurentPoly chain_series(const LaurentPoly& P0, int N) {
    LaurentPoly P = P0;
    P.order = N;
    for (auto& [e, s] : P.coef) { s.order = N; s.c.resize(N + 1); }
    LaurentPoly S(N);
    S.add_term(0, 0, 1);
    LaurentPoly power = S;  // P^0
    int minsize = N + 1;
    for (const auto& [e, s] : P.coef)
        for (int i = 0; i <= s.order; ++i)
            if (!s[i].is_zero()) minsize = std::min(minsize, i);
    for (int j = 1; j * minsize <= N; ++j) {
        power = power * P;
        S = S + power;
    }
    return S;
}

// M_n(t): exact generating series of type-0 chains of total increment n.
inline TruncatedSeries chain_series_Mn(int m, const std::vector<int>& D, int n, int N) {
    LaurentPoly P = characteristic_polynomial(m, D);
    LaurentPoly S = chain_series(P, N);
    return S.get(n);
}

// Numeric M_n(t) from the partial-fraction form sum_i C_i alpha_i^{|n|}.
inline Complex chain_series_Mn_roots(const KernelRoots& kr, int n) {
    Complex s = 0;
    for (std::size_t i = 0; i < kr.alpha.size(); ++i)
        s += kr.C[i] * pow(kr.alpha[i], std::abs(n));
    return s;
}

// Numeric M_n(t) as the X^n Fourier coefficient of 1/(1-P(X,t)) on the unit
// circle (trapezoidal rule; the integrand is analytic in an annulus around
// |X| = 1 for t < t_c so the rule converges geometrically).
inline Complex chain_series_Mn_contour(const LaurentPoly& P, int n, const Real& t,
                                       int samples = 2048) {
    Complex acc = 0;
    Real two_pi = 2 * boost::math::constants::pi<Real>();
    for (int j = 0; j < samples; ++j) {
        Real theta = two_pi * j / samples;
        Complex X(cos(theta), sin(theta));
        Complex S = Complex(1) / (Complex(1) - P.eval(X, t));
        Complex phase(cos(theta * n), -sin(theta * n));
        acc += S * phase;
    }
    return acc / samples;
}

// ----- chains of type tau and the H^tau identity -------------------------------

// Generating Laurent polynomial r_k(X) of elementary white stars of total
// degree mk with two special split-edges of types tau and m-tau: walks of
// length mk starting with the step tau-1 (the in edge), with one later step
// m-tau-1 distinguished (the out edge), the other steps being k-1 steps m-1
// and (m-1)k-1 steps -1; X tracks the ordinate just before the out step.
inline std::map<int, boost::multiprecision::cpp_int> r_k_walks(int m, int k, int tau) {
    int len = m * k;
    std::map<int, boost::multiprecision::cpp_int> out;
    // positions 2..len hold: one out step (m-tau-1), k-1 steps m-1, rest -1
    std::vector<int> steps(len + 1, -1);
    steps[1] = tau - 1;
    std::vector<int> upos(k - 1);
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == k - 1) {
            for (int p = 2; p <= len; ++p) {
                if (steps[p] != -1) continue;  // out step replaces a free slot
                // increment = displacement strictly between in and out steps
                int x = 0;
                for (int i = 2; i < p; ++i) x += steps[i];
                out[x] += 1;
            }
            return;
        }
        for (int p = from; p <= len; ++p) {
            if (steps[p] != -1) continue;
            steps[p] = m - 1;
            rec(idx + 1, p + 1);
            steps[p] = -1;
        }
    };
    rec(0, 2);
    return out;
}

// H^tau_n(z): series of chains of type tau carrying a planar mobile on each
// labelled corner, by total flagged-edge count. Built from the cell
// polynomial P^tau(X, t, u) = (1 + X + ... + X^{m-2}) sum_k t^k u^{(m-1)k-1}
// r_k(X) with the substitutions t <- z, u <- T(z).
inline TruncatedSeries H_tau(int m, const std::vector<int>& D, int tau, int n, int N) {
    TruncatedSeries T = planar_series(m, D, N);
    LaurentPoly Ptau(N);
    for (int k : D) {
        TruncatedSeries zk = TruncatedSeries::variable(N).pow(k);
        TruncatedSeries w = zk * T.pow((m - 1) * k - 1);
        for (const auto& [inc, cnt] : r_k_walks(m, k, tau)) {
            TruncatedSeries term = BigRat(cnt) * w;
            for (int b = 0; b <= m - 2; ++b) {
                auto [it, fresh] = Ptau.coef.try_emplace(inc + b, term);
                if (!fresh) it->second = it->second + term;
            }
        }
    }
    LaurentPoly S = chain_series(Ptau, N);
    return S.get(n);
}

// H^0_n(z) = M_n(t(z)) with t(z) = z T(z)^{m-1}.
inline TruncatedSeries H_zero(int m, const std::vector<int>& D, int n, int N) {
    TruncatedSeries T = planar_series(m, D, N);
    TruncatedSeries tz = TruncatedSeries::variable(N) * T.pow(m - 1);
    return chain_series_Mn(m, D, n, N).compose(tz);
}

// ----- Puiseux fits -----------------------------------------------------------

struct PuiseuxFit {
    Real slope, amplitude;
};

// Log-log least-squares fit of y(eps) ~ A eps^s on a geometric grid of eps.
inline PuiseuxFit puiseux_fit(const std::function<Real(const Real&)>& y_of_eps,
                              double eps_hi = 1e-3, double eps_lo = 1e-6, int npts = 10) {
    std::vector<Real> xs, ys;
    for (int i = 0; i < npts; ++i) {
        Real eps = Real(eps_hi) * pow(Real(eps_lo) / Real(eps_hi), Real(i) / (npts - 1));
        xs.push_back(log(eps));
        ys.push_back(log(y_of_eps(eps)));
    }
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < npts; ++i) {
        sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
    }
    Real n = npts;
    PuiseuxFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.amplitude = exp((sy - f.slope * sx) / n);
    return f;
}

// Numeric planar series value T(z) on the principal branch, for z < z_c.
inline Real planar_series_at(int m, const std::vector<int>& D, const Real& z,
                             const Real& T_hi) {
    auto phi = [&](const Real& T) {
        Real s = 1 - T;
        for (int k : D)
            s += Real(binomial(m * k - 1, k)) * pow(z, k) * pow(T, (m - 1) * k);
        return s;
    };
    Real lo = 1, hi = T_hi;  // phi(1) > 0, phi(T_c) < 0 for z < z_c
    for (int i = 0; i < 400; ++i) {
        Real mid = (lo + hi) / 2;
        (phi(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace surfmap
