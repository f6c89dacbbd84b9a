#include "melonic/families.hpp"

#include <stdexcept>
#include <string>

namespace melonic {

namespace {

IntPoly t_var() { return IntPoly::var(Basis::T); }
IntPoly tc(long long c) { return IntPoly::constant(c, Basis::T); }
IntPoly t_plus(long long c) { return IntPoly(Basis::T, {c, 1}); }

BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long neg_one_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

// 1 - (2+t) r + 2 r^2
RPoly a_denominator() { return {tc(1), -t_plus(2), tc(2)}; }

IntPoly prefactor(int t_exp, int tp1_exp) {
    return t_var().pow(static_cast<unsigned>(t_exp)) * IntPoly::linear_power(1, static_cast<unsigned>(tp1_exp));
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::vector<IntPoly> A_sequence(int nmax) {
    require(nmax >= 0, "A_sequence requires n >= 0");
    return rational_expand({tc(1), tc(-1)}, a_denominator(), static_cast<std::size_t>(nmax)).coeffs();
}

std::vector<IntPoly> Aprime_sequence(int nmax) {
    require(nmax >= 0, "Aprime_sequence requires n >= 0");
    return rational_expand({tc(1), tc(-2), tc(1)}, a_denominator(), static_cast<std::size_t>(nmax)).coeffs();
}

IntPoly A_poly(int n) { return A_sequence(n).back(); }
IntPoly Aprime_poly(int n) { return Aprime_sequence(n).back(); }

IntPoly gamma_binomial(int n) {
    require(n >= 0, "gamma_binomial requires n >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int j = 0; 2 * j <= 2 * n; ++j)
        for (int i = 0; i <= j && i <= n; ++i)
            c[static_cast<std::size_t>(i)] += binom(n + i, 2 * j) * binom(j, i) * neg_one_pow(j - i);
    return IntPoly(Basis::T, std::move(c));
}

IntPoly gamma_binomial_S(int n) {
    require(n >= 0, "gamma_binomial_S requires n >= 0");
    // binom(-1, 0) counts as 1 here
    auto b = [](long long top, long long k) -> BigInt { return (top == -1 && k == 0) ? BigInt(1) : binom(top, k); };
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i)] += b(n - j, i) * b(i + j - 1, j) * (BigInt(1) << (n - i - j));
    return IntPoly(Basis::S, std::move(c));
}

IntPoly gammaprime_binomial(int n) {
    require(n >= 1, "gammaprime_binomial requires n >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int j = 1; 2 * j - 1 <= 2 * n; ++j)
        for (int i = 0; i <= j && i <= n; ++i)
            c[static_cast<std::size_t>(i)] += binom(n + i - 1, 2 * j - 1) * binom(j, i) * neg_one_pow(j - i);
    return IntPoly(Basis::T, std::move(c));
}

GrothendieckClass gamma_class(int n) {
    require(n >= 1, "gamma_class requires n >= 1");
    return {prefactor(n, 2 * n + 1) * A_poly(n), 4 * n + 1};
}

GrothendieckClass gammaprime_class(int n) {
    require(n >= 2, "gammaprime_class requires n >= 2");
    return {prefactor(n - 1, 2 * n - 3) * Aprime_poly(n), 4 * n - 4};
}

IntPoly C_poly(int n) {
    require(n >= 0, "C_poly requires n >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = binom(i, n - i);
    return IntPoly(Basis::T, std::move(c));
}

IntPoly C_series_coeff(int n) {
    require(n >= 0, "C_series_coeff requires n >= 0");
    return rational_expand({tc(1)}, {tc(1), -t_var(), -t_var()}, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

GrothendieckClass gamma3_class(int n) {
    require(n >= 1, "gamma3_class requires n >= 1");
    return {IntPoly::linear_power(1, static_cast<unsigned>(2 * n + 1)) * C_poly(n), 3 * n + 1};
}

RPoly gammav_numerator(int v) {
    require(v >= 4, "gammav requires v >= 4");
    IntPoly n1(Basis::T);
    for (int i = 0; i <= v - 4; ++i) n1 += tc(neg_one_pow(v - i)).shift_up(static_cast<unsigned>(i));
    return {tc(1), -n1};
}

RPoly gammav_denominator(int v) {
    require(v >= 4, "gammav requires v >= 4");
    IntPoly d1 = tc(-v).shift_up(static_cast<unsigned>(v - 3));
    for (int i = 0; i <= v - 3; ++i) d1 -= tc(neg_one_pow(v - i) * (i + 2)).shift_up(static_cast<unsigned>(i));
    IntPoly d2 = tc(neg_one_pow(v)).shift_up(static_cast<unsigned>(v - 4));
    for (int i = 0; i <= v - 4; ++i)
        d2 += tc(neg_one_pow(v - i) * (v - 3 - i)).shift_up(static_cast<unsigned>(v - 4 + i));
    return {tc(1), d1, d2};
}

IntPoly Av_poly(int v, int n) {
    require(n >= 0, "Av_poly requires n >= 0");
    return rational_expand(gammav_numerator(v), gammav_denominator(v), static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

GrothendieckClass gammav_class(int v, int n) {
    require(v >= 4 && n >= 1, "gammav_class requires v >= 4, n >= 1");
    return {prefactor(n, 2 * n + 1) * Av_poly(v, n), v * n + 1};
}

IntPoly sigma_poly(int s, int n) {
    require(s >= 1 && n >= 1, "sigma_poly requires s, n >= 1");
    const RPoly num{tc(1), tc(-2), IntPoly(Basis::T, {-(s - 2), s - 1})};
    return rational_expand(num, a_denominator(), static_cast<std::size_t>(n) + 1)[static_cast<std::size_t>(n) + 1];
}

GrothendieckClass sigma_class(int s, int n) {
    require(s >= 1 && n >= 1, "sigma_class requires s, n >= 1");
    return {prefactor(s * n, 2 * s * n - 1) * A_poly(n).pow(static_cast<unsigned>(s - 1)) * sigma_poly(s, n), 4 * s * n};
}

PolySeries tower_series(const GrothendieckClass& base, bool e_is_bridge,
                        const std::optional<GrothendieckClass>& base_minus_e, std::size_t order) {
    RPoly num;
    if (e_is_bridge) {
        num = {base.poly, -base.poly};
    } else {
        if (!base_minus_e) throw std::invalid_argument("tower_series: a non-bridge edge needs U(G \\ e)");
        num = {base.poly, t_plus(-1) * base_minus_e->poly - base.poly};
    }
    return substitute_rho(rational_expand(num, {tc(1), -t_plus(2), tc(2)}, order));
}

bool satisfies_tower_recursion(const std::vector<IntPoly>& seq, std::size_t from) {
    const IntPoly tp1 = t_plus(1);
    const IntPoly a = t_var() * tp1 * tp1 * t_plus(2);
    const IntPoly b = tc(2) * t_var() * t_var() * tp1.pow(4);
    for (std::size_t n = std::max<std::size_t>(from, 1); n + 1 < seq.size(); ++n)
        if (seq[n + 1] != a * seq[n] - b * seq[n - 1]) return false;
    return true;
}

GrothendieckClass vacuum_from_pair(const GrothendieckClass& u_bar, const GrothendieckClass& u) {
    if (u_bar.edges != u.edges + 4)
        throw MismatchedPair("vacuum_from_pair: cut graph has " + std::to_string(u_bar.edges) + " edges, expected " +
                             std::to_string(u.edges + 4));
    const IntPoly t2 = t_var() * IntPoly::linear_power(1, 2);
    const IntPoly num = u_bar.poly - t2 * u.poly;
    return {exact_div(num, t_var() * IntPoly::linear_power(1, 4)), u_bar.edges - 5};
}

IntPoly check_divisibility(int n) {
    require(n >= 1, "check_divisibility requires n >= 1");
    return exact_div(gammaprime_class(2 * n + 1).poly, gamma_class(n).poly);
}

bool check_sigma_identity(int s, int n) {
    require(s >= 1 && n >= 1 && s <= 2 * n, "check_sigma_identity requires 1 <= s <= 2n");
    const IntPoly rhs = prefactor(n, 2 * n - s) * gamma_class(n).poly.pow(static_cast<unsigned>(s - 1)) * sigma_poly(s, n);
    return sigma_class(s, n).poly == rhs;
}

HodgeDeligne hodge_deligne_gamma(int n) {
    require(n >= 1, "hodge_deligne_gamma requires n >= 1");
    // x stands for uv
    const IntPoly x = IntPoly::var(Basis::L);
    const IntPoly x_minus_one(Basis::L, {-1, 1});
    const IntPoly a = A_poly(n);
    IntPoly composed(Basis::L);
    for (int i = a.degree(); i >= 0; --i)
        composed = composed * x_minus_one + IntPoly::constant(a.coeff(static_cast<std::size_t>(i)), Basis::L);
    const IntPoly p = x_minus_one.pow(static_cast<unsigned>(n)) * x.pow(static_cast<unsigned>(2 * n + 1)) * composed;
    return HodgeDeligne{std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end())};
}

MelonicConstruction gamma_construction(int n) { return gammav_construction(4, n); }

MelonicConstruction gammaprime_construction(int n) {
    require(n >= 2, "gammaprime_construction requires n >= 2");
    MelonicConstruction c;
    c.stages.push_back(Stage{{4}, 0, 1});
    if (n >= 3) c.stages.push_back(Stage{{1, 3, 1}, 1, 1});
    for (int s = 3; s <= n - 1; ++s) c.stages.push_back(Stage{{1, 3, 1}, s - 1, 2});
    return c;
}

MelonicConstruction gammav_construction(int v, int n) {
    require(v >= 3 && n >= 1, "gammav_construction requires v >= 3, n >= 1");
    MelonicConstruction c;
    c.stages.push_back(Stage{{1, v - 1, 1}, 0, 1});
    for (int s = 2; s <= n; ++s) c.stages.push_back(Stage{{1, v - 1, 1}, s - 1, 2});
    return c;
}

OvalConstruction sigma_construction(int s, int n) {
    return tree_of_ovals_to_construction(OvalTree::star(s, n));
}

}  // namespace melonic
