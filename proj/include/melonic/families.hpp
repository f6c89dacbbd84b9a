#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "melonic/construction.hpp"
#include "melonic/motive.hpp"
#include "melonic/polyring.hpp"
#include "melonic/series.hpp"

namespace melonic {

// Family polynomials. A_n and A'_n come from
//   sum A_n r^n = (1-r)/(1-(2+t)r+2r^2),  sum A'_n r^n = (1-r)^2/(1-(2+t)r+2r^2).
IntPoly A_poly(int n);
IntPoly Aprime_poly(int n);
/// A_0..A_nmax from a single expansion.
std::vector<IntPoly> A_sequence(int nmax);
std::vector<IntPoly> Aprime_sequence(int nmax);

/// Double-binomial closed forms: sum binom(n+i,2j) binom(j,i) (-1)^{j-i} T^i,
/// its S-basis companion, and the analogue for A'_n.
IntPoly gamma_binomial(int n);
IntPoly gamma_binomial_S(int n);
IntPoly gammaprime_binomial(int n);

/// U(Gamma_n) = T^n (T+1)^{2n+1} A_n(T), 4n+1 edges.
GrothendieckClass gamma_class(int n);
/// U(Gamma'_n) = T^{n-1} (T+1)^{2n-3} A'_n(T), 4n-4 edges.
GrothendieckClass gammaprime_class(int n);

/// C_n = sum_i binom(i, n-i) T^i, and the same from 1/(1 - Tr - Tr^2).
IntPoly C_poly(int n);
IntPoly C_series_coeff(int n);
/// U(Gamma^3_n) = (T+1)^{2n+1} C_n(T).
GrothendieckClass gamma3_class(int n);

/// Numerator and denominator of the valence-v generating function (v >= 4).
RPoly gammav_numerator(int v);
RPoly gammav_denominator(int v);
IntPoly Av_poly(int v, int n);
/// U(Gamma^v_n) = T^n (T+1)^{2n+1} A^v_n(T), vn+1 edges.
GrothendieckClass gammav_class(int v, int n);

/// sigma^s_n: coefficient of r^{n+1} in (1-2r+((s-1)t-(s-2))r^2)/(1-(2+t)r+2r^2).
IntPoly sigma_poly(int s, int n);
/// U(Sigma^s_n) = T^{sn} (T+1)^{2sn-1} A_n^{s-1} sigma^s_n, 4sn edges.
GrothendieckClass sigma_class(int s, int n);

/// Classes U(G_n) of the tower of (1,3,1)-bananifications started at an edge e
/// of G, as a series in rho. A non-bridge e needs U(G \ e).
PolySeries tower_series(const GrothendieckClass& base, bool e_is_bridge,
                        const std::optional<GrothendieckClass>& base_minus_e, std::size_t order);
/// U_{n+1} = T(T+1)^2(T+2) U_n - 2T^2(T+1)^4 U_{n-1} for every n >= from.
bool satisfies_tower_recursion(const std::vector<IntPoly>& seq, std::size_t from);

class MismatchedPair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vacuum class from the cut graph and the crossed graph:
/// (U_bar - T(T+1)^2 U) / (T(T+1)^4). The cut graph has four more edges;
/// MismatchedPair otherwise, InexactDivision if the quotient is not integral.
GrothendieckClass vacuum_from_pair(const GrothendieckClass& u_bar, const GrothendieckClass& u);

/// U(Gamma'_{2n+1}) / U(Gamma_n); throws InexactDivision if it does not divide.
IntPoly check_divisibility(int n);
/// U(Sigma^s_n) == T^n (T+1)^{2n-s} U(Gamma_n)^{s-1} sigma^s_n(T); requires s <= 2n.
bool check_sigma_identity(int s, int n);

/// (uv-1)^n (uv)^{2n+1} A_n(uv-1), assembled directly in the variable uv.
HodgeDeligne hodge_deligne_gamma(int n);

// Explicit constructions of the families.
MelonicConstruction gamma_construction(int n);
MelonicConstruction gammaprime_construction(int n);
MelonicConstruction gammav_construction(int v, int n);  // v >= 3
OvalConstruction sigma_construction(int s, int n);

}  // namespace melonic
