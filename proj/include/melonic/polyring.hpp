#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace melonic {

using BigInt = boost::multiprecision::cpp_int;

/// Variable of a class polynomial: L = [A^1], T = L - 1, S = T - 1.
enum class Basis { L, T, S };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

class BasisMismatch : public std::invalid_argument {
public:
    BasisMismatch(Basis a, Basis b);
};

class InexactDivision : public std::domain_error {
public:
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i; trailing zeros are never stored.
class IntPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    explicit IntPoly(Basis basis = Basis::T) : basis_(basis) {}
    IntPoly(Basis basis, std::vector<BigInt> coeffs);
    IntPoly(Basis basis, std::initializer_list<long long> coeffs);

    static IntPoly constant(const BigInt& c, Basis basis = Basis::T);
    /// The basis variable itself.
    static IntPoly var(Basis basis = Basis::T);
    /// (x + c)^k
    static IntPoly linear_power(long long c, unsigned k, Basis basis = Basis::T);

    Basis basis() const { return basis_; }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const;
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    IntPoly with_basis_tag(Basis b) const { IntPoly p = *this; p.basis_ = b; return p; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& s);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    IntPoly pow(unsigned k) const;
    /// Multiply by x^k.
    IntPoly shift_up(unsigned k) const;

private:
    void trim();

    Basis basis_;
    std::vector<BigInt> coeffs_;
};

/// Total order used for sorted class sets: by degree, then by coefficients
/// from the top down.
bool poly_less(const IntPoly& a, const IntPoly& b);
struct IntPolyLess {
    bool operator()(const IntPoly& a, const IntPoly& b) const { return poly_less(a, b); }
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);

struct DivMod {
    IntPoly quotient;
    IntPoly remainder;
};
/// Division by a polynomial whose leading coefficient is +-1 never leaves
/// fractions; other divisors throw InexactDivision when a step is not integral.
DivMod divmod(const IntPoly& a, const IntPoly& b);
/// q with q * b == a; throws InexactDivision otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

/// Re-expand p in another basis (Taylor shift by +-1 or +-2).
IntPoly change_basis(const IntPoly& p, Basis target);

BigInt eval_int(const IntPoly& p, const BigInt& x);
bool is_nonneg_coeffs(const IntPoly& p);
bool is_log_concave(std::span<const BigInt> seq);
inline bool is_log_concave(const IntPoly& p) { return is_log_concave(p.coeffs()); }

/// Euler characteristic: the class evaluated at L = 1.
BigInt euler_characteristic(const IntPoly& p);

/// A polynomial in the product uv; coeffs[k] multiplies u^k v^k.
struct HodgeDeligne {
    std::vector<BigInt> coeffs;
    std::string render() const;
    friend bool operator==(const HodgeDeligne&, const HodgeDeligne&) = default;
};
HodgeDeligne specialize_hodge_deligne(const IntPoly& p);

/// Descending expanded form, e.g. "T^3+5T^2+4T-2".
std::string render_expanded(const IntPoly& p);
/// Best-effort factored form: powers of small linear factors and small monic
/// quadratics pulled out, the cofactor printed expanded.
std::string render_factored(const IntPoly& p);
std::string render_latex(const IntPoly& p);

}  // namespace melonic
