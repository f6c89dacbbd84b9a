#pragma once

#include <cstddef>
#include <vector>

#include "melonic/polyring.hpp"

namespace melonic {

/// Polynomial in the expansion variable r whose coefficients are IntPoly in t.
/// Index i holds the coefficient of r^i.
using RPoly = std::vector<IntPoly>;

/// Truncated power series sum_{n=0}^{order} coeffs[n] r^n.
class PolySeries {
public:
    PolySeries(std::size_t order, Basis basis);
    explicit PolySeries(std::vector<IntPoly> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    Basis basis() const { return coeffs_.front().basis(); }
    const IntPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    IntPoly& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<IntPoly>& coeffs() const { return coeffs_; }

    PolySeries truncate(std::size_t order) const;
    /// Product with a polynomial in r, truncated at this series' order.
    PolySeries times(const RPoly& p) const;

    friend bool operator==(const PolySeries&, const PolySeries&) = default;

private:
    std::vector<IntPoly> coeffs_;
};

/// Expand numerator/denominator to order N; the denominator's constant term
/// must be the constant polynomial 1.
PolySeries rational_expand(const RPoly& numerator, const RPoly& denominator, std::size_t order);

/// r = T(T+1)^2 rho: the coefficient of rho^n is T^n (T+1)^{2n} times that of r^n.
PolySeries substitute_rho(const PolySeries& s);

}  // namespace melonic
