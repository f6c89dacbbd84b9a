#include "melonic/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace melonic {

PolySeries::PolySeries(std::size_t order, Basis basis) : coeffs_(order + 1, IntPoly(basis)) {}

PolySeries::PolySeries(std::vector<IntPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PolySeries needs at least one coefficient");
    const Basis b = coeffs_.front().basis();
    for (const auto& c : coeffs_) {
        if (c.basis() != b) throw BasisMismatch(b, c.basis());
    }
}

PolySeries PolySeries::truncate(std::size_t order) const {
    if (order > this->order()) throw std::out_of_range("cannot truncate to a higher order");
    return PolySeries(std::vector<IntPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

PolySeries PolySeries::times(const RPoly& p) const {
    PolySeries out(order(), basis());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (std::size_t n = i; n <= order(); ++n) out.coeffs_[n] += p[i] * coeffs_[n - i];
    }
    return out;
}

PolySeries rational_expand(const RPoly& numerator, const RPoly& denominator, std::size_t order) {
    if (denominator.empty()) throw std::invalid_argument("empty denominator");
    const Basis basis = denominator.front().basis();
    if (denominator.front() != IntPoly::constant(1, basis)) {
        throw std::invalid_argument("denominator constant term must be 1");
    }
    PolySeries s(order, basis);
    for (std::size_t n = 0; n <= order; ++n) {
        IntPoly c = n < numerator.size() ? numerator[n] : IntPoly(basis);
        const std::size_t top = std::min(n, denominator.size() - 1);
        for (std::size_t k = 1; k <= top; ++k) {
            if (!denominator[k].is_zero()) c -= denominator[k] * s[n - k];
        }
        s[n] = std::move(c);
    }
    return s;
}

PolySeries substitute_rho(const PolySeries& s) {
    if (s.basis() != Basis::T) throw BasisMismatch(Basis::T, s.basis());
    const IntPoly step = IntPoly::var(Basis::T) * IntPoly::linear_power(1, 2);
    PolySeries out = s;
    IntPoly factor = IntPoly::constant(1);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        factor *= step;
        out[n] = factor * s[n];
    }
    return out;
}

}  // namespace melonic
