#include "melonic/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace melonic {

std::string_view basis_name(Basis b) {
    switch (b) {
        case Basis::L: return "L";
        case Basis::T: return "T";
        case Basis::S: return "S";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    if (name == "L") return Basis::L;
    if (name == "T") return Basis::T;
    if (name == "S") return Basis::S;
    throw std::invalid_argument("unknown basis '" + std::string(name) + "' (expected L, T or S)");
}

BasisMismatch::BasisMismatch(Basis a, Basis b)
    : std::invalid_argument("basis mismatch: " + std::string(basis_name(a)) + " vs " +
                            std::string(basis_name(b)) + " (convert explicitly)") {}

namespace {

void require_same_basis(const IntPoly& a, const IntPoly& b) {
    if (a.basis() != b.basis()) throw BasisMismatch(a.basis(), b.basis());
}

// Value of L expressed as x + offset, x being the basis variable.
int l_offset(Basis b) {
    switch (b) {
        case Basis::L: return 0;
        case Basis::T: return 1;
        case Basis::S: return 2;
    }
    return 0;
}

}  // namespace

IntPoly::IntPoly(Basis basis, std::vector<BigInt> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
    trim();
}

IntPoly::IntPoly(Basis basis, std::initializer_list<long long> coeffs) : basis_(basis) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const BigInt& c, Basis basis) {
    return IntPoly(basis, std::vector<BigInt>{c});
}

IntPoly IntPoly::var(Basis basis) { return IntPoly(basis, {0, 1}); }

IntPoly IntPoly::linear_power(long long c, unsigned k, Basis basis) {
    return IntPoly(basis, {c, 1}).pow(k);
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    require_same_basis(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    require_same_basis(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    require_same_basis(a, b);
    if (a.is_zero() || b.is_zero()) return IntPoly(a.basis());
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const BigInt& ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += ai * b.coeffs_[j];
    }
    return IntPoly(a.basis(), std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::pow(unsigned k) const {
    IntPoly result = constant(1, basis_);
    IntPoly base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

IntPoly IntPoly::shift_up(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> c(k, BigInt(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(basis_, std::move(c));
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.basis() != b.basis()) return a.basis() < b.basis();
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    }
    return false;
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

DivMod divmod(const IntPoly& a, const IntPoly& b) {
    require_same_basis(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = b.size() - 1;
    const BigInt& lead = b.leading();
    if (rem.size() <= db) return {IntPoly(a.basis()), a};
    std::vector<BigInt> quo(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(rem[i], lead, q, r);
        if (r != 0) throw InexactDivision("inexact division: non-integral quotient coefficient");
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
    }
    return {IntPoly(a.basis(), std::move(quo)), IntPoly(a.basis(), std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    DivMod dm = divmod(a, b);
    if (!dm.remainder.is_zero()) {
        throw InexactDivision("inexact division: remainder " + render_expanded(dm.remainder));
    }
    return std::move(dm.quotient);
}

bool divides(const IntPoly& b, const IntPoly& a) {
    try {
        return divmod(a, b).remainder.is_zero();
    } catch (const InexactDivision&) {
        return false;
    }
}

IntPoly change_basis(const IntPoly& p, Basis target) {
    if (p.basis() == target) return p;
    // x_source = y_target + shift
    const long long shift = l_offset(target) - l_offset(p.basis());
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (std::size_t i = p.size(); i-- > 0;) {
        // out <- out * (y + shift) + c_i
        out.emplace_back(0);
        for (std::size_t j = out.size() - 1; j > 0; --j) out[j] = out[j - 1] + out[j] * shift;
        out[0] = out[0] * shift + p.coeffs()[i];
    }
    return IntPoly(target, std::move(out));
}

BigInt eval_int(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
    return acc;
}

bool is_nonneg_coeffs(const IntPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c >= 0; });
}

bool is_log_concave(std::span<const BigInt> seq) {
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        if (seq[i - 1] * seq[i + 1] > seq[i] * seq[i]) return false;
    }
    return true;
}

BigInt euler_characteristic(const IntPoly& p) { return eval_int(p, BigInt(1 - l_offset(p.basis()))); }

HodgeDeligne specialize_hodge_deligne(const IntPoly& p) {
    IntPoly inL = change_basis(p, Basis::L);
    return HodgeDeligne{std::vector<BigInt>(inL.coeffs().begin(), inL.coeffs().end())};
}

namespace {

struct Style {
    bool latex = false;
};

std::string power_suffix(std::size_t k, const Style& st) {
    if (k == 1) return "";
    return st.latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
}

// Terms in descending degree; `monomial(k)` renders the variable part of degree k.
template <class Monomial>
std::string render_terms(std::span<const BigInt> c, Monomial monomial) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        const BigInt& a = c[k];
        if (a == 0) continue;
        const bool neg = a < 0;
        BigInt mag = neg ? BigInt(-a) : a;
        if (neg) os << '-';
        else if (!first) os << '+';
        if (k == 0 || mag != 1) os << mag;
        if (k > 0) os << monomial(k);
        first = false;
    }
    return os.str();
}

std::string render_expanded_styled(const IntPoly& p, const Style& st) {
    const std::string x(basis_name(p.basis()));
    return render_terms(p.coeffs(), [&](std::size_t k) { return x + power_suffix(k, st); });
}

std::string render_factored_styled(const IntPoly& p, const Style& st) {
    if (p.degree() <= 1) return render_expanded_styled(p, st);
    std::ostringstream os;
    IntPoly rest = p;
    auto emit = [&](const IntPoly& factor, unsigned mult) {
        const std::string body = render_expanded_styled(factor, st);
        if (factor.degree() == 1 && factor.coeff(0) == 0) {
            os << body;
        } else {
            os << '(' << body << ')';
        }
        if (mult > 1) os << power_suffix(mult, st);
    };
    auto extract = [&](const IntPoly& factor) {
        unsigned mult = 0;
        while (rest.degree() >= factor.degree()) {
            DivMod dm;
            try {
                dm = divmod(rest, factor);
            } catch (const InexactDivision&) {
                break;
            }
            if (!dm.remainder.is_zero()) break;
            rest = std::move(dm.quotient);
            ++mult;
        }
        if (mult > 0) emit(factor, mult);
    };
    for (long long c : {0, 1, 2, 3, 4, 5, -1, -2, -3}) extract(IntPoly(p.basis(), {c, 1}));
    for (long long b = -6; b <= 6; ++b) {
        for (long long c = -6; c <= 6; ++c) {
            if (c == 0) continue;
            // skip quadratics with integer roots; linear extraction already ran
            const long long disc = b * b - 4 * c;
            bool square = false;
            for (long long s = 0; s * s <= disc; ++s) square = square || s * s == disc;
            if (square) continue;
            if (rest.degree() < 3) break;
            extract(IntPoly(p.basis(), {c, b, 1}));
        }
    }
    if (rest.degree() >= 1) {
        emit(rest, 1);
    } else if (rest.coeff(0) != 1) {
        const std::string head = os.str();
        if (rest.coeff(0) == -1) return "-" + head;
        return render_expanded_styled(rest, st) + head;
    }
    return os.str();
}

}  // namespace

std::string render_expanded(const IntPoly& p) { return render_expanded_styled(p, Style{}); }
std::string render_factored(const IntPoly& p) { return render_factored_styled(p, Style{}); }
std::string render_latex(const IntPoly& p) {
    Style st;
    st.latex = true;
    return render_factored_styled(p, st);
}

std::string HodgeDeligne::render() const {
    return render_terms(coeffs, [](std::size_t k) {
        if (k == 1) return std::string("uv");
        const std::string e = std::to_string(k);
        return "u^" + e + "v^" + e;
    });
}

}  // namespace melonic
