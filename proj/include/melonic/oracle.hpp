#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "melonic/construction.hpp"
#include "melonic/motive.hpp"

namespace melonic {

/// Psi_G as a set of monomials; bit e of a mask is the variable t_e.
/// Each monomial is the complement of a spanning tree.
struct KirchhoffPoly {
    int edge_count = 0;
    int vertex_count = 0;
    std::vector<std::uint64_t> monomials;  // sorted, distinct

    /// First Betti number, the degree of every monomial.
    int degree() const { return edge_count - vertex_count + 1; }
};

/// Spanning trees by deletion/contraction; parallel edges are distinct.
/// Throws std::invalid_argument for disconnected graphs or more than 64 edges.
KirchhoffPoly kirchhoff(const Graph& g);

/// Addition and multiplication tables of F_q, q in {2,3,4,5}.
/// F_4 = F_2[x]/(x^2+x+1), element a1*x + a0 stored as 2*a1 + a0.
struct FiniteField {
    int q = 0;
    std::vector<std::uint8_t> add, mul;  // q*q, row-major
    std::uint8_t plus(std::uint8_t a, std::uint8_t b) const { return add[a * q + b]; }
    std::uint8_t times(std::uint8_t a, std::uint8_t b) const { return mul[a * q + b]; }
};
const FiniteField& finite_field(int q);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000'000;

/// #{t in F_q^n : Psi(t) != 0} by exhaustive evaluation. The range is split
/// across `workers` threads; the count does not depend on the split.
std::uint64_t point_count(const KirchhoffPoly& psi, int q, std::uint64_t budget = kDefaultPointBudget,
                          unsigned workers = 1);
std::uint64_t point_count(const Graph& g, int q, std::uint64_t budget = kDefaultPointBudget, unsigned workers = 1);

struct PointCheck {
    int q = 0;
    BigInt expected;
    std::uint64_t got = 0;
    bool ok = false;
};

struct VerifyReport {
    bool ok = true;
    bool degree_ok = true;   // deg Psi == loop number
    bool edges_ok = true;    // deg U in L == edge count
    std::vector<PointCheck> checks;
    std::string failure;     // empty when ok
};

VerifyReport verify_class(const Graph& g, const GrothendieckClass& u, const std::vector<int>& qs,
                          std::uint64_t budget = kDefaultPointBudget, unsigned workers = 1);
VerifyReport verify_class(const MelonicConstruction& c, const GrothendieckClass& u, const std::vector<int>& qs,
                          std::uint64_t budget = kDefaultPointBudget, unsigned workers = 1);

/// Matrix-tree theorem: determinant of a reduced Laplacian, by fraction-free
/// elimination. Throws std::overflow_error if an intermediate leaves int64.
std::int64_t spanning_tree_count(const Graph& g);

}  // namespace melonic
