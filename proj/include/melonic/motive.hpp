#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "melonic/construction.hpp"
#include "melonic/polyring.hpp"

namespace melonic {

/// Class of the complement of the affine graph hypersurface, kept in basis T.
struct GrothendieckClass {
    IntPoly poly{Basis::T};
    int edges = 0;

    friend bool operator==(const GrothendieckClass&, const GrothendieckClass&) = default;
};

/// Class of the m-banana: m T^{m-1} + T (T^m - (-1)^m) / (T+1).
GrothendieckClass banana_class(int m);

/// Coefficients of the multiple-edge formula
/// U(G_me) = f_m U(G) + g_m U(G/e) + h_m U(G \ e).
struct Fgh {
    IntPoly f, g, h;
};
Fgh fgh(int m);

GrothendieckClass join_at_vertex(const std::vector<GrothendieckClass>& parts);
GrothendieckClass subdivide(const GrothendieckClass& u, int k);

/// The double-binomial S-expansion of f_m; equals change_basis(f_m, S).
IntPoly claim_pos_expansion(int m);

/// Evaluates the deletion-contraction recursion on melonic trees.
///
/// Trees are first normalized without changing the class: reduced, stages
/// consisting of a single banana merged into the parent label, and the bananas
/// of every string sorted (permuting the blocks of a series string preserves
/// the cycle matroid). A root string of several bananas factors as a product
/// (blocks joined at cut vertices). Otherwise the chosen leaf stage is removed
/// by the three-term recursion. Results are cached by canonical key.
///
/// class_of is safe to call from several threads; the cache is guarded by a
/// shared mutex and concurrent inserts of the same key store equal values.
class ClassEngine {
public:
    explicit ClassEngine(bool memoize = true) : memoize_(memoize) {}

    IntPoly class_poly(const MelonTree& t);
    GrothendieckClass class_of(const MelonTree& t);
    GrothendieckClass class_of(const MelonicConstruction& c);

    std::size_t cache_size() const;
    void clear_cache();

private:
    IntPoly eval(const WhitePtr& root);
    IntPoly eval_normalized(const WhitePtr& root, const std::string& key);

    bool memoize_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, IntPoly> cache_;
};

/// Process-wide engine used by the free functions below.
ClassEngine& default_engine();

GrothendieckClass class_of(const MelonicConstruction& c);
GrothendieckClass class_of(const MelonTree& t);

/// Distinct classes per edge count, deduplicated by polynomial equality.
using ClassCatalogue = std::map<int, std::vector<IntPoly>>;
/// `workers` > 1 splits the class evaluations over threads; the result does
/// not depend on it.
ClassCatalogue distinct_classes(int max_edges, unsigned workers = 1);

}  // namespace melonic
