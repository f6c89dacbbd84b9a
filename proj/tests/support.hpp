#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "melonic/construction.hpp"
#include "melonic/polyring.hpp"

namespace testsupport {

using melonic::BigInt;
using melonic::Basis;
using melonic::IntPoly;

inline IntPoly T(std::initializer_list<long long> c) { return IntPoly(Basis::T, c); }
inline IntPoly S(std::initializer_list<long long> c) { return IntPoly(Basis::S, c); }

// (x + c)^k by repeated multiplication in the given basis
inline IntPoly lin(long long c, unsigned k, Basis b = Basis::T) {
    IntPoly out = IntPoly::constant(1, b);
    for (unsigned i = 0; i < k; ++i) out *= IntPoly(b, {c, 1});
    return out;
}

inline IntPoly random_poly(std::mt19937_64& rng, Basis b, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<BigInt> c;
    for (int i = 0; i <= d; ++i) {
        BigInt v = rng();
        if (rng() & 1) v = -v;
        c.push_back(v);
    }
    return IntPoly(b, std::move(c));
}

/// A random valid construction; may target 1-labels, so it is usually not reduced.
inline melonic::MelonicConstruction random_construction(std::mt19937_64& rng, int stages, int max_entry = 4,
                                                        int max_len = 4) {
    melonic::MelonicConstruction c;
    std::uniform_int_distribution<int> entry(1, max_entry), len(1, max_len);
    auto banana = [&](bool first) {
        std::vector<int> b(static_cast<std::size_t>(len(rng)));
        for (auto& a : b) a = entry(rng);
        if (first && b.size() == 1 && b[0] == 1) b[0] = 2;
        return b;
    };
    c.stages.push_back({banana(true), 0, 1});
    std::vector<std::vector<int>> used{std::vector<int>(c.stages[0].banana.size(), 0)};
    for (int s = 1; s < stages; ++s) {
        std::vector<std::pair<int, int>> open;
        for (std::size_t i = 0; i < c.stages.size(); ++i)
            for (std::size_t j = 0; j < c.stages[i].banana.size(); ++j)
                if (used[i][j] < c.stages[i].banana[j]) open.emplace_back(static_cast<int>(i), static_cast<int>(j));
        if (open.empty()) break;
        const auto [i, j] = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        ++used[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        c.stages.push_back({banana(false), i + 1, j + 1});
        used.emplace_back(c.stages.back().banana.size(), 0);
    }
    return c;
}

/// Same tree with white children of every black node shuffled.
inline melonic::WhitePtr shuffled(const melonic::WhitePtr& w, std::mt19937_64& rng) {
    if (!w) return w;
    auto out = std::make_shared<melonic::WhiteNode>();
    for (const auto& b : w->blacks) {
        melonic::BlackNode nb{b.label, {}};
        for (const auto& ch : b.children) nb.children.push_back(shuffled(ch, rng));
        std::shuffle(nb.children.begin(), nb.children.end(), rng);
        out->blacks.push_back(std::move(nb));
    }
    return out;
}

}  // namespace testsupport
