#include "melonic/motive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace melonic {

namespace {

IntPoly t_poly() { return IntPoly::var(Basis::T); }
IntPoly one() { return IntPoly::constant(1, Basis::T); }
IntPoly t_plus_one() { return IntPoly(Basis::T, {1, 1}); }
BigInt sign_pow(int m) { return (m % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace

Fgh fgh(int m) {
    if (m < 1) throw std::invalid_argument("fgh requires m >= 1");
    const IntPoly tm = t_poly().pow(static_cast<unsigned>(m));
    Fgh out;
    out.f = exact_div(tm - IntPoly::constant(sign_pow(m)), t_plus_one());
    out.g = IntPoly::constant(m) * t_poly().pow(static_cast<unsigned>(m - 1)) - out.f;
    out.h = exact_div(tm + sign_pow(m) * t_poly(), t_plus_one());
    return out;
}

GrothendieckClass banana_class(int m) {
    if (m < 1) throw std::invalid_argument("banana_class requires m >= 1");
    const Fgh c = fgh(m);
    return {IntPoly::constant(m) * t_poly().pow(static_cast<unsigned>(m - 1)) + t_poly() * c.f, m};
}

GrothendieckClass join_at_vertex(const std::vector<GrothendieckClass>& parts) {
    if (parts.empty()) throw std::invalid_argument("join_at_vertex needs at least one class");
    GrothendieckClass out{one(), 0};
    for (const auto& p : parts) {
        out.poly *= p.poly;
        out.edges += p.edges;
    }
    return out;
}

GrothendieckClass subdivide(const GrothendieckClass& u, int k) {
    if (k < 0) throw std::invalid_argument("subdivide requires k >= 0");
    return {u.poly * IntPoly::linear_power(1, static_cast<unsigned>(k)), u.edges + k};
}

IntPoly claim_pos_expansion(int m) {
    if (m < 1) throw std::invalid_argument("claim_pos_expansion requires m >= 1");
    auto binom = [](int n, int k) -> BigInt {
        if (k < 0 || n < 0 || k > n) return 0;
        BigInt r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::vector<BigInt> c(static_cast<std::size_t>(std::max(m, 1)), BigInt(0));
    for (int j = 1; j <= m - 1; ++j)
        for (int i = 1; i <= m / 2; ++i) c[static_cast<std::size_t>(j)] += binom(m - 2 * i, j - 1);
    if (m % 2 == 1) c[0] += 1;
    return IntPoly(Basis::S, std::move(c));
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

struct Norm {
    WhitePtr node;
    std::string key;
    int contrib = 0;
};

struct NormBlack {
    BlackNode black;
    std::string key;
    int contrib = 0;
};

bool norm_less(int ca, const std::string& ka, int cb, const std::string& kb) {
    return ca != cb ? ca < cb : ka < kb;
}

NormBlack finish_black(int label, std::vector<Norm> kids) {
    std::sort(kids.begin(), kids.end(),
              [](const Norm& a, const Norm& b) { return norm_less(a.contrib, a.key, b.contrib, b.key); });
    NormBlack nb;
    nb.black.label = label;
    nb.contrib = label;
    nb.key = std::to_string(label);
    if (!kids.empty()) {
        nb.key += '[';
        for (auto& k : kids) {
            nb.key += k.key;
            nb.contrib += k.contrib;
            nb.black.children.push_back(std::move(k.node));
        }
        nb.key += ']';
    }
    return nb;
}

Norm finish_white(std::vector<NormBlack> blacks) {
    std::sort(blacks.begin(), blacks.end(),
              [](const NormBlack& a, const NormBlack& b) { return norm_less(a.contrib, a.key, b.contrib, b.key); });
    auto w = std::make_shared<WhiteNode>();
    Norm out;
    out.key = "(";
    out.contrib = -1;
    for (std::size_t i = 0; i < blacks.size(); ++i) {
        if (i > 0) out.key += ',';
        out.key += blacks[i].key;
        out.contrib += blacks[i].contrib;
        w->blacks.push_back(std::move(blacks[i].black));
    }
    out.key += ')';
    out.node = std::move(w);
    return out;
}

// Re-wrap an already normalized black node (used when splicing).
NormBlack rewrap(const BlackNode& b);

Norm rewrap_white(const WhitePtr& w) {
    std::vector<NormBlack> blacks;
    for (const auto& b : w->blacks) blacks.push_back(rewrap(b));
    return finish_white(std::move(blacks));
}

NormBlack rewrap(const BlackNode& b) {
    std::vector<Norm> kids;
    for (const auto& ch : b.children) kids.push_back(rewrap_white(ch));
    return finish_black(b.label, std::move(kids));
}

// Normalizes the string `w`; returns its blacks (unsorted) so the caller can
// splice them into a parent string.
std::vector<NormBlack> normalize_blacks(const WhiteNode& w) {
    std::vector<NormBlack> out;
    for (const auto& b : w.blacks) {
        int label = b.label;
        std::vector<Norm> kids;
        std::vector<std::vector<NormBlack>> strings;
        for (const auto& ch : b.children) strings.push_back(normalize_blacks(*ch));
        for (auto& s : strings) {
            if (s.size() == 1) {
                // a single banana grafted on an edge enlarges the host banana
                label += s.front().black.label - 1;
                for (const auto& g : s.front().black.children) kids.push_back(rewrap_white(g));
            } else {
                kids.push_back(finish_white(std::move(s)));
            }
        }
        if (label == 1 && !kids.empty()) {
            // slide the string grafted on a 1-banana up into this string
            for (const auto& nb : kids.front().node->blacks) out.push_back(rewrap(nb));
        } else {
            out.push_back(finish_black(label, std::move(kids)));
        }
    }
    return out;
}

// Null node means the single edge.
Norm normalize(const WhitePtr& root) {
    if (!root) return Norm{nullptr, std::string(kSingleEdgeKey), 0};
    std::vector<NormBlack> blacks = normalize_blacks(*root);
    if (blacks.size() == 1 && blacks.front().black.label == 1 && blacks.front().black.children.empty())
        return Norm{nullptr, std::string(kSingleEdgeKey), 0};
    return finish_white(std::move(blacks));
}

// Location of a white node: sequence of (black index, child index) from the root.
using Path = std::vector<std::pair<std::size_t, std::size_t>>;

bool find_leaf_stage(const WhiteNode& w, Path& path) {
    for (std::size_t j = 0; j < w.blacks.size(); ++j) {
        for (std::size_t i = 0; i < w.blacks[j].children.size(); ++i) {
            path.emplace_back(j, i);
            find_leaf_stage(*w.blacks[j].children[i], path);
            return true;
        }
    }
    return false;
}

const WhiteNode& at(const WhitePtr& root, const Path& path) {
    const WhiteNode* w = root.get();
    for (const auto& [j, i] : path) w = w->blacks[j].children[i].get();
    return *w;
}

// Copy of the tree with the node at `path` replaced by `replacement`, or
// removed (replacement == nullptr) with the host label shifted by `delta`.
WhitePtr rebuild(const WhiteNode& w, const Path& path, std::size_t depth, const WhitePtr& replacement, int delta) {
    auto out = std::make_shared<WhiteNode>(w);
    const auto [j, i] = path[depth];
    BlackNode& host = out->blacks[j];
    if (depth + 1 == path.size()) {
        if (replacement) {
            host.children[i] = replacement;
        } else {
            host.children.erase(host.children.begin() + static_cast<std::ptrdiff_t>(i));
            host.label += delta;
        }
    } else {
        host.children[i] = rebuild(*host.children[i], path, depth + 1, replacement, delta);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Engine

ClassEngine& default_engine() {
    static ClassEngine engine;
    return engine;
}

std::size_t ClassEngine::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void ClassEngine::clear_cache() {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

IntPoly ClassEngine::class_poly(const MelonTree& t) { return eval(t.root()); }

GrothendieckClass ClassEngine::class_of(const MelonTree& t) { return {class_poly(t), t.edge_count()}; }

GrothendieckClass ClassEngine::class_of(const MelonicConstruction& c) { return class_of(to_tree(c)); }

IntPoly ClassEngine::eval(const WhitePtr& root) {
    Norm n = normalize(root);
    if (!n.node) return t_plus_one();
    return eval_normalized(n.node, n.key);
}

IntPoly ClassEngine::eval_normalized(const WhitePtr& root, const std::string& key) {
    if (memoize_) {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    IntPoly result(Basis::T);
    const WhiteNode& w = *root;
    if (w.blacks.size() > 1) {
        // blocks of the root string meet at cut vertices
        result = one();
        for (const auto& b : w.blacks) {
            auto single = std::make_shared<WhiteNode>();
            single->blacks.push_back(b);
            result *= eval(single);
        }
    } else if (w.blacks.front().children.empty()) {
        result = banana_class(w.blacks.front().label).poly;
    } else {
        Path path;
        find_leaf_stage(w, path);
        const WhiteNode& leaf = at(root, path);
        std::vector<int> labels;
        for (const auto& b : leaf.blacks) labels.push_back(b.label);
        const auto max_it = std::max_element(labels.begin(), labels.end());  // first maximal entry
        if (*max_it == 1) {
            const WhitePtr without = rebuild(w, path, 0, nullptr, 0);
            result = IntPoly::linear_power(1, static_cast<unsigned>(labels.size() - 1)) * eval(without);
        } else {
            const std::size_t m = static_cast<std::size_t>(max_it - labels.begin());
            const Fgh c = fgh(*max_it);

            auto with_one = std::make_shared<WhiteNode>(leaf);
            with_one->blacks[m].label = 1;
            auto dropped = std::make_shared<WhiteNode>(leaf);
            dropped->blacks.erase(dropped->blacks.begin() + static_cast<std::ptrdiff_t>(m));

            const IntPoly u1 = eval(rebuild(w, path, 0, with_one, 0));
            const IntPoly u2 = eval(rebuild(w, path, 0, dropped, 0));
            const IntPoly u3 = eval(rebuild(w, path, 0, nullptr, -1));
            IntPoly others = one();
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (i != m) others *= banana_class(labels[i]).poly;
            result = c.f * u1 + c.g * u2 + others * c.h * u3;
        }
    }
    if (memoize_) {
        std::unique_lock lock(mutex_);
        cache_.emplace(key, result);
    }
    return result;
}

GrothendieckClass class_of(const MelonicConstruction& c) { return default_engine().class_of(c); }
GrothendieckClass class_of(const MelonTree& t) { return default_engine().class_of(t); }

ClassCatalogue distinct_classes(int max_edges, unsigned workers) {
    using ClassSet = std::map<int, std::set<IntPoly, IntPolyLess>>;
    ClassSet sets;
    if (workers <= 1) {
        ClassEngine engine;
        enumerate_reduced(max_edges, [&](const MelonTree& t) { sets[t.edge_count()].insert(engine.class_poly(t)); });
    } else {
        std::vector<MelonTree> trees = enumerate_reduced(max_edges);
        ClassEngine engine;
        std::vector<ClassSet> partial(workers);
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k) {
            pool.emplace_back([&, k] {
                for (std::size_t i = k; i < trees.size(); i += workers)
                    partial[k][trees[i].edge_count()].insert(engine.class_poly(trees[i]));
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : partial)
            for (auto& [e, s] : part) sets[e].insert(s.begin(), s.end());
    }
    ClassCatalogue out;
    for (auto& [e, s] : sets) out[e] = std::vector<IntPoly>(s.begin(), s.end());
    return out;
}

}  // namespace melonic
