#include "melonic/construction.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace melonic {

InvalidConstruction::InvalidConstruction(Violation v)
    : std::invalid_argument("invalid melonic construction: stage " + std::to_string(v.stage) +
                            " violates (" + v.condition + "): " + v.message),
      violation_(std::move(v)) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

// ---------------------------------------------------------------------------
// Validation

namespace {

int slot_count(const MelonicConstruction& c, int stage) {
    return stage == 0 ? 1 : static_cast<int>(c.stages[static_cast<std::size_t>(stage - 1)].banana.size());
}

}  // namespace

ValidationReport validate(const MelonicConstruction& c) {
    ValidationReport rep;
    auto fail = [&](int s, const char* cond, std::string msg) {
        if (!rep.valid) return;
        rep.valid = false;
        rep.reduced = false;
        rep.violation = Violation{s, cond, std::move(msg)};
    };
    std::map<std::pair<int, int>, int> grafts;
    for (int s = 1; s <= c.depth() && rep.valid; ++s) {
        const Stage& st = c.stages[static_cast<std::size_t>(s - 1)];
        if (st.banana.empty()) {
            fail(s, "i", "banana tuple is empty");
            break;
        }
        if (std::any_of(st.banana.begin(), st.banana.end(), [](int a) { return a < 1; })) {
            fail(s, "i", "banana entries must be positive");
            break;
        }
        if (st.parent < 0 || st.parent >= s) {
            fail(s, "ii", "parent " + std::to_string(st.parent) + " must satisfy 0 <= p < " + std::to_string(s));
            break;
        }
        if (st.slot < 1 || st.slot > slot_count(c, st.parent)) {
            fail(s, "iii", "slot " + std::to_string(st.slot) + " out of range 1.." +
                               std::to_string(slot_count(c, st.parent)));
            break;
        }
        if (s > 1 && st.parent == 0) {
            fail(s, "iv", "only stage 1 may replace the initial edge");
            break;
        }
        const int used = ++grafts[{st.parent, st.slot}];
        if (st.parent > 0) {
            const int cap = c.stages[static_cast<std::size_t>(st.parent - 1)].banana[static_cast<std::size_t>(st.slot - 1)];
            if (used > cap) {
                fail(s, "v", "banana (" + std::to_string(st.parent) + "," + std::to_string(st.slot) +
                                 ") has " + std::to_string(cap) + " edges but receives " +
                                 std::to_string(used) + " replacements");
                break;
            }
            if (cap == 1 && !rep.non_reduced) {
                rep.reduced = false;
                rep.non_reduced = Violation{s, "vi", "replaces the edge of a 1-banana (" + std::to_string(st.parent) +
                                                          "," + std::to_string(st.slot) + ")"};
            }
        }
    }
    return rep;
}

void require_valid(const MelonicConstruction& c) {
    ValidationReport rep = validate(c);
    if (!rep.valid) throw InvalidConstruction(*rep.violation);
}

// ---------------------------------------------------------------------------
// Trees

int white_count(const WhiteNode& w) {
    int n = 1;
    for (const auto& b : w.blacks)
        for (const auto& ch : b.children) n += white_count(*ch);
    return n;
}

int edge_contribution(const BlackNode& b) {
    int e = b.label;
    for (const auto& ch : b.children) e += edge_contribution(*ch);
    return e;
}

int edge_contribution(const WhiteNode& w) {
    int e = -1;
    for (const auto& b : w.blacks) e += edge_contribution(b);
    return e;
}

int MelonTree::white_count() const { return root_ ? melonic::white_count(*root_) : 0; }
int MelonTree::edge_count() const { return root_ ? 1 + edge_contribution(*root_) : 1; }

MelonTree to_tree(const MelonicConstruction& c) {
    require_valid(c);
    if (c.stages.empty()) return MelonTree();
    // grafted[s][j]: stages attached to slot j of stage s
    std::vector<std::vector<std::vector<int>>> grafted(c.stages.size() + 1);
    for (std::size_t s = 1; s <= c.stages.size(); ++s) grafted[s].resize(c.stages[s - 1].banana.size());
    for (std::size_t s = 2; s <= c.stages.size(); ++s) {
        const Stage& st = c.stages[s - 1];
        grafted[static_cast<std::size_t>(st.parent)][static_cast<std::size_t>(st.slot - 1)].push_back(static_cast<int>(s));
    }
    std::function<WhitePtr(std::size_t)> build = [&](std::size_t s) {
        auto w = std::make_shared<WhiteNode>();
        const Stage& st = c.stages[s - 1];
        for (std::size_t j = 0; j < st.banana.size(); ++j) {
            BlackNode b;
            b.label = st.banana[j];
            for (int child : grafted[s][j]) b.children.push_back(build(static_cast<std::size_t>(child)));
            w->blacks.push_back(std::move(b));
        }
        return WhitePtr(std::move(w));
    };
    return MelonTree(build(1));
}

std::string canonical_key(const WhiteNode& w) {
    std::string key = "(";
    for (std::size_t j = 0; j < w.blacks.size(); ++j) {
        const BlackNode& b = w.blacks[j];
        if (j > 0) key += ',';
        key += std::to_string(b.label);
        if (!b.children.empty()) {
            std::vector<std::string> sub;
            sub.reserve(b.children.size());
            for (const auto& ch : b.children) sub.push_back(canonical_key(*ch));
            std::sort(sub.begin(), sub.end());
            key += '[';
            for (const auto& s : sub) key += s;
            key += ']';
        }
    }
    key += ')';
    return key;
}

std::string canonical_key(const MelonTree& t) {
    return t.is_single_edge() ? std::string(kSingleEdgeKey) : canonical_key(*t.root());
}

MelonicConstruction from_tree(const MelonTree& t) {
    MelonicConstruction c;
    if (t.is_single_edge()) return c;
    std::function<void(const WhiteNode&, int, int)> visit = [&](const WhiteNode& w, int parent, int slot) {
        Stage st;
        st.parent = parent;
        st.slot = slot;
        for (const auto& b : w.blacks) st.banana.push_back(b.label);
        c.stages.push_back(std::move(st));
        const int id = c.depth();
        for (std::size_t j = 0; j < w.blacks.size(); ++j) {
            std::vector<std::pair<std::string, const WhiteNode*>> kids;
            for (const auto& ch : w.blacks[j].children) kids.emplace_back(canonical_key(*ch), ch.get());
            std::stable_sort(kids.begin(), kids.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [key, node] : kids) visit(*node, id, static_cast<int>(j) + 1);
        }
    };
    visit(*t.root(), 0, 1);
    return c;
}

namespace {

bool white_is_reduced(const WhiteNode& w) {
    for (const auto& b : w.blacks) {
        if (b.label == 1 && !b.children.empty()) return false;
        for (const auto& ch : b.children)
            if (!white_is_reduced(*ch)) return false;
    }
    return true;
}

WhitePtr reduce_white(const WhiteNode& w) {
    auto out = std::make_shared<WhiteNode>();
    for (const auto& b : w.blacks) {
        std::vector<WhitePtr> kids;
        kids.reserve(b.children.size());
        for (const auto& ch : b.children) kids.push_back(reduce_white(*ch));
        if (b.label == 1 && !kids.empty()) {
            // a 1-banana has a single edge, so at most one graft
            for (const auto& nb : kids.front()->blacks) out->blacks.push_back(nb);
        } else {
            out->blacks.push_back(BlackNode{b.label, std::move(kids)});
        }
    }
    return out;
}

}  // namespace

bool is_reduced(const MelonTree& t) { return t.is_single_edge() || white_is_reduced(*t.root()); }

MelonTree reduce(const MelonTree& t) {
    if (is_reduced(t)) return t;
    return MelonTree(reduce_white(*t.root()));
}

MelonicConstruction reduce(const MelonicConstruction& c) {
    require_valid(c);
    MelonicConstruction out = c;
    for (;;) {
        ValidationReport rep = validate(out);
        if (rep.reduced) return out;
        // splice stage s into the 1-entry it replaces, keeping stage order
        const int s = rep.non_reduced->stage;
        const Stage victim = out.stages[static_cast<std::size_t>(s - 1)];
        const int p = victim.parent;
        const int k = victim.slot;
        const int width = static_cast<int>(victim.banana.size());
        auto& host = out.stages[static_cast<std::size_t>(p - 1)].banana;
        host.erase(host.begin() + (k - 1));
        host.insert(host.begin() + (k - 1), victim.banana.begin(), victim.banana.end());
        for (auto& st : out.stages) {
            if (st.parent == p && st.slot > k) st.slot += width - 1;
            if (st.parent == s) {
                st.parent = p;
                st.slot = k - 1 + st.slot;
            }
        }
        out.stages.erase(out.stages.begin() + (s - 1));
        for (auto& st : out.stages)
            if (st.parent > s) --st.parent;
    }
}

// ---------------------------------------------------------------------------
// Graphs

bool Graph::is_connected() const {
    if (vertex_count <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = vertex_count;
    for (const auto& [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

bool Graph::has_self_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

std::vector<int> Graph::valences() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

Graph realize_graph(const MelonicConstruction& c) {
    require_valid(c);
    std::vector<std::pair<int, int>> edges{{0, 1}};
    std::vector<bool> replaced{false};
    int vertices = 2;
    // bananas[s][j] = edge ids of banana j of stage s
    std::vector<std::vector<std::vector<int>>> bananas{{{0}}};
    for (const Stage& st : c.stages) {
        const auto& target = bananas[static_cast<std::size_t>(st.parent)][static_cast<std::size_t>(st.slot - 1)];
        auto it = std::find_if(target.begin(), target.end(), [&](int e) { return !replaced[static_cast<std::size_t>(e)]; });
        if (it == target.end()) throw std::logic_error("no available edge in target banana");
        const int e = *it;
        replaced[static_cast<std::size_t>(e)] = true;
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        std::vector<std::vector<int>> stage_bananas;
        int prev = u;
        for (std::size_t i = 0; i < st.banana.size(); ++i) {
            const int next = (i + 1 == st.banana.size()) ? v : vertices++;
            std::vector<int> ids;
            for (int m = 0; m < st.banana[i]; ++m) {
                ids.push_back(static_cast<int>(edges.size()));
                edges.emplace_back(prev, next);
                replaced.push_back(false);
            }
            stage_bananas.push_back(std::move(ids));
            prev = next;
        }
        bananas.push_back(std::move(stage_bananas));
    }
    Graph g;
    g.vertex_count = vertices;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!replaced[i]) g.edges.push_back(edges[i]);
    if (g.has_self_loop()) throw std::logic_error("realization produced a self-loop");
    return g;
}

int edge_count(const MelonicConstruction& c) {
    int n = 1;
    for (const auto& st : c.stages) n += std::accumulate(st.banana.begin(), st.banana.end(), 0) - 1;
    return n;
}

Graph graft_bisected(const Graph& a, int edge_a, const Graph& b, int edge_b) {
    if (edge_a < 0 || edge_a >= a.edge_count() || edge_b < 0 || edge_b >= b.edge_count())
        throw std::out_of_range("graft_bisected: edge index out of range");
    Graph g;
    const int mid = a.vertex_count + b.vertex_count;
    g.vertex_count = mid + 1;
    for (int i = 0; i < a.edge_count(); ++i) {
        const auto [u, v] = a.edges[static_cast<std::size_t>(i)];
        if (i == edge_a) {
            g.edges.emplace_back(u, mid);
            g.edges.emplace_back(mid, v);
        } else {
            g.edges.emplace_back(u, v);
        }
    }
    const int off = a.vertex_count;
    for (int i = 0; i < b.edge_count(); ++i) {
        const auto [u, v] = b.edges[static_cast<std::size_t>(i)];
        if (i == edge_b) {
            g.edges.emplace_back(u + off, mid);
            g.edges.emplace_back(mid, v + off);
        } else {
            g.edges.emplace_back(u + off, v + off);
        }
    }
    return g;
}

bool is_vacuum(const MelonicConstruction& c) {
    const auto deg = realize_graph(c).valences();
    return std::none_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

// ---------------------------------------------------------------------------
// Parsers

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    int integer() {
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a nonnegative integer");
        if (i_ - start > 9) fail("integer too large");
        return std::stoi(std::string(s_.substr(start, i_ - start)));
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }
    std::size_t pos() const { return i_; }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

MelonicConstruction parse_valence4_shorthand(std::string_view text) {
    Cursor cur(text);
    const bool paren = cur.accept("(");
    MelonicConstruction c;
    if (cur.integer() != 0) throw ParseError("shorthand must start with 0", 0);
    c.stages.push_back(Stage{{1, 3, 1}, 0, 1});
    while (cur.accept(",")) {
        const std::size_t at = cur.pos();
        const int p = cur.integer();
        int k = 0;
        if (cur.accept("+") || cur.accept("⁺")) k = 2;
        else if (cur.accept("-") || cur.accept("⁻") || cur.accept("−")) k = 1;
        else cur.fail("expected + or - mark after parent index");
        const int s = c.depth() + 1;
        if (p < 1 || p >= s) throw ParseError("parent " + std::to_string(p) + " must satisfy 1 <= p < " + std::to_string(s), at);
        c.stages.push_back(Stage{{1, 3, 1}, p, k});
    }
    if (paren) cur.expect(")");
    if (!cur.done()) cur.fail("unexpected trailing input");
    return c;
}

MelonicConstruction parse_dsl(std::string_view dsl) {
    Cursor cur(dsl);
    MelonicConstruction c;
    if (cur.done()) return c;
    do {
        if (cur.done()) break;  // tolerate a trailing ';'
        Stage st;
        cur.expect("(");
        st.banana.push_back(cur.integer());
        while (cur.accept(",")) st.banana.push_back(cur.integer());
        cur.expect(")");
        cur.expect("@");
        st.parent = cur.integer();
        cur.expect(".");
        st.slot = cur.integer();
        c.stages.push_back(std::move(st));
    } while (cur.accept(";"));
    if (!cur.done()) cur.fail("unexpected trailing input");
    return c;
}

std::string to_dsl(const MelonicConstruction& c) {
    std::ostringstream os;
    for (std::size_t s = 0; s < c.stages.size(); ++s) {
        if (s > 0) os << "; ";
        os << '(';
        for (std::size_t i = 0; i < c.stages[s].banana.size(); ++i) os << (i ? "," : "") << c.stages[s].banana[i];
        os << ")@" << c.stages[s].parent << '.' << c.stages[s].slot;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Trees of ovals

OvalTree OvalTree::path(int nodes) {
    if (nodes < 1) throw std::invalid_argument("path needs at least one node");
    OvalTree t;
    t.node_count = nodes;
    for (int i = 1; i < nodes; ++i) t.edges.emplace_back(i - 1, i);
    return t;
}

OvalTree OvalTree::star(int rays, int nodes_per_ray) {
    if (rays < 1 || nodes_per_ray < 1) throw std::invalid_argument("star needs s, n >= 1");
    OvalTree t;
    t.node_count = 1 + rays * nodes_per_ray;
    for (int r = 0; r < rays; ++r) {
        int prev = 0;
        for (int i = 0; i < nodes_per_ray; ++i) {
            const int node = 1 + r * nodes_per_ray + i;
            t.edges.emplace_back(prev, node);
            prev = node;
        }
    }
    return t;
}

OvalConstruction tree_of_ovals_to_construction(const OvalTree& tree) {
    if (tree.node_count < 1) throw std::invalid_argument("oval tree must be nonempty");
    if (static_cast<int>(tree.edges.size()) != tree.node_count - 1)
        throw std::invalid_argument("oval tree must have node_count - 1 edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(tree.node_count));
    for (const auto& [a, b] : tree.edges) {
        if (a < 0 || b < 0 || a >= tree.node_count || b >= tree.node_count || a == b)
            throw std::invalid_argument("bad oval tree edge");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    OvalConstruction out;
    auto& stages = out.construction.stages;
    stages.push_back(Stage{{2}, 0, 1});
    // node -> (stage, slot) of the 3-banana standing for its oval; the root
    // oval is the 2-banana of stage 1
    std::vector<std::pair<int, int>> where(static_cast<std::size_t>(tree.node_count), {0, 0});
    std::vector<int> parent(static_cast<std::size_t>(tree.node_count), -2);
    where[0] = {1, 1};
    parent[0] = -1;
    std::deque<int> queue{0};
    int seen = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        std::vector<int> kids;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (v == parent[static_cast<std::size_t>(u)]) continue;
            if (parent[static_cast<std::size_t>(v)] != -2) throw std::invalid_argument("oval tree contains a cycle");
            parent[static_cast<std::size_t>(v)] = u;
            kids.push_back(v);
        }
        if (kids.empty()) continue;
        Stage st;
        st.parent = where[static_cast<std::size_t>(u)].first;
        st.slot = where[static_cast<std::size_t>(u)].second;
        st.banana.push_back(1);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            st.banana.push_back(3);
            st.banana.push_back(1);
        }
        stages.push_back(std::move(st));
        const int id = static_cast<int>(stages.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
            where[static_cast<std::size_t>(kids[i])] = {id, 2 * static_cast<int>(i) + 2};
            queue.push_back(kids[i]);
            ++seen;
        }
    }
    if (seen != tree.node_count) throw std::invalid_argument("oval tree is disconnected");
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class Enumerator {
public:
    explicit Enumerator(int max_edges) : max_(max_edges) {
        blacks_.resize(static_cast<std::size_t>(std::max(max_edges, 1)) + 1);
        whites_by_contrib_.resize(blacks_.size());
        for (int c = 1; c <= max_edges; ++c) {
            build_blacks(c);
            if (c - 1 >= 1 && c - 1 <= max_edges - 2) build_whites(c - 1);
        }
    }

    void roots(const std::function<void(const MelonTree&)>& visit) const {
        visit(MelonTree());
        for (int total = 2; total <= max_; ++total) {
            std::vector<BlackNode> seq;
            compose(total, 1, seq, [&](const std::vector<BlackNode>& blacks) {
                auto w = std::make_shared<WhiteNode>();
                w->blacks = blacks;
                visit(MelonTree(WhitePtr(std::move(w))));
            });
        }
    }

private:
    // Sequences of black nodes with contributions summing to `remaining`,
    // at least `min_parts` long.
    void compose(int remaining, int min_parts, std::vector<BlackNode>& seq,
                 const std::function<void(const std::vector<BlackNode>&)>& emit) const {
        if (remaining == 0) {
            if (static_cast<int>(seq.size()) >= min_parts) emit(seq);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            for (const auto& b : blacks_[static_cast<std::size_t>(part)]) {
                seq.push_back(b);
                compose(remaining - part, min_parts, seq, emit);
                seq.pop_back();
            }
        }
    }

    void build_whites(int e) {
        std::vector<BlackNode> seq;
        compose(e + 1, 2, seq, [&](const std::vector<BlackNode>& blacks) {
            auto w = std::make_shared<WhiteNode>();
            w->blacks = blacks;
            whites_by_contrib_[static_cast<std::size_t>(e)].push_back(static_cast<int>(pool_.size()));
            pool_.push_back(WhitePtr(std::move(w)));
            pool_contrib_.push_back(e);
        });
    }

    void build_blacks(int c) {
        auto& out = blacks_[static_cast<std::size_t>(c)];
        out.push_back(BlackNode{c, {}});
        for (int label = 2; label <= c - 1; ++label) {
            std::vector<WhitePtr> kids;
            multisets(c - label, label, 0, kids, [&](const std::vector<WhitePtr>& chosen) {
                out.push_back(BlackNode{label, chosen});
            });
        }
    }

    // Nondecreasing pool-index sequences (at most max_count long) whose
    // contributions sum to `remaining`.
    void multisets(int remaining, int max_count, std::size_t from, std::vector<WhitePtr>& chosen,
                   const std::function<void(const std::vector<WhitePtr>&)>& emit) const {
        if (remaining == 0) {
            if (!chosen.empty()) emit(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) == max_count) return;
        for (std::size_t i = from; i < pool_.size(); ++i) {
            const int c = pool_contrib_[i];
            if (c > remaining) break;  // pool is sorted by contribution
            chosen.push_back(pool_[i]);
            multisets(remaining - c, max_count, i, chosen, emit);
            chosen.pop_back();
        }
    }

    int max_;
    std::vector<std::vector<BlackNode>> blacks_;
    std::vector<WhitePtr> pool_;
    std::vector<int> pool_contrib_;
    std::vector<std::vector<int>> whites_by_contrib_;
};

}  // namespace

void enumerate_reduced(int max_edges, const std::function<void(const MelonTree&)>& visit) {
    if (max_edges < 1) throw std::invalid_argument("max_edges must be >= 1");
    Enumerator(max_edges).roots(visit);
}

std::vector<MelonTree> enumerate_reduced(int max_edges) {
    std::vector<MelonTree> out;
    enumerate_reduced(max_edges, [&](const MelonTree& t) { out.push_back(t); });
    return out;
}

}  // namespace melonic
