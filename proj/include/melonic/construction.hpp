#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace melonic {

/// One bananification: replace an edge of banana `slot` of stage `parent`
/// by the string of bananas `banana`. Stage 0 is the initial edge (one slot).
struct Stage {
    std::vector<int> banana;
    int parent = 0;
    int slot = 1;

    friend bool operator==(const Stage&, const Stage&) = default;
};

/// Stages are numbered 1..depth by position; an empty list is the bare edge.
struct MelonicConstruction {
    std::vector<Stage> stages;

    int depth() const { return static_cast<int>(stages.size()); }
    friend bool operator==(const MelonicConstruction&, const MelonicConstruction&) = default;
};

struct Violation {
    int stage = 0;          // 1-based; 0 when not attributable to a stage
    std::string condition;  // "i".."vi"
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    bool reduced = true;
    std::optional<Violation> violation;      // first structural violation, (i)-(v)
    std::optional<Violation> non_reduced;    // first violation of (vi)
};

class InvalidConstruction : public std::invalid_argument {
public:
    explicit InvalidConstruction(Violation v);
    const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

ValidationReport validate(const MelonicConstruction& c);
/// Throws InvalidConstruction when (i)-(v) fail.
void require_valid(const MelonicConstruction& c);

// ---------------------------------------------------------------------------
// Tree form: white nodes are stages, black nodes are banana entries.

struct WhiteNode;
using WhitePtr = std::shared_ptr<const WhiteNode>;

struct BlackNode {
    int label = 1;
    std::vector<WhitePtr> children;
};

struct WhiteNode {
    std::vector<BlackNode> blacks;
};

class MelonTree {
public:
    /// The bare initial edge.
    MelonTree() = default;
    explicit MelonTree(WhitePtr root) : root_(std::move(root)) {}

    const WhitePtr& root() const { return root_; }
    bool is_single_edge() const { return root_ == nullptr; }
    int white_count() const;
    int edge_count() const;

private:
    WhitePtr root_;
};

int white_count(const WhiteNode& w);
/// Edges a white subtree adds: sum of labels - 1, plus its descendants.
int edge_contribution(const WhiteNode& w);
int edge_contribution(const BlackNode& b);

MelonTree to_tree(const MelonicConstruction& c);
/// Pre-order stage numbering; children of a black node in canonical-key order.
MelonicConstruction from_tree(const MelonTree& t);

/// Sibling-order invariant key. Trees differing only in the order of white
/// children of the same black node share a key.
std::string canonical_key(const MelonTree& t);
std::string canonical_key(const WhiteNode& w);
inline constexpr std::string_view kSingleEdgeKey = "e";

bool is_reduced(const MelonTree& t);
/// Slide subtrees grafted on 1-labelled black nodes up into their parent string.
MelonTree reduce(const MelonTree& t);
MelonicConstruction reduce(const MelonicConstruction& c);

// ---------------------------------------------------------------------------
// Graphs.

struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int loop_number() const { return edge_count() - vertex_count + 1; }
    bool is_connected() const;
    bool has_self_loop() const;
    std::vector<int> valences() const;
};

/// Always replaces the lowest-index never-replaced edge of the target banana.
Graph realize_graph(const MelonicConstruction& c);
int edge_count(const MelonicConstruction& c);
bool is_vacuum(const MelonicConstruction& c);

/// Bisect edge_a of a and edge_b of b, then identify the two new vertices.
Graph graft_bisected(const Graph& a, int edge_a, const Graph& b, int edge_b);

// ---------------------------------------------------------------------------
// Text inputs.

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// "(0,1+,2+,3-)": stage s is ((1,3,1), p_s, 2) for + and ((1,3,1), p_s, 1) for -.
MelonicConstruction parse_valence4_shorthand(std::string_view text);

/// "(1,3,5)@0.1; (2,3,2)@1.2"
MelonicConstruction parse_dsl(std::string_view dsl);
std::string to_dsl(const MelonicConstruction& c);

// ---------------------------------------------------------------------------
// Valence-4 vacua from trees of ovals.

/// Unlabelled tree on nodes 0..node_count-1, rooted at node 0.
struct OvalTree {
    int node_count = 1;
    std::vector<std::pair<int, int>> edges;

    static OvalTree path(int nodes);
    static OvalTree star(int rays, int nodes_per_ray);
};

struct OvalConstruction {
    MelonicConstruction construction;
    /// Extra valence-2 vertices from the 2-banana root; the vacuum class is
    /// class_of(construction) / (T+1)^subdivision_correction.
    int subdivision_correction = 2;
};

OvalConstruction tree_of_ovals_to_construction(const OvalTree& tree);

// ---------------------------------------------------------------------------
// Enumeration.

/// Every reduced construction with at most max_edges edges, once per labelled
/// tree up to sibling order, in a deterministic order. Non-root stages are
/// strings of length >= 2 (a single banana grafted onto an edge is the same
/// graph as the enlarged parent banana).
void enumerate_reduced(int max_edges, const std::function<void(const MelonTree&)>& visit);
std::vector<MelonTree> enumerate_reduced(int max_edges);

}  // namespace melonic
