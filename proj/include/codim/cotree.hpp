#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codim/digraph.hpp"

namespace codim {

// Inner-node operations of a co-tree: disjoint union (`+`), join with cross
// edges in both directions (`*`), and directed join with left-to-right cross
// edges (`>`).
enum class CoOp : std::uint8_t { Union, Join, DirJoin };

char op_symbol(CoOp op);

// Strictly binary expression tree over distinctly labeled leaves. Node ids
// are topologically ordered: children always precede their parent, and the
// root is the last node. Immutable once built.
class CoTree {
public:
    struct Node {
        CoOp op{CoOp::Union}; // meaningful for inner nodes only
        int left = -1;
        int right = -1;
        std::string label; // leaves only
        bool is_leaf() const { return left < 0; }
    };

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return leaf_count_; }
    const Node& node(int id) const { return nodes_.at(id); }

private:
    friend class CoTreeBuilder;
    std::vector<Node> nodes_;
    int root_ = -1;
    int leaf_count_ = 0;
};

class CoTreeBuilder {
public:
    int leaf(std::string label);
    int inner(CoOp op, int left, int right);
    // Validates the tree: every node reachable from root exactly once,
    // distinct leaf labels. Throws std::invalid_argument otherwise.
    CoTree finish(int root);

private:
    std::vector<CoTree::Node> nodes_;
};

// Leaf labels in left-to-right order; vertex i of the materialized graph is
// the i-th leaf.
struct LeafIndexing {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
};

struct Materialized {
    Digraph graph;
    LeafIndexing leaves;
};

// `expr := term (op term)*` with op one of + * >, left-associative; a chain
// must stick to one operator, mixing requires parentheses. Terms are
// alphanumeric identifiers or parenthesised expressions. Throws ParseError.
CoTree parse_cotree(std::string_view expr);

// File form: `#` comments stripped, then parsed as a single expression.
CoTree parse_cotree_document(std::string_view text);

// Swaps the children of every Union/Join node that has exactly one leaf
// child so the leaf ends up on the right. DirJoin nodes are never swapped.
CoTree normalize(const CoTree& t);

bool is_normalized(const CoTree& t);

// Builds the explicit digraph: Union adds no cross edges, Join adds both
// directions of every cross pair, DirJoin adds left-to-right cross edges.
Materialized materialize(const CoTree& t);

// Per node the half-open range of leaf/vertex indices of its subtree.
std::vector<std::pair<int, int>> leaf_ranges(const CoTree& t);

// True iff t is a single leaf or the root operation is Join; agrees with
// is_strongly_connected on the materialized graph.
bool cotree_strongly_connected(const CoTree& t);

// Uniform random binary shape (leaf-insertion construction) with uniform
// inner labels, deterministic in seed. Leaves are labeled v1..vN left to
// right. force_join_root relabels the root Join when n_leaves >= 2.
CoTree random_cotree(std::uint64_t seed, int n_leaves, bool force_join_root);

// Fully parenthesised expression; parses back to a structurally identical tree.
std::string to_expression(const CoTree& t);

} // namespace codim
