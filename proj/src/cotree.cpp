#include "codim/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

namespace codim {

char op_symbol(CoOp op) {
    switch (op) {
    case CoOp::Union: return '+';
    case CoOp::Join: return '*';
    case CoOp::DirJoin: return '>';
    }
    throw std::logic_error("unknown co-tree operation");
}

int CoTreeBuilder::leaf(std::string label) {
    CoTree::Node n;
    n.label = std::move(label);
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

int CoTreeBuilder::inner(CoOp op, int left, int right) {
    const int next = static_cast<int>(nodes_.size());
    if (left < 0 || left >= next || right < 0 || right >= next || left == right)
        throw std::invalid_argument("inner node children must be distinct existing nodes");
    CoTree::Node n;
    n.op = op;
    n.left = left;
    n.right = right;
    nodes_.push_back(std::move(n));
    return next;
}

CoTree CoTreeBuilder::finish(int root) {
    const int n = static_cast<int>(nodes_.size());
    if (root != n - 1)
        throw std::invalid_argument("root must be the last node built");
    std::vector<int> uses(n, 0);
    int leaves = 0;
    std::unordered_map<std::string, int> seen;
    for (int id = 0; id < n; ++id) {
        const auto& node = nodes_[id];
        if (node.is_leaf()) {
            ++leaves;
            if (node.label.empty())
                throw std::invalid_argument("leaf label must be non-empty");
            if (!seen.emplace(node.label, id).second)
                throw std::invalid_argument("duplicate leaf label: " + node.label);
        } else {
            ++uses[node.left];
            ++uses[node.right];
        }
    }
    for (int id = 0; id < n; ++id) {
        const int expected = (id == root) ? 0 : 1;
        if (uses[id] != expected)
            throw std::invalid_argument("co-tree nodes must form a single tree");
    }
    CoTree t;
    t.nodes_ = std::move(nodes_);
    t.root_ = root;
    t.leaf_count_ = leaves;
    return t;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            advance();
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::string where() const {
        return "line " + std::to_string(line) + ", column " + std::to_string(col);
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at " + where());
    }
};

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_op_char(char c) { return c == '+' || c == '*' || c == '>'; }

CoOp op_of(char c) {
    switch (c) {
    case '+': return CoOp::Union;
    case '*': return CoOp::Join;
    default: return CoOp::DirJoin;
    }
}

class Parser {
public:
    Parser(std::string_view text) : cur_{text} {}

    CoTree run() {
        int root = expr();
        if (!cur_.eof())
            cur_.fail("unexpected input after expression");
        return builder_.finish(root);
    }

private:
    int expr() {
        int lhs = term();
        bool have_op = false;
        char chain_op = '\0';
        while (is_op_char(cur_.peek())) {
            char op = cur_.peek();
            if (have_op && op != chain_op)
                cur_.fail("mixed operators require parentheses");
            have_op = true;
            chain_op = op;
            cur_.advance();
            int rhs = term();
            lhs = builder_.inner(op_of(op), lhs, rhs);
        }
        return lhs;
    }

    int term() {
        char c = cur_.peek();
        if (c == '(') {
            cur_.advance();
            int e = expr();
            if (cur_.peek() != ')')
                cur_.fail("expected ')'");
            cur_.advance();
            return e;
        }
        if (is_ident_char(c)) {
            std::string name;
            auto at = cur_.where();
            while (cur_.pos < cur_.text.size() && is_ident_char(cur_.text[cur_.pos])) {
                name += cur_.text[cur_.pos];
                cur_.advance();
            }
            if (!labels_.insert(name).second)
                throw ParseError("duplicate leaf label '" + name + "' at " + at);
            return builder_.leaf(std::move(name));
        }
        if (c == '\0')
            cur_.fail("unexpected end of input");
        cur_.fail(std::string("unexpected character '") + c + "'");
    }

    Cursor cur_;
    CoTreeBuilder builder_;
    std::unordered_set<std::string> labels_;
};

} // namespace

CoTree parse_cotree(std::string_view expr) { return Parser(expr).run(); }

CoTree parse_cotree_document(std::string_view text) {
    std::string stripped;
    stripped.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n')
            in_comment = false;
        else if (c == '#')
            in_comment = true;
        stripped += in_comment ? ' ' : c;
    }
    return parse_cotree(stripped);
}

// ---------------------------------------------------------------------------
// transforms

CoTree normalize(const CoTree& t) {
    CoTreeBuilder builder;
    for (int id = 0; id < t.node_count(); ++id) {
        const auto& n = t.node(id);
        if (n.is_leaf()) {
            builder.leaf(n.label);
            continue;
        }
        int left = n.left, right = n.right;
        if (n.op != CoOp::DirJoin && t.node(left).is_leaf() &&
            !t.node(right).is_leaf())
            std::swap(left, right);
        builder.inner(n.op, left, right);
    }
    return builder.finish(t.root());
}

bool is_normalized(const CoTree& t) {
    for (int id = 0; id < t.node_count(); ++id) {
        const auto& n = t.node(id);
        if (n.is_leaf() || n.op == CoOp::DirJoin)
            continue;
        if (t.node(n.left).is_leaf() && !t.node(n.right).is_leaf())
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> leaf_ranges(const CoTree& t) {
    const int n = t.node_count();
    std::vector<int> count(n, 0);
    for (int id = 0; id < n; ++id) {
        const auto& node = t.node(id);
        count[id] = node.is_leaf() ? 1 : count[node.left] + count[node.right];
    }
    std::vector<std::pair<int, int>> range(n);
    range[t.root()] = {0, count[t.root()]};
    for (int id = n - 1; id >= 0; --id) { // parents precede children downward
        const auto& node = t.node(id);
        if (node.is_leaf())
            continue;
        const auto [begin, end] = range[id];
        range[node.left] = {begin, begin + count[node.left]};
        range[node.right] = {begin + count[node.left], end};
    }
    return range;
}

Materialized materialize(const CoTree& t) {
    const auto ranges = leaf_ranges(t);
    Materialized out;
    out.leaves.labels.resize(t.leaf_count());
    for (int id = 0; id < t.node_count(); ++id) {
        const auto& node = t.node(id);
        if (node.is_leaf())
            out.leaves.labels[ranges[id].first] = node.label;
    }
    for (Vertex v = 0; v < t.leaf_count(); ++v) {
        out.graph.add_vertex(out.leaves.labels[v]);
        out.leaves.index.emplace(out.leaves.labels[v], v);
    }
    for (int id = 0; id < t.node_count(); ++id) {
        const auto& node = t.node(id);
        if (node.is_leaf() || node.op == CoOp::Union)
            continue;
        const auto [lb, le] = ranges[node.left];
        const auto [rb, re] = ranges[node.right];
        for (int u = lb; u < le; ++u) {
            for (int v = rb; v < re; ++v) {
                out.graph.add_edge(u, v);
                if (node.op == CoOp::Join)
                    out.graph.add_edge(v, u);
            }
        }
    }
    return out;
}

bool cotree_strongly_connected(const CoTree& t) {
    const auto& root = t.node(t.root());
    return root.is_leaf() || root.op == CoOp::Join;
}

// ---------------------------------------------------------------------------
// generation and printing

namespace {

int bounded(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

} // namespace

CoTree random_cotree(std::uint64_t seed, int n_leaves, bool force_join_root) {
    if (n_leaves < 1)
        throw std::invalid_argument("random_cotree: n_leaves must be at least 1");
    std::mt19937_64 rng(seed);

    struct RawNode {
        int left = -1, right = -1, parent = -1;
        CoOp op{CoOp::Union};
        bool is_leaf() const { return left < 0; }
    };
    std::vector<RawNode> raw(1);
    int root = 0;
    for (int step = 1; step < n_leaves; ++step) {
        // leaf-insertion step: a fresh inner node replaces a random node,
        // adopting it and a fresh leaf in random order
        const int target = bounded(rng, static_cast<int>(raw.size()));
        const int new_leaf = static_cast<int>(raw.size());
        raw.emplace_back();
        const int inner = static_cast<int>(raw.size());
        raw.emplace_back();
        const bool leaf_right = bounded(rng, 2) == 0;
        raw[inner].left = leaf_right ? target : new_leaf;
        raw[inner].right = leaf_right ? new_leaf : target;
        raw[inner].parent = raw[target].parent;
        if (raw[inner].parent >= 0) {
            auto& p = raw[raw[inner].parent];
            (p.left == target ? p.left : p.right) = inner;
        } else {
            root = inner;
        }
        raw[target].parent = inner;
        raw[new_leaf].parent = inner;
    }
    for (auto& node : raw)
        if (!node.is_leaf())
            node.op = static_cast<CoOp>(bounded(rng, 3));
    if (force_join_root && n_leaves >= 2)
        raw[root].op = CoOp::Join;

    // rebuild in child-first order, labeling leaves v1..vN left to right
    CoTreeBuilder builder;
    std::vector<int> rebuilt(raw.size(), -1);
    std::vector<std::pair<int, int>> stack{{root, 0}};
    int next_label = 0;
    while (!stack.empty()) {
        auto& [id, phase] = stack.back();
        const auto& node = raw[id];
        if (node.is_leaf()) {
            rebuilt[id] = builder.leaf("v" + std::to_string(++next_label));
            stack.pop_back();
        } else if (phase == 0) {
            phase = 1;
            stack.push_back({node.left, 0});
        } else if (phase == 1) {
            phase = 2;
            stack.push_back({node.right, 0});
        } else {
            rebuilt[id] = builder.inner(node.op, rebuilt[node.left], rebuilt[node.right]);
            stack.pop_back();
        }
    }
    return builder.finish(rebuilt[root]);
}

std::string to_expression(const CoTree& t) {
    std::string out;
    struct Item {
        int node;
        char literal; // when node < 0
    };
    std::vector<Item> stack{{t.root(), '\0'}};
    while (!stack.empty()) {
        Item item = stack.back();
        stack.pop_back();
        if (item.node < 0) {
            out += item.literal;
            continue;
        }
        const auto& node = t.node(item.node);
        if (node.is_leaf()) {
            out += node.label;
            continue;
        }
        stack.push_back({-1, ')'});
        stack.push_back({node.right, '\0'});
        stack.push_back({-1, op_symbol(node.op)});
        stack.push_back({node.left, '\0'});
        out += '(';
    }
    return out;
}

} // namespace codim
