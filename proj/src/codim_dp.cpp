#include "codim/codim_dp.hpp"

#include <limits>
#include <stdexcept>

namespace codim {

const char* state_type_name(StateType t) {
    switch (t) {
    case StateType::T0: return "0";
    case StateType::T1: return "1";
    case StateType::T2: return "2";
    case StateType::T12: return "12";
    }
    return "?";
}

namespace {

constexpr std::int8_t S0 = 0, S1 = 1, S2 = 2, S12 = 3, LEAF = -1;
constexpr auto U = CoOp::Union;
constexpr auto J = CoOp::Join;
constexpr auto D = CoOp::DirJoin;
constexpr auto T0 = StateType::T0;
constexpr auto T1 = StateType::T1;
constexpr auto T2 = StateType::T2;
constexpr auto T12 = StateType::T12;
constexpr auto NONE = VertexRole::None;
constexpr auto LU1 = VertexRole::LeftU1;
constexpr auto LU2 = VertexRole::LeftU2;
constexpr auto LST = VertexRole::LeftStar;
constexpr auto RU1 = VertexRole::RightU1;
constexpr auto RU2 = VertexRole::RightU2;
constexpr auto RST = VertexRole::RightStar;
constexpr auto LLF = VertexRole::LeftLeaf;
constexpr auto RLF = VertexRole::RightLeaf;
constexpr auto DR0 = DoubleRemover::None;
constexpr auto DRU1 = DoubleRemover::U1;
constexpr auto DRU2 = DoubleRemover::U2;

// The merge tables, one row per record: child entry types (or leaf), the
// vertex added on top of the union of the two child sets, and the produced
// entry (type, 1-vertex, 2-vertex, double-remover mark). Rows flagged
// `pruned` are the dominated alternatives; they stay here so the data
// mirrors the full rule set but the engine never applies them.
constexpr MergeRule kRules[] = {
    // --- both children inner, disjoint union -----------------------------
    {U, S0, S0, NONE, T0, NONE, NONE, DR0, false},
    {U, S0, S1, NONE, T0, NONE, NONE, DR0, false},
    {U, S0, S2, NONE, T2, NONE, RU2, DR0, false},
    {U, S0, S12, NONE, T2, NONE, RU2, DR0, false},
    {U, S1, S0, NONE, T0, NONE, NONE, DR0, false},
    {U, S1, S1, NONE, T0, NONE, NONE, DR0, false},
    {U, S1, S2, NONE, T2, NONE, RU2, DR0, false},
    {U, S1, S12, NONE, T2, NONE, RU2, DR0, false},
    {U, S2, S0, NONE, T2, NONE, LU2, DR0, false},
    {U, S2, S1, NONE, T2, NONE, LU2, DR0, false},
    {U, S2, S2, LU2, T2, NONE, RU2, DR0, false},
    {U, S2, S2, RU2, T2, NONE, LU2, DR0, true},
    {U, S2, S12, LU2, T2, NONE, RU2, DR0, false},
    {U, S2, S12, RU2, T2, NONE, LU2, DR0, true},
    {U, S2, S12, RST, T2, NONE, LU2, DR0, true},
    {U, S12, S0, NONE, T2, NONE, LU2, DR0, false},
    {U, S12, S1, NONE, T2, NONE, LU2, DR0, false},
    {U, S12, S2, LU2, T2, NONE, RU2, DR0, false},
    {U, S12, S2, LST, T2, NONE, RU2, DR0, true},
    {U, S12, S2, RU2, T2, NONE, LU2, DR0, true},
    {U, S12, S12, LU2, T2, NONE, RU2, DR0, false},
    {U, S12, S12, LST, T2, NONE, RU2, DR0, true},
    {U, S12, S12, RU2, T2, NONE, LU2, DR0, true},
    {U, S12, S12, RST, T2, NONE, LU2, DR0, true},
    // --- both children inner, join ---------------------------------------
    {J, S0, S0, NONE, T0, NONE, NONE, DR0, false},
    {J, S0, S1, NONE, T1, RU1, NONE, DR0, false},
    {J, S0, S2, NONE, T0, NONE, NONE, DR0, false},
    {J, S0, S12, NONE, T1, RU1, NONE, DR0, false},
    {J, S1, S0, NONE, T1, LU1, NONE, DR0, false},
    {J, S1, S1, LU1, T1, RU1, NONE, DR0, false},
    {J, S1, S1, RU1, T1, LU1, NONE, DR0, true},
    {J, S1, S2, NONE, T1, LU1, NONE, DR0, false},
    {J, S1, S12, LU1, T1, RU1, NONE, DR0, false},
    {J, S1, S12, RU1, T1, LU1, NONE, DR0, true},
    {J, S1, S12, RST, T1, LU1, NONE, DR0, true},
    {J, S2, S0, NONE, T0, NONE, NONE, DR0, false},
    {J, S2, S1, NONE, T1, RU1, NONE, DR0, false},
    {J, S2, S2, NONE, T0, NONE, NONE, DR0, false},
    {J, S2, S12, NONE, T1, RU1, NONE, DR0, false},
    {J, S12, S0, NONE, T1, LU1, NONE, DR0, false},
    {J, S12, S1, LU1, T1, RU1, NONE, DR0, false},
    {J, S12, S1, LST, T1, RU1, NONE, DR0, true},
    {J, S12, S1, RU1, T1, LU1, NONE, DR0, true},
    {J, S12, S2, NONE, T1, LU1, NONE, DR0, false},
    {J, S12, S12, LU1, T1, RU1, NONE, DR0, false},
    {J, S12, S12, LST, T1, RU1, NONE, DR0, true},
    {J, S12, S12, RU1, T1, LU1, NONE, DR0, true},
    {J, S12, S12, RST, T1, LU1, NONE, DR0, true},
    // --- both children inner, directed join ------------------------------
    {D, S0, S0, NONE, T0, NONE, NONE, DR0, false},
    {D, S0, S1, NONE, T1, RU1, NONE, DR0, false},
    {D, S0, S2, NONE, T0, NONE, NONE, DR0, false},
    {D, S0, S12, NONE, T1, RU1, NONE, DR0, false},
    {D, S1, S0, NONE, T0, NONE, NONE, DR0, false},
    {D, S1, S1, NONE, T1, RU1, NONE, DR0, false},
    {D, S1, S2, LU1, T0, NONE, NONE, DR0, false},
    {D, S1, S2, RU2, T0, NONE, NONE, DR0, true},
    {D, S1, S12, LU1, T1, RU1, NONE, DR0, false},
    {D, S1, S12, RU2, T1, RU1, NONE, DR0, true},
    {D, S1, S12, RST, T0, NONE, NONE, DR0, false},
    {D, S2, S0, NONE, T2, NONE, LU2, DR0, false},
    {D, S2, S1, NONE, T12, RU1, LU2, DR0, false},
    {D, S2, S2, NONE, T2, NONE, LU2, DR0, false},
    {D, S2, S12, NONE, T12, RU1, LU2, DR0, false},
    {D, S12, S0, NONE, T2, NONE, LU2, DR0, false},
    {D, S12, S1, NONE, T12, RU1, LU2, DR0, false},
    {D, S12, S2, LU1, T2, NONE, LU2, DR0, false},
    {D, S12, S2, LST, T0, NONE, NONE, DR0, false},
    {D, S12, S2, RU2, T2, NONE, LU2, DR0, true},
    {D, S12, S12, LU1, T12, RU1, LU2, DR0, false},
    {D, S12, S12, LST, T1, RU1, NONE, DR0, false},
    {D, S12, S12, RU2, T12, RU1, LU2, DR0, true},
    {D, S12, S12, RST, T2, NONE, LU2, DR0, false},
    // --- right child a leaf, disjoint union ------------------------------
    {U, S0, LEAF, NONE, T2, NONE, RLF, DR0, false},
    {U, S1, LEAF, NONE, T12, LU1, RLF, DRU2, false},
    {U, S2, LEAF, LU2, T2, NONE, RLF, DR0, false},
    {U, S2, LEAF, RLF, T2, NONE, LU2, DR0, true},
    {U, S12, LEAF, LU2, T12, LU1, RLF, DRU2, true},
    {U, S12, LEAF, LST, T2, NONE, RLF, DR0, true},
    {U, S12, LEAF, RLF, T2, NONE, LU2, DR0, false},
    // --- right child a leaf, join ----------------------------------------
    {J, S0, LEAF, NONE, T1, RLF, NONE, DR0, false},
    {J, S1, LEAF, LU1, T1, RLF, NONE, DR0, false},
    {J, S1, LEAF, RLF, T1, LU1, NONE, DR0, true},
    {J, S2, LEAF, NONE, T12, RLF, LU2, DRU1, false},
    {J, S12, LEAF, LU1, T12, RLF, LU2, DRU1, true},
    {J, S12, LEAF, LST, T1, RLF, NONE, DR0, true},
    {J, S12, LEAF, RLF, T1, LU1, NONE, DR0, false},
    // --- right child a leaf, directed join --------------------------------
    {D, S0, LEAF, NONE, T1, RLF, NONE, DR0, false},
    {D, S1, LEAF, LU1, T1, RLF, NONE, DR0, true},
    {D, S1, LEAF, RLF, T0, NONE, NONE, DR0, false},
    {D, S2, LEAF, NONE, T12, RLF, LU2, DR0, false},
    {D, S12, LEAF, LU1, T12, RLF, LU2, DR0, true},
    {D, S12, LEAF, LST, T1, RLF, NONE, DR0, false},
    {D, S12, LEAF, RLF, T2, NONE, LU2, DR0, false},
    // --- left child a leaf, directed join ---------------------------------
    {D, LEAF, S0, NONE, T2, NONE, LLF, DR0, false},
    {D, LEAF, S1, NONE, T12, RU1, LLF, DR0, false},
    {D, LEAF, S2, LLF, T0, NONE, NONE, DR0, false},
    {D, LEAF, S2, RU2, T2, NONE, LLF, DR0, true},
    {D, LEAF, S12, LLF, T1, RU1, NONE, DR0, false},
    {D, LEAF, S12, RU2, T12, RU1, LLF, DR0, true},
    {D, LEAF, S12, RST, T2, NONE, LLF, DR0, false},
    // --- both children leaves ---------------------------------------------
    {U, LEAF, LEAF, LLF, T2, NONE, RLF, DR0, false},
    {U, LEAF, LEAF, RLF, T2, NONE, LLF, DR0, true},
    {J, LEAF, LEAF, LLF, T1, RLF, NONE, DR0, false},
    {J, LEAF, LEAF, RLF, T1, LLF, NONE, DR0, true},
    {D, LEAF, LEAF, LLF, T1, RLF, NONE, DR0, false},
    {D, LEAF, LEAF, RLF, T2, NONE, LLF, DR0, false},
};

constexpr int kRuleCount = static_cast<int>(std::size(kRules));

// rule indices bucketed by (op, left-is-leaf, right-is-leaf)
const std::vector<int>& bucket(CoOp op, bool left_leaf, bool right_leaf) {
    static const auto table = [] {
        std::array<std::vector<int>, 12> t;
        for (int i = 0; i < kRuleCount; ++i) {
            const auto& r = kRules[i];
            const int key = static_cast<int>(r.op) * 4 +
                            (r.left == LEAF ? 2 : 0) + (r.right == LEAF ? 1 : 0);
            t[key].push_back(i);
        }
        return t;
    }();
    return table[static_cast<int>(op) * 4 + (left_leaf ? 2 : 0) + (right_leaf ? 1 : 0)];
}

bool mentions(const MergeRule& r, VertexRole role) {
    return r.added == role || r.u1 == role || r.u2 == role;
}

Vertex resolve_role(VertexRole role, const StateEntry* le, const StateEntry* re,
                    ChildRef left, ChildRef right) {
    switch (role) {
    case VertexRole::None: return -1;
    case VertexRole::LeftU1: return le->u1;
    case VertexRole::LeftU2: return le->u2;
    case VertexRole::LeftStar: return le->dr == DoubleRemover::U1 ? le->u1 : le->u2;
    case VertexRole::RightU1: return re->u1;
    case VertexRole::RightU2: return re->u2;
    case VertexRole::RightStar: return re->dr == DoubleRemover::U1 ? re->u1 : re->u2;
    case VertexRole::LeftLeaf: return left.leaf_vertex;
    case VertexRole::RightLeaf: return right.leaf_vertex;
    }
    return -1;
}

} // namespace

std::span<const MergeRule> merge_rules() { return {kRules, std::size(kRules)}; }

std::vector<MergeCandidate> merge_candidates(CoOp op, ChildRef left, ChildRef right) {
    std::vector<MergeCandidate> out;
    for (int idx : bucket(op, left.is_leaf(), right.is_leaf())) {
        const MergeRule& rule = kRules[idx];
        if (rule.pruned)
            continue;
        const StateEntry* le = nullptr;
        const StateEntry* re = nullptr;
        if (rule.left != LEAF) {
            le = &left.state->entry[rule.left];
            if (!le->present())
                continue;
        }
        if (rule.right != LEAF) {
            re = &right.state->entry[rule.right];
            if (!re->present())
                continue;
        }
        // rows naming a double remover need the child to record one
        if (mentions(rule, VertexRole::LeftStar) && le->dr == DoubleRemover::None)
            continue;
        if (mentions(rule, VertexRole::RightStar) && re->dr == DoubleRemover::None)
            continue;
        // adding a child's 1-vertex keeps that child's 2-vertex only when the
        // 1-vertex is not the recorded double remover (and symmetrically)
        if (rule.added == VertexRole::LeftU1 && mentions(rule, VertexRole::LeftU2) &&
            le->dr == DoubleRemover::U1)
            continue;
        if (rule.added == VertexRole::LeftU2 && mentions(rule, VertexRole::LeftU1) &&
            le->dr == DoubleRemover::U2)
            continue;
        if (rule.added == VertexRole::RightU1 && mentions(rule, VertexRole::RightU2) &&
            re->dr == DoubleRemover::U1)
            continue;
        if (rule.added == VertexRole::RightU2 && mentions(rule, VertexRole::RightU1) &&
            re->dr == DoubleRemover::U2)
            continue;

        StateEntry cand;
        cand.size = (le ? le->size : 0) + (re ? re->size : 0) +
                    (rule.added == VertexRole::None ? 0 : 1);
        cand.u1 = resolve_role(rule.u1, le, re, left, right);
        cand.u2 = resolve_role(rule.u2, le, re, left, right);
        cand.dr = rule.star;
        cand.left_choice = rule.left == LEAF ? StateType::T0 : static_cast<StateType>(rule.left);
        cand.right_choice = rule.right == LEAF ? StateType::T0 : static_cast<StateType>(rule.right);
        cand.added = rule.added;
        out.push_back({idx, rule.result, cand});
    }
    return out;
}

NodeState merge(CoOp op, ChildRef left, ChildRef right) {
    NodeState state;
    for (const auto& cand : merge_candidates(op, left, right)) {
        StateEntry& slot = state.get(cand.type);
        if (!slot.present() || cand.entry.size < slot.size)
            slot = cand.entry;
    }

    constexpr auto kAbsent = std::numeric_limits<std::int64_t>::max();
    auto size_of = [&](StateType t) {
        const auto& e = state.get(t);
        return e.present() ? e.size : kAbsent;
    };
    const auto s0 = size_of(StateType::T0), s1 = size_of(StateType::T1),
               s2 = size_of(StateType::T2), s12 = size_of(StateType::T12);
    const bool drop1 = s1 != kAbsent && s0 <= s1;
    const bool drop2 = s2 != kAbsent && s0 <= s2;
    const bool drop0 = s0 != kAbsent && (s1 < s0 || s2 < s0);
    const bool drop12 = s12 != kAbsent && (s1 <= s12 || s2 <= s12);
    if (drop0)
        state.get(StateType::T0) = StateEntry{};
    if (drop1)
        state.get(StateType::T1) = StateEntry{};
    if (drop2)
        state.get(StateType::T2) = StateEntry{};
    if (drop12)
        state.get(StateType::T12) = StateEntry{};

    for (const auto& e : state.entry)
        if (e.present())
            return state;
    throw std::logic_error("merge: no applicable rule produced a state");
}

DpRun bottom_up(CoTree normalized) {
    if (normalized.leaf_count() < 2)
        throw std::invalid_argument("bottom_up requires at least two leaves");
    if (!is_normalized(normalized))
        throw std::invalid_argument("bottom_up requires a normalized co-tree");
    if (normalized.node(normalized.root()).op != CoOp::Join)
        throw DomainError("co-graph is not strongly connected");

    DpRun run{std::move(normalized), {}, {}};
    const CoTree& tree = run.tree;
    run.leaf_vertex.assign(tree.node_count(), -1);
    run.states.resize(tree.node_count());
    // left-to-right leaf numbering by one explicit-stack walk
    std::vector<int> walk{tree.root()};
    Vertex next_vertex = 0;
    while (!walk.empty()) {
        const int id = walk.back();
        walk.pop_back();
        const auto& node = tree.node(id);
        if (node.is_leaf()) {
            run.leaf_vertex[id] = next_vertex++;
        } else {
            walk.push_back(node.right);
            walk.push_back(node.left);
        }
    }

    // node ids are child-first, so an index sweep is a post-order pass
    for (int id = 0; id < tree.node_count(); ++id) {
        const auto& node = tree.node(id);
        if (node.is_leaf())
            continue;
        auto child_ref = [&](int child) {
            return tree.node(child).is_leaf()
                       ? ChildRef::leaf(run.leaf_vertex[child])
                       : ChildRef::inner(run.states[child]);
        };
        run.states[id] = merge(node.op, child_ref(node.left), child_ref(node.right));
    }
    return run;
}

std::vector<Vertex> reconstruct_set(const DpRun& run, int node, StateType type) {
    std::vector<char> chosen(run.tree.leaf_count(), 0);
    std::vector<std::pair<int, StateType>> stack{{node, type}};
    while (!stack.empty()) {
        auto [id, t] = stack.back();
        stack.pop_back();
        const auto& tree_node = run.tree.node(id);
        const StateEntry& e = run.states[id].get(t);
        if (!e.present())
            throw std::invalid_argument("reconstruct_set: entry is absent");
        if (e.added != VertexRole::None) {
            ChildRef l = run.tree.node(tree_node.left).is_leaf()
                             ? ChildRef::leaf(run.leaf_vertex[tree_node.left])
                             : ChildRef::inner(run.states[tree_node.left]);
            ChildRef r = run.tree.node(tree_node.right).is_leaf()
                             ? ChildRef::leaf(run.leaf_vertex[tree_node.right])
                             : ChildRef::inner(run.states[tree_node.right]);
            const StateEntry* le = l.is_leaf() ? nullptr : &l.state->get(e.left_choice);
            const StateEntry* re = r.is_leaf() ? nullptr : &r.state->get(e.right_choice);
            chosen[resolve_role(e.added, le, re, l, r)] = 1;
        }
        if (!run.tree.node(tree_node.left).is_leaf())
            stack.push_back({tree_node.left, e.left_choice});
        if (!run.tree.node(tree_node.right).is_leaf())
            stack.push_back({tree_node.right, e.right_choice});
    }
    std::vector<Vertex> set;
    for (Vertex v = 0; v < run.tree.leaf_count(); ++v)
        if (chosen[v])
            set.push_back(v);
    return set;
}

CographSolution min_resolving_set_cograph(const CoTree& t) {
    CographSolution sol;
    CoTree norm = normalize(t);
    if (norm.leaf_count() == 1) {
        // a single vertex needs no landmarks: there is no pair to tell apart
        sol.normalized = std::move(norm);
        sol.size = 0;
        sol.type = StateType::T0;
        return sol;
    }
    DpRun run = bottom_up(std::move(norm));
    const NodeState& root = run.states[run.tree.root()];
    const StateEntry* best = nullptr;
    StateType best_type = StateType::T0;
    for (StateType t : {StateType::T0, StateType::T1, StateType::T2, StateType::T12}) {
        const StateEntry& e = root.get(t);
        if (e.present() && (!best || e.size < best->size)) {
            best = &e;
            best_type = t;
        }
    }
    if (!best)
        throw std::logic_error("bottom-up pass left no root entry");
    sol.size = best->size;
    sol.type = best_type;
    sol.set = reconstruct_set(run, run.tree.root(), best_type);
    if (static_cast<std::int64_t>(sol.set.size()) != sol.size)
        throw std::logic_error("reconstructed set size disagrees with the DP size");
    std::vector<std::string> vertex_label(run.tree.leaf_count());
    for (int id = 0; id < run.tree.node_count(); ++id)
        if (run.tree.node(id).is_leaf())
            vertex_label[run.leaf_vertex[id]] = run.tree.node(id).label;
    for (Vertex v : sol.set)
        sol.set_labels.push_back(vertex_label[v]);
    sol.normalized = std::move(run.tree);
    return sol;
}

} // namespace codim
