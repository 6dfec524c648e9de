#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codim/cotree.hpp"
#include "codim/digraph.hpp"

namespace codim {

// Classification of a resolving set by which special vertices exist w.r.t.
// it: T1 has a 1-vertex only, T2 a 2-vertex only, T12 both, T0 neither.
enum class StateType : std::uint8_t { T0 = 0, T1 = 1, T2 = 2, T12 = 3 };

const char* state_type_name(StateType t);

// Which of the recorded special vertices removes both statuses when added
// to the set. Only a T12 entry can carry one.
enum class DoubleRemover : std::uint8_t { None, U1, U2 };

// Vertex slot referenced by a merge rule: a child's recorded 1-vertex,
// 2-vertex, or double remover, or a child leaf vertex itself.
enum class VertexRole : std::uint8_t {
    None,
    LeftU1,
    LeftU2,
    LeftStar,
    RightU1,
    RightU2,
    RightStar,
    LeftLeaf,
    RightLeaf,
};

// One minimum resolving set for the subtree's vertex set, kept as size plus
// reconstruction data; the actual set is rebuilt once at the end. Packed to
// 16 bytes so a pass over a million-leaf tree stays cache-friendly.
struct StateEntry {
    std::int32_t size = -1; // -1 = absent
    Vertex u1 = -1;
    Vertex u2 = -1;
    DoubleRemover dr = DoubleRemover::None;
    // backpointer: which child entries were combined and what was added
    StateType left_choice{StateType::T0};
    StateType right_choice{StateType::T0};
    VertexRole added = VertexRole::None;

    bool present() const { return size >= 0; }
};
static_assert(sizeof(StateEntry) == 16);

struct NodeState {
    std::array<StateEntry, 4> entry; // indexed by StateType

    const StateEntry& get(StateType t) const {
        return entry[static_cast<int>(t)];
    }
    StateEntry& get(StateType t) { return entry[static_cast<int>(t)]; }
};

// A merge input: either a leaf vertex or the previously computed state of an
// inner child.
struct ChildRef {
    const NodeState* state = nullptr;
    Vertex leaf_vertex = -1;
    bool is_leaf() const { return state == nullptr; }

    static ChildRef leaf(Vertex v) { return {nullptr, v}; }
    static ChildRef inner(const NodeState& s) { return {&s, -1}; }
};

// One row of the merge tables. `left`/`right` select a child entry type
// (or the leaf case), `added` is the vertex appended to the union of the two
// child sets (None keeps the plain union), and the result columns describe
// the produced entry. Pruned rows are dominated alternatives kept for
// auditability; the engine skips them.
struct MergeRule {
    CoOp op;
    std::int8_t left;  // 0,1,2,3 = entry type; -1 = leaf child
    std::int8_t right; // likewise
    VertexRole added;
    StateType result;
    VertexRole u1;
    VertexRole u2;
    DoubleRemover star;
    bool pruned;
};

std::span<const MergeRule> merge_rules();

struct MergeCandidate {
    int rule_index; // into merge_rules()
    StateType type;
    StateEntry entry;
};

// All applicable live rules evaluated, before per-type minimisation and
// dominance pruning. Exposed for rule-coverage tests.
std::vector<MergeCandidate> merge_candidates(CoOp op, ChildRef left, ChildRef right);

// Applies every applicable live rule, keeps the smallest entry per type
// (first rule wins ties), then prunes dominated entries: a T0 of size s
// drops T1/T2 entries of size >= s, a strictly smaller T1 or T2 drops T0,
// and a T1 or T2 of size s drops a T12 entry of size >= s.
NodeState merge(CoOp op, ChildRef left, ChildRef right);

// Bottom-up pass over a normalized co-tree with at least two leaves and a
// Join root. Leaves contribute their vertex index in left-to-right order.
struct DpRun {
    CoTree tree;                    // the tree the pass ran on
    std::vector<Vertex> leaf_vertex; // node id -> vertex (-1 for inner nodes)
    std::vector<NodeState> states;   // node id -> state (leaves stay empty)
};

DpRun bottom_up(CoTree normalized);

// Walks backpointers from (node, type) and returns the vertex set, sorted.
std::vector<Vertex> reconstruct_set(const DpRun& run, int node, StateType type);

struct CographSolution {
    std::int64_t size = 0;
    StateType type = StateType::T0;
    std::vector<Vertex> set;             // vertex indices, sorted
    std::vector<std::string> set_labels; // same set as leaf labels
    CoTree normalized;                   // tree defining the vertex indexing
};

// Normalizes, runs the bottom-up pass, picks the smallest root entry
// (ties prefer fewer restrictions: T0, T1, T2, then T12) and reconstructs
// the set. A single-leaf tree yields the empty set. Throws DomainError when
// the co-graph is not strongly connected.
CographSolution min_resolving_set_cograph(const CoTree& t);

} // namespace codim
