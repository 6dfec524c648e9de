#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "codim/codim_dp.hpp"
#include "codim/resolve.hpp"
#include "test_util.hpp"
#include "tree_enum.hpp"

using namespace codim;

namespace {

std::vector<StateType> present_types(const NodeState& s) {
    std::vector<StateType> out;
    for (StateType t : {StateType::T0, StateType::T1, StateType::T2, StateType::T12})
        if (s.get(t).present())
            out.push_back(t);
    return out;
}

NodeState synthetic_state() {
    NodeState s;
    for (StateType t : {StateType::T0, StateType::T1, StateType::T2, StateType::T12}) {
        StateEntry& e = s.get(t);
        e.size = 1;
        if (t == StateType::T1 || t == StateType::T12)
            e.u1 = 0;
        if (t == StateType::T2 || t == StateType::T12)
            e.u2 = 1;
        if (t == StateType::T12)
            e.dr = DoubleRemover::U2;
    }
    return s;
}

// Checks every stored entry of a finished pass against the materialized
// graph: the reconstructed set resolves the subtree's vertices in the full
// graph, the recorded 1-/2-vertices classify as such (and are unique within
// the subtree), and the double-remover mark is exact.
void validate_run(const DpRun& run) {
    auto mat = materialize(run.tree);
    const auto ranges = leaf_ranges(run.tree);
    for (int id = 0; id < run.tree.node_count(); ++id) {
        if (run.tree.node(id).is_leaf())
            continue;
        const auto [lo, hi] = ranges[id];
        for (StateType t : present_types(run.states[id])) {
            const StateEntry& e = run.states[id].get(t);
            auto set = reconstruct_set(run, id, t);
            REQUIRE(static_cast<std::int64_t>(set.size()) == e.size);
            for (Vertex v : set)
                REQUIRE((v >= lo && v < hi));
            std::vector<Vertex> subtree;
            for (Vertex v = lo; v < hi; ++v)
                subtree.push_back(v);
            CHECK(is_resolving_for(mat.graph, set, subtree));

            const bool want_u1 = t == StateType::T1 || t == StateType::T12;
            const bool want_u2 = t == StateType::T2 || t == StateType::T12;
            CHECK((e.u1 >= 0) == want_u1);
            CHECK((e.u2 >= 0) == want_u2);
            for (Vertex v = lo; v < hi; ++v) {
                if (std::count(set.begin(), set.end(), v))
                    continue;
                const auto cls = classify_vertex(mat.graph, set, v);
                CHECK((cls == VertexClass::One) == (want_u1 && v == e.u1));
                CHECK((cls == VertexClass::Two) == (want_u2 && v == e.u2));
            }
            if (t == StateType::T12) {
                const bool u1_removes =
                    is_double_remover(mat.graph, set, e.u1, e.u2, e.u1);
                const bool u2_removes =
                    is_double_remover(mat.graph, set, e.u1, e.u2, e.u2);
                CHECK(u1_removes == (e.dr == DoubleRemover::U1));
                CHECK(u2_removes == (e.dr == DoubleRemover::U2));
                for (Vertex v = lo; v < hi; ++v) {
                    if (v == e.u1 || v == e.u2 ||
                        std::count(set.begin(), set.end(), v))
                        continue;
                    CHECK_FALSE(is_double_remover(mat.graph, set, e.u1, e.u2, v));
                }
            } else {
                CHECK(e.dr == DoubleRemover::None);
            }
        }
    }
}

} // namespace

TEST_SUITE("codim_dp") {

TEST_CASE("the rule table matches the published row counts") {
    auto rules = merge_rules();
    CHECK(rules.size() == 106);
    std::map<std::pair<int, std::pair<int, int>>, std::pair<int, int>> counts;
    for (const auto& r : rules) {
        auto& [live, pruned] = counts[{static_cast<int>(r.op),
                                       {r.left < 0 ? 1 : 0, r.right < 0 ? 1 : 0}}];
        (r.pruned ? pruned : live) += 1;
    }
    auto at = [&](CoOp op, bool lleaf, bool rleaf) {
        return counts.at({static_cast<int>(op), {lleaf ? 1 : 0, rleaf ? 1 : 0}});
    };
    CHECK(at(CoOp::Union, false, false) == std::pair(16, 8));
    CHECK(at(CoOp::Join, false, false) == std::pair(16, 8));
    CHECK(at(CoOp::DirJoin, false, false) == std::pair(20, 4));
    CHECK(at(CoOp::Union, false, true) == std::pair(4, 3));
    CHECK(at(CoOp::Join, false, true) == std::pair(4, 3));
    CHECK(at(CoOp::DirJoin, false, true) == std::pair(5, 2));
    CHECK(at(CoOp::DirJoin, true, false) == std::pair(5, 2));
    CHECK(at(CoOp::Union, true, true) == std::pair(1, 1));
    CHECK(at(CoOp::Join, true, true) == std::pair(1, 1));
    CHECK(at(CoOp::DirJoin, true, true) == std::pair(2, 0));
}

TEST_CASE("leaf-leaf merges") {
    auto left = ChildRef::leaf(4);
    auto right = ChildRef::leaf(9);

    NodeState uni = merge(CoOp::Union, left, right);
    CHECK(present_types(uni) == std::vector<StateType>{StateType::T2});
    CHECK(uni.get(StateType::T2).size == 1);
    CHECK(uni.get(StateType::T2).u2 == 9);

    NodeState join = merge(CoOp::Join, left, right);
    CHECK(present_types(join) == std::vector<StateType>{StateType::T1});
    CHECK(join.get(StateType::T1).u1 == 9);

    NodeState dir = merge(CoOp::DirJoin, left, right);
    CHECK(present_types(dir) ==
          std::vector<StateType>{StateType::T1, StateType::T2});
    CHECK(dir.get(StateType::T1).size == 1);
    CHECK(dir.get(StateType::T1).u1 == 9);
    CHECK(dir.get(StateType::T2).size == 1);
    CHECK(dir.get(StateType::T2).u2 == 4);
}

TEST_CASE("a union with a leaf turns a lone 1-vertex state into both statuses") {
    NodeState left;
    StateEntry& e = left.get(StateType::T1);
    e.size = 1;
    e.u1 = 0;
    NodeState merged = merge(CoOp::Union, ChildRef::inner(left), ChildRef::leaf(3));
    CHECK(present_types(merged) == std::vector<StateType>{StateType::T12});
    const StateEntry& got = merged.get(StateType::T12);
    CHECK(got.size == 1);
    CHECK(got.u1 == 0);
    CHECK(got.u2 == 3);
    CHECK(got.dr == DoubleRemover::U2); // the fresh leaf removes both statuses
}

TEST_CASE("a directed join can spend the right child's double remover") {
    NodeState left;
    left.get(StateType::T1) = {1, 7, -1, DoubleRemover::None, StateType::T0,
                               StateType::T0, VertexRole::None};
    NodeState right = synthetic_state();
    auto candidates =
        merge_candidates(CoOp::DirJoin, ChildRef::inner(left), ChildRef::inner(right));
    bool found = false;
    for (const auto& c : candidates) {
        const MergeRule& rule = merge_rules()[c.rule_index];
        if (rule.added == VertexRole::RightStar && c.type == StateType::T0) {
            found = true;
            CHECK(c.entry.size == 1 + 1 + 1);
        }
    }
    CHECK(found);
}

TEST_CASE("every live rule fires on some child configuration") {
    NodeState inner_state = synthetic_state();
    std::set<int> fired;
    for (CoOp op : {CoOp::Union, CoOp::Join, CoOp::DirJoin}) {
        for (bool lleaf : {false, true}) {
            for (bool rleaf : {false, true}) {
                ChildRef l = lleaf ? ChildRef::leaf(5) : ChildRef::inner(inner_state);
                ChildRef r = rleaf ? ChildRef::leaf(6) : ChildRef::inner(inner_state);
                for (const auto& c : merge_candidates(op, l, r)) {
                    CHECK_FALSE(merge_rules()[c.rule_index].pruned);
                    fired.insert(c.rule_index);
                }
            }
        }
    }
    // a double remover recorded on the 1-vertex unlocks the remaining guards
    NodeState dr1 = synthetic_state();
    dr1.get(StateType::T12).dr = DoubleRemover::U1;
    for (CoOp op : {CoOp::Union, CoOp::Join, CoOp::DirJoin})
        for (const auto& c :
             merge_candidates(op, ChildRef::inner(dr1), ChildRef::inner(dr1)))
            fired.insert(c.rule_index);
    int live = 0;
    for (std::size_t i = 0; i < merge_rules().size(); ++i)
        if (!merge_rules()[i].pruned) {
            ++live;
            CHECK_MESSAGE(fired.count(static_cast<int>(i)) == 1,
                          "rule ", i, " never fired");
        }
    CHECK(live == 74);
}

TEST_CASE("join of two leaves keeps a single 1-vertex state") {
    DpRun run = bottom_up(parse_cotree("a*b"));
    const NodeState& root = run.states[run.tree.root()];
    CHECK(present_types(root) == std::vector<StateType>{StateType::T1});
    CHECK(root.get(StateType::T1).size == 1);
    CHECK(reconstruct_set(run, run.tree.root(), StateType::T1) ==
          std::vector<Vertex>{0});
    CHECK(min_resolving_set_cograph(parse_cotree("a*b")).size == 1);
}

TEST_CASE("the worked seven-leaf example, node by node") {
    CoTree t = parse_cotree("((a*b)>((c*d)+e))*(f+g)");
    DpRun run = bottom_up(t);
    auto mat = materialize(run.tree);
    const auto& idx = mat.leaves.index;

    // inner nodes in bottom-up order: a*b, c*d, (c*d)+e, the directed join,
    // f+g, then the root join
    std::vector<int> inner;
    for (int id = 0; id < t.node_count(); ++id)
        if (!t.node(id).is_leaf())
            inner.push_back(id);
    REQUIRE(inner.size() == 6);

    const std::vector<StateType> expect_type{StateType::T1,  StateType::T1,
                                             StateType::T12, StateType::T0,
                                             StateType::T2,  StateType::T0};
    const std::vector<std::int64_t> expect_size{1, 1, 1, 3, 1, 4};
    const std::vector<std::vector<std::string>> expect_set{
        {"a"}, {"c"}, {"c"}, {"a", "c", "e"}, {"f"}, {"a", "c", "e", "f"}};

    for (int k = 0; k < 6; ++k) {
        CAPTURE(k);
        const NodeState& s = run.states[inner[k]];
        CHECK(present_types(s) == std::vector<StateType>{expect_type[k]});
        const StateEntry& e = s.get(expect_type[k]);
        CHECK(e.size == expect_size[k]);
        std::vector<Vertex> want;
        for (const auto& name : expect_set[k])
            want.push_back(idx.at(name));
        CHECK(reconstruct_set(run, inner[k], expect_type[k]) == want);
    }

    // recorded special vertices: b, d, then d with the union leaf e as a
    // double remover, none, g, none
    CHECK(run.states[inner[0]].get(StateType::T1).u1 == idx.at("b"));
    CHECK(run.states[inner[1]].get(StateType::T1).u1 == idx.at("d"));
    const StateEntry& third = run.states[inner[2]].get(StateType::T12);
    CHECK(third.u1 == idx.at("d"));
    CHECK(third.u2 == idx.at("e"));
    CHECK(third.dr == DoubleRemover::U2);
    CHECK(run.states[inner[4]].get(StateType::T2).u2 == idx.at("g"));

    validate_run(run);
}

TEST_CASE("solution on the worked example") {
    CographSolution sol =
        min_resolving_set_cograph(parse_cotree("((a*b)>((c*d)+e))*(f+g)"));
    CHECK(sol.size == 4);
    CHECK(sol.type == StateType::T0);
    CHECK(sol.set_labels == std::vector<std::string>{"a", "c", "e", "f"});
    auto mat = materialize(sol.normalized);
    CHECK(is_resolving_set(mat.graph, sol.set));
}

TEST_CASE("the join variant of the last pair gives the same size") {
    // reading the final two-leaf subtree as a join instead of a union
    CographSolution sol =
        min_resolving_set_cograph(parse_cotree("((a*b)>((c*d)+e))*(f*g)"));
    auto mat = materialize(sol.normalized);
    auto brute = min_resolving_set_bruteforce(mat.graph);
    CHECK(sol.size == static_cast<std::int64_t>(brute.size()));
    CHECK(sol.size == 4);
    CHECK(is_resolving_set(mat.graph, sol.set));
}

TEST_CASE("non-join roots are refused") {
    CHECK_THROWS_WITH_AS(min_resolving_set_cograph(parse_cotree("a+b")),
                         "co-graph is not strongly connected", DomainError);
    CHECK_THROWS_AS(min_resolving_set_cograph(parse_cotree("(a*b)>(c*d)")),
                    DomainError);
}

TEST_CASE("a single leaf resolves itself") {
    CographSolution sol = min_resolving_set_cograph(parse_cotree("a"));
    CHECK(sol.size == 0);
    CHECK(sol.set.empty());
}

TEST_CASE("bottom_up rejects unnormalized trees but the solver accepts them") {
    CoTree t = parse_cotree("(e+(a*b))*c"); // leaf on the left of a union
    CHECK_THROWS_AS(bottom_up(t), std::invalid_argument);
    CographSolution sol = min_resolving_set_cograph(t);
    auto mat = materialize(sol.normalized);
    CHECK(is_resolving_set(mat.graph, sol.set));
}

TEST_CASE("ten seeded random co-graphs agree with the brute-force oracle") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const int leaves = 2 + testutil::bounded(rng, 5);
        CoTree t = random_cotree(rng(), leaves, true);
        CographSolution sol = min_resolving_set_cograph(t);
        auto mat = materialize(sol.normalized);
        auto brute = min_resolving_set_bruteforce(mat.graph);
        CAPTURE(to_expression(t));
        CHECK(sol.size == static_cast<std::int64_t>(brute.size()));
        CHECK(is_resolving_set(mat.graph, sol.set));
    }
}

TEST_CASE("every stored entry of random runs is sound") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const int leaves = 2 + testutil::bounded(rng, 6);
        CoTree t = normalize(random_cotree(rng(), leaves, true));
        validate_run(bottom_up(t));
    }
}

TEST_CASE("every stored entry of all small join-rooted trees is sound") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& shape : testutil::all_join_rooted(n)) {
            CoTree t = normalize(testutil::tree_from_shape(shape));
            CAPTURE(shape);
            validate_run(bottom_up(t));
        }
    }
}

} // TEST_SUITE
