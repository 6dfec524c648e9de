#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "codim/hardness.hpp"
#include "codim/resolve.hpp"
#include "test_util.hpp"

using namespace codim;

namespace {

const char* kWorkedInstance =
    "x1 x2 x3 x4\n"
    "x1 x3 x4\n"
    "x1 x4\n"
    "x1 x2 x4\n"
    "x2\n"
    "x1 x4\n"
    "x2 x3\n"
    "x1 x3 x4\n";

HittingSetInstance random_instance(std::mt19937_64& rng, int max_n, int max_m) {
    using testutil::bounded;
    HittingSetInstance inst;
    const int n = 2 + bounded(rng, max_n - 1);
    for (int i = 0; i < n; ++i)
        inst.elements.push_back("x" + std::to_string(i + 1));
    const int m = 1 + bounded(rng, max_m);
    for (int j = 0; j < m; ++j) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (bounded(rng, 2) == 0)
                subset.push_back(i);
        if (subset.empty())
            subset.push_back(bounded(rng, n));
        if (static_cast<int>(subset.size()) == n)
            subset.pop_back();
        inst.sets.push_back(std::move(subset));
    }
    return inst;
}

bool hits_all(const HittingSetInstance& inst, const std::vector<int>& pick) {
    for (const auto& subset : inst.sets) {
        bool hit = false;
        for (int i : subset)
            if (std::count(pick.begin(), pick.end(), i)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("hardness") {

TEST_CASE("parsing a small instance") {
    HittingSetInstance inst = parse_hitting_set("x1 x2\nx1\nx2\nx1\n");
    CHECK(inst.n() == 2);
    CHECK(inst.m() == 3);
    CHECK(inst.sets[0] == std::vector<int>{0});
    CHECK(inst.sets[1] == std::vector<int>{1});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_hitting_set("x1 x2\nx1 x2\n"), ParseError); // improper subset
    try {
        parse_hitting_set("x1 x2\nx1 x2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("proper subset") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_hitting_set("x1 x2\nx3\n"), ParseError);    // unknown element
    CHECK_THROWS_AS(parse_hitting_set("x1 x2\n\nx1\n"), ParseError);  // empty subset line
    CHECK_THROWS_AS(parse_hitting_set("x1 x1\nx1\n"), ParseError);    // duplicate element
    CHECK_THROWS_AS(parse_hitting_set("# only a comment\n"), ParseError);
    // a trailing newline after the last subset is fine
    CHECK_NOTHROW(parse_hitting_set("x1 x2\nx1\n\n"));
}

TEST_CASE("normalization duplicates subsets cyclically until m exceeds n") {
    HittingSetInstance small = parse_hitting_set("x1 x2\nx1\nx2\nx1\n");
    CHECK(normalize_instance(small).m() == 3); // already m > n

    HittingSetInstance inst;
    inst.elements = {"x1", "x2", "x3"};
    inst.sets = {{0, 1}, {2}};
    HittingSetInstance norm = normalize_instance(inst);
    CHECK(norm.m() == 4);
    CHECK(norm.sets[2] == inst.sets[0]);
    CHECK(norm.sets[3] == inst.sets[1]);
}

TEST_CASE("normalization never changes the minimum hitting set") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        HittingSetInstance inst = random_instance(rng, 5, 6);
        auto before = min_hitting_set_bruteforce(inst);
        auto after = min_hitting_set_bruteforce(normalize_instance(inst));
        CHECK(before == after);
    }
}

TEST_CASE("the worked instance reduces to 21 vertices and 81 edges") {
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    CHECK(inst.n() == 4);
    CHECK(inst.m() == 7);
    ReductionResult red = reduce(inst);
    CHECK(red.graph.vertex_count() == 3 + 4 + 2 * 7);
    // group sizes: 4 + 1 + 3 + 2 + 7 + 24 + 28 + 12
    CHECK(red.graph.edge_count() == 81);
    CHECK(is_acyclic(red.graph));
    CHECK(red.graph.label(red.vertex_of_element(1)) == "x2");
    CHECK(red.graph.label(red.vertex_of_set(2)) == "C3");
    CHECK(red.graph.label(red.vertex_of_set_prime(6)) == "Cp7");
    CHECK(role_name(red.roles[red.vertex_of_set_prime(6)]) == "setprime:7");
}

TEST_CASE("reduction needs a normalized instance") {
    HittingSetInstance inst;
    inst.elements = {"x1", "x2", "x3"};
    inst.sets = {{0}, {1}};
    CHECK_THROWS_AS(reduce(inst), std::invalid_argument);
    CHECK_NOTHROW(reduce(normalize_instance(inst)));
}

TEST_CASE("anchor distances index the chain and the layers") {
    ReductionResult red = reduce(parse_hitting_set(kWorkedInstance));
    auto d = distance_table(red.graph);
    for (int i = 0; i < red.n; ++i)
        CHECK(d.at(red.vertex_b(), red.vertex_of_element(i)) == i + 1);
    for (int j = 0; j < red.m; ++j) {
        CHECK(d.at(red.vertex_c(), red.vertex_of_set(j)) == j + 1);
        CHECK(d.at(red.vertex_c(), red.vertex_of_set_prime(j)) == j + 1);
    }
    for (int i = 0; i < red.n; ++i) {
        CHECK(d.at(red.vertex_a(), red.vertex_of_element(i)) == 1);
        for (int j = 0; j < red.m; ++j) {
            CHECK(d.at(red.vertex_a(), red.vertex_of_set(j)) == 2);
            CHECK(d.at(red.vertex_a(), red.vertex_of_set_prime(j)) == 2);
        }
    }
}

TEST_CASE("membership is encoded by the primed-layer edges") {
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    ReductionResult red = reduce(inst);
    auto d = distance_table(red.graph);
    for (int i = 0; i < red.n; ++i) {
        for (int j = 0; j < red.m; ++j) {
            const bool member =
                std::count(inst.sets[j].begin(), inst.sets[j].end(), i) > 0;
            CHECK(red.graph.has_edge(red.vertex_of_element(i),
                                     red.vertex_of_set_prime(j)) == !member);
            CHECK(d.at(red.vertex_of_element(i), red.vertex_of_set_prime(j)) ==
                  (member ? 2 : 1));
        }
    }
}

TEST_CASE("the sources belong to every minimum resolving set") {
    ReductionResult red = reduce(parse_hitting_set(kWorkedInstance));
    auto best = min_resolving_set_bruteforce(red.graph, 25);
    for (Vertex v : {red.vertex_a(), red.vertex_b(), red.vertex_c()})
        CHECK(std::count(best.begin(), best.end(), v) == 1);
}

TEST_CASE("minimum hitting set of the worked instance") {
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    auto hit = min_hitting_set_bruteforce(inst);
    CHECK(hit.size() == 2);
    CHECK(hit == std::vector<int>{0, 1}); // lex-least two-element hit: x1 and x2
    CHECK(hits_all(inst, hit));
    CHECK(hits_all(inst, {1, 3})); // x2 and x4 hit as well

    HittingSetInstance tiny;
    tiny.elements = {"x1", "x2"};
    tiny.sets = {{0}};
    CHECK(min_hitting_set_bruteforce(tiny) == std::vector<int>{0});
}

TEST_CASE("hitting sets translate to resolving sets") {
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    ReductionResult red = reduce(inst);
    auto r = hitting_to_resolving(inst, {1, 3});
    CHECK(r.size() == 5);
    CHECK(is_resolving_set(red.graph, r));

    // the full ground set always hits
    auto r_full = hitting_to_resolving(inst, {0, 1, 2, 3});
    CHECK(r_full.size() == 3 + 4);
    CHECK(is_resolving_set(red.graph, r_full));

    CHECK_THROWS_AS(hitting_to_resolving(inst, {0}), std::invalid_argument);
}

TEST_CASE("resolving sets translate back through vertex replacement") {
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    ReductionResult red = reduce(inst);

    // a round trip through the translation keeps the hitting set
    auto r = hitting_to_resolving(inst, {1, 3});
    CHECK(resolving_to_hitting(inst, r) == std::vector<int>{1, 3});

    // {a, b, c, C4} leaves the pair C1/Cp1 unseparated, so it is rejected
    std::vector<Vertex> with_set_vertex{red.vertex_a(), red.vertex_b(),
                                        red.vertex_c(), red.vertex_of_set(3)};
    CHECK_FALSE(is_resolving_set(red.graph, with_set_vertex));
    CHECK_THROWS_AS(resolving_to_hitting(inst, with_set_vertex),
                    std::invalid_argument);

    // a resolving set holding a set-layer vertex gets it replaced by the
    // least member of its subset
    std::vector<Vertex> oversized = hitting_to_resolving(inst, {0, 1, 2, 3});
    oversized.push_back(red.vertex_of_set(3)); // C4, least member x2
    auto translated = resolving_to_hitting(inst, oversized);
    CHECK(translated == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("worked instance: the reduction's true dimension is four") {
    // The chain anchor reaches C_j in two steps but Cp_j in three whenever
    // x1 lies in C_j, so it separates those layer pairs on its own. The
    // brute-force oracle therefore needs hits only for the subsets avoiding
    // x1 (here C4 and C6, both hit by x2), one less than the full hitting
    // number promises.
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    ReductionResult red = reduce(inst);
    auto d = distance_table(red.graph);
    CHECK(d.at(red.vertex_b(), red.vertex_of_set(0)) == 2);
    CHECK(d.at(red.vertex_b(), red.vertex_of_set_prime(0)) == 3); // x1 in C1

    auto best = min_resolving_set_bruteforce(red.graph, 25);
    CHECK(best.size() == 4);
    CHECK(best == std::vector<Vertex>{red.vertex_a(), red.vertex_b(),
                                      red.vertex_c(), red.vertex_of_element(1)});

    // the stated five-vertex set is resolving, just not minimum
    auto stated = hitting_to_resolving(inst, {1, 3});
    CHECK(is_resolving_set(red.graph, stated));
    CHECK(stated.size() == 5);
}

TEST_CASE("edge counts follow the group formula on random instances") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        HittingSetInstance inst = normalize_instance(random_instance(rng, 5, 6));
        const long long n = inst.n(), m = inst.m();
        long long nonmembers = 0;
        for (const auto& subset : inst.sets)
            nonmembers += n - static_cast<long long>(subset.size());
        ReductionResult red = reduce(inst);
        CHECK(red.graph.vertex_count() == 3 + n + 2 * m);
        CHECK(static_cast<long long>(red.graph.edge_count()) ==
              n + 1 + (n - 1) + 2 + m + 4 * (m - 1) + n * m + nonmembers);
        CHECK(is_acyclic(red.graph));
    }
}

TEST_CASE("a minimum set leaning on the chain anchor translates to a non-hitting pick") {
    // The oracle's minimum for the worked instance is {a, b, c, x2}; x2 alone
    // misses C1, so the translated selection is not a hitting set. Only
    // resolving sets built from actual hitting sets round-trip.
    HittingSetInstance inst = parse_hitting_set(kWorkedInstance);
    ReductionResult red = reduce(inst);
    auto best = min_resolving_set_bruteforce(red.graph, 25);
    auto picked = resolving_to_hitting(inst, best);
    CHECK(picked == std::vector<int>{1});
    CHECK_FALSE(hits_all(inst, picked));
}

TEST_CASE("dimension equals three plus the hitting number of the x1-free subfamily") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        HittingSetInstance inst =
            normalize_instance(random_instance(rng, 4, 4));
        if (inst.m() > 6)
            continue;
        ReductionResult red = reduce(inst);
        auto best = min_resolving_set_bruteforce(red.graph, 25);

        HittingSetInstance sub;
        sub.elements = inst.elements;
        for (const auto& subset : inst.sets)
            if (!std::count(subset.begin(), subset.end(), 0))
                sub.sets.push_back(subset);
        auto sub_hit = min_hitting_set_bruteforce(sub);
        CAPTURE(inst.m());
        CHECK(static_cast<int>(best.size()) == 3 + static_cast<int>(sub_hit.size()));
    }
}

TEST_CASE("random instances: translations stay valid both ways") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        HittingSetInstance inst = normalize_instance(random_instance(rng, 4, 4));
        if (inst.m() > 6)
            continue;
        ReductionResult red = reduce(inst);
        auto hit = min_hitting_set_bruteforce(inst);
        auto r = hitting_to_resolving(inst, hit);
        CHECK(is_resolving_set(red.graph, r));
        auto back = resolving_to_hitting(inst, r);
        CHECK(back == hit);
        CHECK(hits_all(inst, back));
    }
}

} // TEST_SUITE
