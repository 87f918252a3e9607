#include <doctest.h>

#include <algorithm>
#include <random>

#include "bnet/error.hpp"
#include "bnet/graph.hpp"
#include "helpers.hpp"

using namespace bnet;
using bnet_tests::expect_error;

TEST_SUITE("graph") {

TEST_CASE("chain parents and order") {
    const Dag g = build_dag(3, {{0, 1}, {1, 2}});
    CHECK(g.parents(0).empty());
    CHECK(g.parents(2) == std::vector<NodeId>{1});
    CHECK(topological_sort(g) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("diamond topology") {
    // X1 -> X2, X1 -> X3, X2 -> X4, X3 -> X4
    const Dag g = build_dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(g.parents(3) == std::vector<NodeId>{1, 2});
    CHECK(topological_sort(g) == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("construction errors") {
    expect_error(ErrorKind::CycleDetected, [] { build_dag(2, {{0, 1}, {1, 0}}); });
    expect_error(ErrorKind::CycleDetected, [] { build_dag(3, {{0, 1}, {1, 2}, {2, 0}}); });
    expect_error(ErrorKind::InvalidNode, [] { build_dag(2, {{0, 5}}); });
    expect_error(ErrorKind::DuplicateEdge, [] { build_dag(2, {{0, 1}, {0, 1}}); });
    expect_error(ErrorKind::DuplicateEdge, [] { build_dag(2, {{1, 1}}); });
}

TEST_CASE("edgeless graph sorts by id") {
    CHECK(topological_sort(build_dag(3, {})) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("parent order is edge insertion order") {
    const Dag g = build_dag(3, {{2, 0}, {1, 0}});
    CHECK(g.parents(0) == std::vector<NodeId>{2, 1});
}

TEST_CASE("random DAGs: sort is a consistent permutation") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + (int)(rng() % 9);
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.push_back({u, v});

        const Dag g = build_dag(n, edges);
        const std::vector<NodeId> order = topological_sort(g);
        REQUIRE((int)order.size() == n);

        std::vector<int> position(n, -1);
        for (int i = 0; i < n; ++i) {
            CHECK(position[order[i]] == -1); // permutation: no repeats
            position[order[i]] = i;
        }
        for (const auto& [u, v] : edges) CHECK(position[u] < position[v]);

        // Rebuilding from the dag's own edge list reproduces the parents.
        const Dag rebuilt = build_dag(n, g.edges());
        CHECK(rebuilt.parent_lists() == g.parent_lists());

        // The sort only depends on the edge set, not its order.
        std::vector<std::pair<NodeId, NodeId>> shuffled = edges;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(topological_sort(build_dag(n, shuffled)) == order);
    }
}

} // TEST_SUITE
