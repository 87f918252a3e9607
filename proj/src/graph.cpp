#include "bnet/graph.hpp"

#include <queue>
#include <set>
#include <string>

#include "bnet/error.hpp"

namespace bnet {

Dag::Dag(int node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count), edges_(std::move(edges)), parents_(node_count) {
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_)
            fail(ErrorKind::InvalidNode,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range for " + std::to_string(node_count_) + " nodes");
        if (u == v)
            fail(ErrorKind::DuplicateEdge, "self-loop at node " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            fail(ErrorKind::DuplicateEdge,
                 "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        parents_[v].push_back(u);
    }
    // Acyclicity check: topological_sort covers all nodes iff the graph is a DAG.
    if ((int)topological_sort(*this).size() != node_count_)
        fail(ErrorKind::CycleDetected, "graph has a directed cycle");
}

Dag build_dag(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    return Dag(node_count, edges);
}

std::vector<NodeId> topological_sort(const Dag& g) {
    const int n = g.node_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<NodeId>> children(n);
    for (const auto& [u, v] : g.edges()) {
        ++indegree[v];
        children[u].push_back(v);
    }
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>> frontier;
    for (NodeId v = 0; v < n; ++v)
        if (indegree[v] == 0) frontier.push(v);

    std::vector<NodeId> order;
    order.reserve(n);
    while (!frontier.empty()) {
        NodeId v = frontier.top();
        frontier.pop();
        order.push_back(v);
        for (NodeId c : children[v])
            if (--indegree[c] == 0) frontier.push(c);
    }
    return order; // shorter than n iff there is a cycle
}

} // namespace bnet
