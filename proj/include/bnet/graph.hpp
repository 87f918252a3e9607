#ifndef BNET_GRAPH_HPP
#define BNET_GRAPH_HPP

#include <utility>
#include <vector>

namespace bnet {

// Dense node index, contiguous 0..node_count-1.
using NodeId = int;

// Immutable DAG with per-node parent lists.  Parent order within
// parents(v) is edge insertion order; it is the authoritative axis
// order for CPT indexing.
class Dag {
  public:
    Dag(int node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    int node_count() const { return node_count_; }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    const std::vector<NodeId>& parents(NodeId v) const { return parents_[v]; }
    const std::vector<std::vector<NodeId>>& parent_lists() const { return parents_; }

  private:
    int node_count_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> parents_;
};

// Throws CycleDetected, InvalidNode or DuplicateEdge.
Dag build_dag(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edges);

// Kahn's algorithm with a min-id priority frontier; every parent
// precedes its children and ties break toward the smallest NodeId,
// so the order is deterministic and independent of edge order.
std::vector<NodeId> topological_sort(const Dag& g);

} // namespace bnet

#endif
