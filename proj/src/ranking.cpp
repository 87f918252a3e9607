#include "bnet/ranking.hpp"

#include <algorithm>
#include <cassert>

#include "bnet/error.hpp"
#include "bnet/mixradix.hpp"

namespace bnet {

RankAssignment compute_semi_ranks(const NetworkModel& net) {
    const int n = net.var_count();
    RankAssignment ranks;
    ranks.rho.assign(n, 0);

    const std::vector<NodeId> order = topological_sort(net.dag);
    for (NodeId v : order) {
        int max_hidden_parent = -1;
        for (NodeId u : net.dag.parents(v))
            if (net.var(u).kind == VarKind::Hidden)
                max_hidden_parent = std::max(max_hidden_parent, ranks.rho[u]);
        if (max_hidden_parent < 0) {
            ranks.rho[v] = 0;
        } else if (net.var(v).kind == VarKind::Hidden) {
            ranks.rho[v] = max_hidden_parent + 1;
        } else {
            ranks.rho[v] = max_hidden_parent;
        }
    }

    ranks.rho_max = 0;
    for (int r : ranks.rho) ranks.rho_max = std::max(ranks.rho_max, r);

    ranks.slices.assign(ranks.rho_max + 1, {});
    for (NodeId v : order) {
        Slice& slice = ranks.slices[ranks.rho[v]];
        if (net.var(v).kind == VarKind::Observed) {
            slice.observed.push_back(v);
        } else {
            slice.hidden.push_back(v);
            slice.hidden_cards.push_back(net.var(v).card());
        }
    }

    ranks.graded = is_graded(net, ranks).graded;
    return ranks;
}

GradednessResult is_graded(const NetworkModel& net, const RankAssignment& ranks) {
    for (NodeId v = 0; v < net.var_count(); ++v) {
        const bool hidden = net.var(v).kind == VarKind::Hidden;
        const int required = hidden ? ranks.rho[v] - 1 : ranks.rho[v];
        for (NodeId u : net.dag.parents(v)) {
            if (net.var(u).kind != VarKind::Hidden) continue;
            if (ranks.rho[u] != required) return {false, v, u};
        }
    }
    return {true, -1, -1};
}

std::vector<int> SliceStateSpace::decode(std::int64_t index) const {
    assert(index >= 0 && index < size);
    return mixradix_decode(index, cards);
}

SliceStateSpace slice_states(const RankAssignment& ranks, int r) {
    assert(r >= 0 && r <= ranks.rho_max);
    const Slice& slice = ranks.slices[r];
    SliceStateSpace space;
    space.rank = r;
    space.vars = slice.hidden;
    space.cards = slice.hidden_cards;
    space.size = mixradix_size(space.cards);
    return space;
}

} // namespace bnet
