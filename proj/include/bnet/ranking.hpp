#ifndef BNET_RANKING_HPP
#define BNET_RANKING_HPP

#include <cstdint>
#include <vector>

#include "bnet/model.hpp"

namespace bnet {

// Variables of one semi-rank, in topological-sort order.
struct Slice {
    std::vector<NodeId> observed;
    std::vector<NodeId> hidden;
    std::vector<int> hidden_cards; // aligned with `hidden`
};

struct RankAssignment {
    std::vector<int> rho; // per-variable semi-rank
    int rho_max = 0;
    std::vector<Slice> slices; // rho_max + 1 entries
    bool graded = false;
};

// Semi-ranks: 0 for variables with no hidden parent; a hidden variable
// gets 1 + the largest semi-rank among its hidden parents, an observed
// variable gets that largest semi-rank itself.
RankAssignment compute_semi_ranks(const NetworkModel& net);

struct GradednessResult {
    bool graded = false;
    NodeId witness_child = -1;  // variable whose hidden parents break the rank rule
    NodeId witness_parent = -1; // the offending parent
};

// The semi-ranks form a rank function iff every hidden variable's
// hidden parents sit exactly one rank below it and every observed
// variable's hidden parents sit exactly at its own rank.
GradednessResult is_graded(const NetworkModel& net, const RankAssignment& ranks);

// Product state space D(r) of the hidden variables with semi-rank r,
// enumerated in mixed-radix order (first variable least significant).
struct SliceStateSpace {
    int rank = 0;
    std::vector<NodeId> vars;
    std::vector<int> cards;
    std::int64_t size = 1; // 1 when the slice has no hidden variables

    std::vector<int> decode(std::int64_t index) const;
};

SliceStateSpace slice_states(const RankAssignment& ranks, int r);

} // namespace bnet

#endif
