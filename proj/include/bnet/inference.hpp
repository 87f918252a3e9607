#ifndef BNET_INFERENCE_HPP
#define BNET_INFERENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bnet/model.hpp"
#include "bnet/ranking.hpp"
#include "bnet/tropical.hpp"

namespace bnet {

struct InferenceOptions {
    std::int64_t slice_cap = 1'000'000;      // max |D(r)| accepted by forward_dp
    std::int64_t enum_cap = kDefaultEnumCap; // max hidden space for brute-force passes
    double tie_tolerance = 1e-12;            // absolute, for "attains the minimum"
};

// Forward DP array over the rank slices.  Column r holds A[r,y] for
// y in D(r); backpointers[r][y] lists every y' in D(r-1) attaining
// the minimum, in ascending index order.  Entries with A[r,y] = inf
// carry no backpointers.
struct Trellis {
    std::vector<std::vector<Weight>> columns;
    std::vector<std::vector<std::vector<std::int64_t>>> backpointers;
    std::vector<std::int64_t> final_argmin; // states of D(rho_max) attaining `weight`
    Weight weight = kInfWeight;             // min over the last column
    std::uint64_t cell_updates = 0;         // base-row writes + candidate evaluations
};

// Total weight contributed by the rank-r variables: observed factors
// first, then hidden ones, each conditioned on values drawn from x,
// y_r (slice-r hidden states) and y_prev (slice-(r-1) hidden states).
// y_r and y_prev are indices into D(r) and D(r-1); y_prev must be 0
// when r == 0.  Throws UngradedSlice if some hidden parent's rank
// places its value outside {x, y_r, y_prev}.
Weight slice_term_weight(const NetworkModel& net, const WeightModel& wm,
                         const RankAssignment& ranks, int r, const Assignment& x,
                         std::int64_t y_r, std::int64_t y_prev);

// Rank-by-rank forward dynamic program.  Requires a graded network;
// records all minimizing predecessors per cell.
Trellis forward_dp(const NetworkModel& net, const WeightModel& wm,
                   const RankAssignment& ranks, const Assignment& x,
                   const InferenceOptions& opts = {});

enum class TraceMode { One, All };

// Explanations recovered from the trellis.  Mode One yields the
// lexicographically smallest chain under slice-major, mixed-radix
// state order; mode All yields every chain of minimizing decisions,
// in that same order.  Throws NoExplanation when the weight is inf.
std::vector<Assignment> backtrace(const Trellis& trellis, const RankAssignment& ranks,
                                  TraceMode mode);

// Number of optimal chains through the trellis (saturating).
std::uint64_t count_explanations(const Trellis& trellis);

struct TropBruteResult {
    Weight weight = kInfWeight;
    std::vector<Assignment> argmins; // hidden assignments attaining `weight`
};

// min over all hidden assignments of the summed factor weights, with
// the full minimizer set.  Works for non-graded networks too.
TropBruteResult trop_brute_force(const NetworkModel& net, const WeightModel& wm,
                                 const Assignment& x, const InferenceOptions& opts = {});

enum class Engine { Auto, Dp, Oracle };

struct InferenceResult {
    Weight weight = kInfWeight;
    std::optional<double> marginal;      // p_X(x) when the hidden space is enumerable
    std::vector<Assignment> explanations;
    std::uint64_t explanation_count = 0;
};

// End-to-end query: Auto picks the forward DP when the network is
// graded and falls back to the brute-force oracle otherwise.
InferenceResult infer(const NetworkModel& net, const Assignment& x, TraceMode mode,
                      Engine engine = Engine::Auto, const InferenceOptions& opts = {});

// Slice-major key of a hidden assignment: per-rank mixed-radix state
// indices, rank 0 first.  Explanations sort by this key.
std::vector<std::int64_t> slice_key(const Assignment& y, const RankAssignment& ranks);

// --- HMM specialization -------------------------------------------------

struct HmmParams {
    std::vector<std::vector<double>> transition; // l x l, row = previous state
    std::vector<std::vector<double>> emission;   // l x observable alphabet
    std::vector<double> initial;                 // l
};

struct ViterbiResult {
    Weight weight = kInfWeight;
    std::vector<int> path; // one hidden state per time step
};

// Classic trellis Viterbi in weight space over the observation
// sequence.  Matches forward_dp on hmm_to_network exactly.
ViterbiResult viterbi_hmm(const HmmParams& hmm, const std::vector<int>& obs);

// The chain network Y_1 -> ... -> Y_n with emissions Y_t -> X_t.
NetworkModel hmm_to_network(const HmmParams& hmm, int n);

// Evidence assignment mapping each X_t to obs[t].
Assignment hmm_evidence(const NetworkModel& net, const std::vector<int>& obs);

} // namespace bnet

#endif
