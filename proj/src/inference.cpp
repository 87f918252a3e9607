#include "bnet/inference.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "bnet/error.hpp"
#include "bnet/mixradix.hpp"

namespace bnet {

namespace {

void write_slice(Assignment& a, const Slice& slice, const std::vector<int>& digits) {
    for (std::size_t i = 0; i < slice.hidden.size(); ++i)
        a.set(slice.hidden[i], digits[i]);
}

Weight factor_weight(const NetworkModel& net, const WeightModel& wm, NodeId v,
                     const Assignment& a) {
    return wm.tables[v][net.row_index(v, a)][a.value(v)];
}

// Weight of the rank-r bracket: observed factors first, then hidden
// ones, each read from the scratch assignment.
Weight rank_term(const NetworkModel& net, const WeightModel& wm, const Slice& slice,
                 const Assignment& a) {
    Weight term = 0.0;
    for (NodeId v : slice.observed) term = trop_mul(term, factor_weight(net, wm, v, a));
    for (NodeId v : slice.hidden) term = trop_mul(term, factor_weight(net, wm, v, a));
    return term;
}

// Under gradedness every hidden parent of a rank-r variable lives in
// slice r (observed child) or slice r-1 (hidden child); anything else
// would need values outside {x, y_r, y_prev}.
void check_slice_parent_ranks(const NetworkModel& net, const RankAssignment& ranks, int r) {
    auto check = [&](NodeId child, int required) {
        for (NodeId u : net.dag.parents(child)) {
            if (net.var(u).kind != VarKind::Hidden) continue;
            if (ranks.rho[u] != required)
                fail(ErrorKind::UngradedSlice,
                     "hidden parent " + net.var(u).name + " of " + net.var(child).name +
                         " has semi-rank " + std::to_string(ranks.rho[u]) + ", expected " +
                         std::to_string(required));
        }
    };
    for (NodeId v : ranks.slices[r].observed) check(v, r);
    for (NodeId v : ranks.slices[r].hidden) check(v, r - 1);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s < a ? ~std::uint64_t(0) : s;
}

// Marks the cells lying on at least one optimal chain: backward
// reachability from the final argmins along backpointer edges.
std::vector<std::vector<char>> live_cells(const Trellis& t) {
    const int columns = static_cast<int>(t.columns.size());
    std::vector<std::vector<char>> live(columns);
    for (int r = 0; r < columns; ++r) live[r].assign(t.columns[r].size(), 0);
    for (std::int64_t k : t.final_argmin) live[columns - 1][k] = 1;
    for (int r = columns - 1; r >= 1; --r)
        for (std::size_t k = 0; k < live[r].size(); ++k)
            if (live[r][k])
                for (std::int64_t kp : t.backpointers[r][k]) live[r - 1][kp] = 1;
    return live;
}

} // namespace

Weight slice_term_weight(const NetworkModel& net, const WeightModel& wm,
                         const RankAssignment& ranks, int r, const Assignment& x,
                         std::int64_t y_r, std::int64_t y_prev) {
    assert(r >= 0 && r <= ranks.rho_max);
    check_observed_assignment(net, x);
    check_slice_parent_ranks(net, ranks, r);
    if (r == 0 && y_prev != 0)
        fail(ErrorKind::DomainError, "y_prev must be 0 at rank 0");

    Assignment scratch = x;
    write_slice(scratch, ranks.slices[r],
                mixradix_decode(y_r, ranks.slices[r].hidden_cards));
    if (r >= 1)
        write_slice(scratch, ranks.slices[r - 1],
                    mixradix_decode(y_prev, ranks.slices[r - 1].hidden_cards));
    return rank_term(net, wm, ranks.slices[r], scratch);
}

Trellis forward_dp(const NetworkModel& net, const WeightModel& wm,
                   const RankAssignment& ranks, const Assignment& x,
                   const InferenceOptions& opts) {
    const GradednessResult graded = is_graded(net, ranks);
    if (!graded.graded)
        fail(ErrorKind::NotGraded,
             "network is not graded: " + net.var(graded.witness_child).name +
                 " (semi-rank " + std::to_string(ranks.rho[graded.witness_child]) +
                 ") has hidden parent " + net.var(graded.witness_parent).name +
                 " of semi-rank " + std::to_string(ranks.rho[graded.witness_parent]));
    check_observed_assignment(net, x);

    const int columns = ranks.rho_max + 1;
    std::vector<std::int64_t> sizes(columns);
    for (int r = 0; r < columns; ++r) {
        sizes[r] = mixradix_size_capped(ranks.slices[r].hidden_cards, opts.slice_cap);
        if (sizes[r] > opts.slice_cap)
            fail(ErrorKind::SliceTooLarge, "|D(" + std::to_string(r) + ")| exceeds cap " +
                                               std::to_string(opts.slice_cap));
    }

    Trellis t;
    t.columns.resize(columns);
    t.backpointers.resize(columns);
    Assignment scratch = x;

    t.columns[0].resize(sizes[0]);
    t.backpointers[0].resize(sizes[0]);
    {
        Odometer y(ranks.slices[0].hidden_cards);
        for (std::int64_t k = 0; k < sizes[0]; ++k) {
            write_slice(scratch, ranks.slices[0], y.digits());
            t.columns[0][k] = rank_term(net, wm, ranks.slices[0], scratch);
            ++t.cell_updates;
            y.next();
        }
    }

    std::vector<Weight> cands;
    for (int r = 1; r < columns; ++r) {
        t.columns[r].resize(sizes[r]);
        t.backpointers[r].resize(sizes[r]);
        cands.resize(sizes[r - 1]);
        const std::vector<Weight>& prev = t.columns[r - 1];
        Odometer y(ranks.slices[r].hidden_cards);
        for (std::int64_t k = 0; k < sizes[r]; ++k) {
            write_slice(scratch, ranks.slices[r], y.digits());
            Weight best = kInfWeight;
            Odometer yp(ranks.slices[r - 1].hidden_cards);
            for (std::int64_t kp = 0; kp < sizes[r - 1]; ++kp) {
                write_slice(scratch, ranks.slices[r - 1], yp.digits());
                const Weight cand =
                    trop_mul(prev[kp], rank_term(net, wm, ranks.slices[r], scratch));
                cands[kp] = cand;
                best = trop_add(best, cand);
                ++t.cell_updates;
                yp.next();
            }
            t.columns[r][k] = best;
            if (best < kInfWeight) {
                auto& bp = t.backpointers[r][k];
                for (std::int64_t kp = 0; kp < sizes[r - 1]; ++kp)
                    if (cands[kp] <= best + opts.tie_tolerance) bp.push_back(kp);
            }
            y.next();
        }
    }

    const std::vector<Weight>& last = t.columns[columns - 1];
    for (Weight w : last) t.weight = trop_add(t.weight, w);
    if (t.weight < kInfWeight)
        for (std::int64_t k = 0; k < (std::int64_t)last.size(); ++k)
            if (last[k] <= t.weight + opts.tie_tolerance) t.final_argmin.push_back(k);
    return t;
}

std::vector<Assignment> backtrace(const Trellis& t, const RankAssignment& ranks,
                                  TraceMode mode) {
    if (!(t.weight < kInfWeight))
        fail(ErrorKind::NoExplanation, "observed sequence has weight infinity");
    const int columns = static_cast<int>(t.columns.size());
    const std::vector<std::vector<char>> live = live_cells(t);

    auto to_assignment = [&](const std::vector<std::int64_t>& chain) {
        Assignment a(static_cast<int>(ranks.rho.size()));
        for (int r = 0; r < columns; ++r)
            write_slice(a, ranks.slices[r],
                        mixradix_decode(chain[r], ranks.slices[r].hidden_cards));
        return a;
    };

    std::vector<std::int64_t> chain(columns, -1);
    std::vector<Assignment> out;

    if (mode == TraceMode::One) {
        // Greedy forward selection yields the lexicographically
        // smallest chain: every live cell extends to a full chain.
        for (std::size_t k = 0; k < live[0].size(); ++k)
            if (live[0][k]) { chain[0] = static_cast<std::int64_t>(k); break; }
        assert(chain[0] >= 0);
        for (int r = 1; r < columns; ++r) {
            for (std::size_t k = 0; k < live[r].size(); ++k) {
                if (!live[r][k]) continue;
                const auto& bp = t.backpointers[r][k];
                if (std::binary_search(bp.begin(), bp.end(), chain[r - 1])) {
                    chain[r] = static_cast<std::int64_t>(k);
                    break;
                }
            }
            assert(chain[r] >= 0);
        }
        out.push_back(to_assignment(chain));
        return out;
    }

    auto dfs = [&](auto&& self, int r) -> void {
        if (r == columns) {
            out.push_back(to_assignment(chain));
            return;
        }
        for (std::size_t k = 0; k < live[r].size(); ++k) {
            if (!live[r][k]) continue;
            if (r > 0) {
                const auto& bp = t.backpointers[r][k];
                if (!std::binary_search(bp.begin(), bp.end(), chain[r - 1])) continue;
            }
            chain[r] = static_cast<std::int64_t>(k);
            self(self, r + 1);
        }
    };
    dfs(dfs, 0);
    return out;
}

std::uint64_t count_explanations(const Trellis& t) {
    if (!(t.weight < kInfWeight)) return 0;
    const int columns = static_cast<int>(t.columns.size());
    std::vector<std::uint64_t> prev(t.columns[0].size(), 1);
    for (int r = 1; r < columns; ++r) {
        std::vector<std::uint64_t> cur(t.columns[r].size(), 0);
        for (std::size_t k = 0; k < cur.size(); ++k)
            for (std::int64_t kp : t.backpointers[r][k])
                cur[k] = sat_add(cur[k], prev[kp]);
        prev = std::move(cur);
    }
    std::uint64_t total = 0;
    for (std::int64_t k : t.final_argmin) total = sat_add(total, prev[k]);
    return total;
}

TropBruteResult trop_brute_force(const NetworkModel& net, const WeightModel& wm,
                                 const Assignment& x, const InferenceOptions& opts) {
    check_observed_assignment(net, x);
    const std::vector<NodeId> hidden = net.hidden_vars();
    const std::vector<int> cards = net.cards_of(hidden);
    if (mixradix_size_capped(cards, opts.enum_cap) > opts.enum_cap)
        fail(ErrorKind::StateSpaceTooLarge,
             "hidden state space exceeds cap " + std::to_string(opts.enum_cap));

    Assignment a = x;
    auto total_weight = [&]() {
        Weight w = 0.0;
        for (NodeId v = 0; v < net.var_count(); ++v)
            w = trop_mul(w, factor_weight(net, wm, v, a));
        return w;
    };
    auto set_hidden = [&](const std::vector<int>& digits) {
        for (std::size_t i = 0; i < hidden.size(); ++i) a.set(hidden[i], digits[i]);
    };

    TropBruteResult result;
    {
        Odometer odo(cards);
        do {
            set_hidden(odo.digits());
            result.weight = trop_add(result.weight, total_weight());
        } while (odo.next());
    }
    if (result.weight < kInfWeight) {
        Odometer odo(cards);
        do {
            set_hidden(odo.digits());
            if (total_weight() <= result.weight + opts.tie_tolerance) {
                Assignment h(net.var_count());
                for (std::size_t i = 0; i < hidden.size(); ++i)
                    h.set(hidden[i], odo.digits()[i]);
                result.argmins.push_back(std::move(h));
            }
        } while (odo.next());
    }
    return result;
}

std::vector<std::int64_t> slice_key(const Assignment& y, const RankAssignment& ranks) {
    std::vector<std::int64_t> key(ranks.rho_max + 1);
    for (int r = 0; r <= ranks.rho_max; ++r) {
        const Slice& slice = ranks.slices[r];
        std::vector<int> digits(slice.hidden.size());
        for (std::size_t i = 0; i < slice.hidden.size(); ++i)
            digits[i] = y.value(slice.hidden[i]);
        key[r] = mixradix_encode(digits, slice.hidden_cards);
    }
    return key;
}

InferenceResult infer(const NetworkModel& net, const Assignment& x, TraceMode mode,
                      Engine engine, const InferenceOptions& opts) {
    const RankAssignment ranks = compute_semi_ranks(net);
    const WeightModel wm = tropicalize_model(net);

    bool use_dp = false;
    switch (engine) {
        case Engine::Auto: use_dp = ranks.graded; break;
        case Engine::Dp: use_dp = true; break; // forward_dp reports NotGraded itself
        case Engine::Oracle: use_dp = false; break;
    }

    InferenceResult res;
    if (use_dp) {
        const Trellis trellis = forward_dp(net, wm, ranks, x, opts);
        res.weight = trellis.weight;
        if (trellis.weight < kInfWeight) {
            res.explanations = backtrace(trellis, ranks, mode);
            res.explanation_count = count_explanations(trellis);
        }
    } else {
        TropBruteResult bf = trop_brute_force(net, wm, x, opts);
        res.weight = bf.weight;
        if (bf.weight < kInfWeight) {
            std::sort(bf.argmins.begin(), bf.argmins.end(),
                      [&](const Assignment& a, const Assignment& b) {
                          return slice_key(a, ranks) < slice_key(b, ranks);
                      });
            res.explanation_count = bf.argmins.size();
            if (mode == TraceMode::One)
                res.explanations.push_back(bf.argmins.front());
            else
                res.explanations = std::move(bf.argmins);
        }
    }

    const std::int64_t hidden_space =
        mixradix_size_capped(net.cards_of(net.hidden_vars()), opts.enum_cap);
    if (hidden_space <= opts.enum_cap)
        res.marginal = marginal_brute_force(net, x, opts.enum_cap);
    return res;
}

} // namespace bnet
