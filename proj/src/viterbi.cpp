#include <cmath>
#include <string>

#include "bnet/error.hpp"
#include "bnet/inference.hpp"

namespace bnet {

namespace {

void check_stochastic(const std::vector<std::vector<double>>& rows, std::size_t row_count,
                      std::size_t cols, const char* what) {
    if (rows.size() != row_count)
        fail(ErrorKind::ValidationError, std::string(what) + ": wrong row count");
    for (const auto& row : rows) {
        if (row.size() != cols)
            fail(ErrorKind::ValidationError, std::string(what) + ": wrong row length");
        double sum = 0.0;
        for (double p : row) {
            if (!(p >= 0.0 && p <= 1.0))
                fail(ErrorKind::ValidationError, std::string(what) + ": entry outside [0,1]");
            sum += p;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance)
            fail(ErrorKind::ValidationError, std::string(what) + ": row does not sum to 1");
    }
}

// Returns (l, m) after shape and normalization checks.
std::pair<int, int> check_hmm(const HmmParams& hmm) {
    const std::size_t l = hmm.initial.size();
    if (l == 0) fail(ErrorKind::ValidationError, "initial: empty distribution");
    if (hmm.emission.empty() || hmm.emission[0].empty())
        fail(ErrorKind::ValidationError, "emission: empty table");
    const std::size_t m = hmm.emission[0].size();
    check_stochastic({hmm.initial}, 1, l, "initial");
    check_stochastic(hmm.transition, l, l, "transition");
    check_stochastic(hmm.emission, l, m, "emission");
    return {static_cast<int>(l), static_cast<int>(m)};
}

} // namespace

ViterbiResult viterbi_hmm(const HmmParams& hmm, const std::vector<int>& obs) {
    const auto [l, m] = check_hmm(hmm);
    if (obs.empty()) fail(ErrorKind::ValidationError, "empty observation sequence");
    for (int o : obs)
        if (o < 0 || o >= m) fail(ErrorKind::ValidationError, "observation symbol out of range");
    const int n = static_cast<int>(obs.size());

    std::vector<Weight> w_init(l);
    std::vector<std::vector<Weight>> w_trans(l, std::vector<Weight>(l));
    std::vector<std::vector<Weight>> w_emit(l, std::vector<Weight>(m));
    for (int y = 0; y < l; ++y) {
        w_init[y] = tropicalize(hmm.initial[y]);
        for (int z = 0; z < l; ++z) w_trans[y][z] = tropicalize(hmm.transition[y][z]);
        for (int o = 0; o < m; ++o) w_emit[y][o] = tropicalize(hmm.emission[y][o]);
    }

    // Accumulation order mirrors the forward DP on the equivalent
    // chain network (emission first, then initial/transition), so the
    // two weights agree exactly.
    std::vector<Weight> prev(l), cur(l);
    std::vector<std::vector<int>> bp(n, std::vector<int>(l, -1));
    for (int y = 0; y < l; ++y)
        prev[y] = trop_mul(trop_mul(Weight(0.0), w_emit[y][obs[0]]), w_init[y]);

    for (int t = 1; t < n; ++t) {
        for (int y = 0; y < l; ++y) {
            Weight best = kInfWeight;
            int arg = -1;
            for (int yp = 0; yp < l; ++yp) {
                const Weight term =
                    trop_mul(trop_mul(Weight(0.0), w_emit[y][obs[t]]), w_trans[yp][y]);
                const Weight cand = trop_mul(prev[yp], term);
                if (cand < best) {
                    best = cand;
                    arg = yp;
                }
            }
            cur[y] = best;
            bp[t][y] = arg;
        }
        std::swap(prev, cur);
    }

    ViterbiResult res;
    int last = -1;
    for (int y = 0; y < l; ++y)
        if (prev[y] < res.weight) {
            res.weight = prev[y];
            last = y;
        }
    if (!(res.weight < kInfWeight)) return res; // zero-probability sequence, no path

    res.path.assign(n, -1);
    res.path[n - 1] = last;
    for (int t = n - 1; t >= 1; --t) {
        last = bp[t][last];
        res.path[t - 1] = last;
    }
    return res;
}

NetworkModel hmm_to_network(const HmmParams& hmm, int n) {
    const auto [l, m] = check_hmm(hmm);
    if (n < 1) fail(ErrorKind::ValidationError, "need at least one time step");

    // Ids 0..n-1 are Y_1..Y_n, ids n..2n-1 are X_1..X_n.
    std::vector<Variable> vars;
    vars.reserve(2 * n);
    const std::vector<std::string> hidden_labels = default_state_labels(l);
    const std::vector<std::string> observed_labels = default_state_labels(m);
    for (int t = 0; t < n; ++t)
        vars.push_back({t, "Y" + std::to_string(t + 1), hidden_labels, VarKind::Hidden});
    for (int t = 0; t < n; ++t)
        vars.push_back({n + t, "X" + std::to_string(t + 1), observed_labels, VarKind::Observed});

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int t = 0; t < n; ++t) {
        edges.push_back({t, n + t});
        if (t + 1 < n) edges.push_back({t, t + 1});
    }

    std::vector<Cpt> cpts(2 * n);
    cpts[0] = {0, {}, {hmm.initial}};
    for (int t = 1; t < n; ++t) cpts[t] = {t, {t - 1}, hmm.transition};
    for (int t = 0; t < n; ++t) cpts[n + t] = {n + t, {t}, hmm.emission};

    return NetworkModel{build_dag(2 * n, edges), std::move(vars), std::move(cpts)};
}

Assignment hmm_evidence(const NetworkModel& net, const std::vector<int>& obs) {
    const int n = net.var_count() / 2;
    if ((int)obs.size() != n)
        fail(ErrorKind::ValidationError, "observation length does not match network");
    Assignment x(net.var_count());
    for (int t = 0; t < n; ++t) x.set(n + t, obs[t]);
    return x;
}

} // namespace bnet
