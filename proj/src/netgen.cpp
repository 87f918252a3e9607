#include "bnet/netgen.hpp"

#include <algorithm>
#include <cassert>

#include "bnet/error.hpp"
#include "bnet/ranking.hpp"

namespace bnet {

namespace {

// Counter-based draws: a splitmix64 finalizer over the key tuple.
// Purely functional, so adding nodes or rows never perturbs the
// draws of existing ones.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

enum Stream : std::uint64_t { kLayout = 1, kParent = 2, kEdge = 3, kCpt = 4, kEvidence = 5 };

std::uint64_t keyed(std::uint64_t seed, std::uint64_t stream, std::uint64_t a,
                    std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ stream);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return mix64(h ^ c);
}

// Uniform draw in (0, 1].
double unit_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                 std::uint64_t c) {
    return static_cast<double>((keyed(seed, stream, a, b, c) >> 11) + 1) * 0x1.0p-53;
}

// Uniform pick in [0, n).
int pick(std::uint64_t seed, std::uint64_t stream, std::uint64_t a, std::uint64_t b, int n) {
    return static_cast<int>(keyed(seed, stream, a, b, 0) % static_cast<std::uint64_t>(n));
}

constexpr int kMaxParents = 4;

} // namespace

NetworkModel gen_graded(const GenConfig& cfg) {
    const std::size_t rank_count = cfg.hidden_per_rank.size();
    if (rank_count == 0 || cfg.observed_per_rank.size() != rank_count)
        fail(ErrorKind::InfeasibleConfig, "hidden_per_rank and observed_per_rank must be "
                                          "non-empty and of equal length");
    if (cfg.states_per_var < 1)
        fail(ErrorKind::InfeasibleConfig, "states_per_var must be at least 1");
    if (!(cfg.edge_density > 0.0 && cfg.edge_density <= 1.0))
        fail(ErrorKind::InfeasibleConfig, "edge_density must lie in (0,1]");
    int total = 0;
    for (std::size_t r = 0; r < rank_count; ++r) {
        if (cfg.hidden_per_rank[r] < 0 || cfg.observed_per_rank[r] < 0)
            fail(ErrorKind::InfeasibleConfig, "negative slice count");
        if (r >= 1 && cfg.hidden_per_rank[r] < 1)
            fail(ErrorKind::InfeasibleConfig,
                 "rank " + std::to_string(r) + " needs at least one hidden variable");
        if (r >= 1 && cfg.hidden_per_rank[r - 1] < 1)
            fail(ErrorKind::InfeasibleConfig,
                 "rank " + std::to_string(r) + " hidden variables need rank " +
                     std::to_string(r - 1) + " hidden parents");
        total += cfg.hidden_per_rank[r] + cfg.observed_per_rank[r];
    }
    if (total == 0) fail(ErrorKind::InfeasibleConfig, "no variables requested");

    // Node layout.  At rank 0 a seeded coin decides whether the
    // observed block precedes the hidden one (star-like ancestors) or
    // follows it (fan-like descendants); later ranks always place the
    // hidden block first so observed variables can condition on it.
    const bool observed_first =
        unit_draw(cfg.seed, kLayout, 0, 0, 0) < 0.5 || cfg.hidden_per_rank[0] == 0;
    std::vector<std::vector<NodeId>> hidden_ids(rank_count), observed_ids(rank_count);
    std::vector<Variable> vars;
    const std::vector<std::string> labels = default_state_labels(cfg.states_per_var);
    int next_hidden_name = 1, next_observed_name = 1;
    auto add_var = [&](VarKind kind, int rank) {
        const NodeId id = static_cast<NodeId>(vars.size());
        if (kind == VarKind::Hidden) {
            vars.push_back({id, "Y" + std::to_string(next_hidden_name++), labels, kind});
            hidden_ids[rank].push_back(id);
        } else {
            vars.push_back({id, "X" + std::to_string(next_observed_name++), labels, kind});
            observed_ids[rank].push_back(id);
        }
    };
    for (std::size_t r = 0; r < rank_count; ++r) {
        const bool hidden_block_first = r >= 1 || !observed_first;
        for (int phase = 0; phase < 2; ++phase) {
            const bool hidden_phase = (phase == 0) == hidden_block_first;
            const int count = hidden_phase ? cfg.hidden_per_rank[r] : cfg.observed_per_rank[r];
            for (int i = 0; i < count; ++i)
                add_var(hidden_phase ? VarKind::Hidden : VarKind::Observed,
                        static_cast<int>(r));
        }
    }

    // Parents per child; converted to an edge list in child id order.
    std::vector<std::vector<NodeId>> parents(vars.size());
    auto want_edge = [&](NodeId u, NodeId v) {
        return unit_draw(cfg.seed, kEdge, u, v, 0) <= cfg.edge_density;
    };
    auto add_optional = [&](NodeId v, const std::vector<NodeId>& candidates) {
        for (NodeId u : candidates) {
            if ((int)parents[v].size() >= kMaxParents) break;
            if (std::find(parents[v].begin(), parents[v].end(), u) != parents[v].end())
                continue;
            if (want_edge(u, v)) parents[v].push_back(u);
        }
    };

    for (std::size_t r = 0; r < rank_count; ++r) {
        for (NodeId v : hidden_ids[r]) {
            if (r >= 1) {
                const auto& pool = hidden_ids[r - 1];
                parents[v].push_back(pool[pick(cfg.seed, kParent, v, 0, (int)pool.size())]);
                add_optional(v, pool);
            }
            // Observed ancestors of strictly lower rank, plus rank-0
            // observed parents when the layout puts them first.
            for (std::size_t rp = 0; rp < r; ++rp) add_optional(v, observed_ids[rp]);
            if (r == 0 && observed_first) add_optional(v, observed_ids[0]);
        }
        for (NodeId v : observed_ids[r]) {
            const auto& pool = hidden_ids[r];
            if (r >= 1) {
                parents[v].push_back(pool[pick(cfg.seed, kParent, v, 1, (int)pool.size())]);
                add_optional(v, pool);
            } else if (!observed_first && !pool.empty()) {
                add_optional(v, pool);
            }
            for (std::size_t rp = 0; rp < r; ++rp) add_optional(v, observed_ids[rp]);
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 0; v < (NodeId)vars.size(); ++v) {
        std::sort(parents[v].begin(), parents[v].end());
        for (NodeId u : parents[v]) edges.push_back({u, v});
    }

    NetworkModel net{build_dag((int)vars.size(), edges), std::move(vars), {}};
    net.cpts.resize(net.var_count());
    for (NodeId v = 0; v < net.var_count(); ++v)
        net.cpts[v] = {v, net.dag.parents(v), {}};
    seed_cpts(net, cfg.seed);
    return net;
}

FixtureKind fixture_from_name(const std::string& name) {
    if (name == "fig1") return FixtureKind::Fig1;
    if (name == "fig2") return FixtureKind::Fig2;
    if (name == "fig3") return FixtureKind::Fig3;
    if (name == "star") return FixtureKind::Star;
    if (name == "hmm") return FixtureKind::Hmm;
    if (name == "fan") return FixtureKind::Fan;
    fail(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

NetworkModel gen_fixture(FixtureKind kind, int n, int states) {
    if (states < 1) fail(ErrorKind::InfeasibleConfig, "states must be at least 1");
    const std::vector<std::string> labels = default_state_labels(states);
    std::vector<Variable> vars;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto var = [&](const std::string& name, VarKind kind_) {
        const NodeId id = static_cast<NodeId>(vars.size());
        vars.push_back({id, name, labels, kind_});
        return id;
    };

    switch (kind) {
        case FixtureKind::Fig1: {
            for (int i = 1; i <= 4; ++i) var("X" + std::to_string(i), VarKind::Observed);
            edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
            break;
        }
        case FixtureKind::Fig2: {
            var("X1", VarKind::Observed);
            for (int i = 1; i <= 5; ++i) var("Y" + std::to_string(i), VarKind::Hidden);
            edges = {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
            break;
        }
        case FixtureKind::Fig3: {
            var("X1", VarKind::Observed);
            var("X2", VarKind::Observed);
            var("X3", VarKind::Observed);
            for (int i = 1; i <= 4; ++i) var("Y" + std::to_string(i), VarKind::Hidden);
            // Edge order follows the joint factorization, so parent
            // orders match the paper's conditioning order.
            edges = {{0, 1}, {0, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 2}, {4, 6}, {5, 6}};
            break;
        }
        case FixtureKind::Star: {
            if (n < 1) fail(ErrorKind::InfeasibleConfig, "star needs n >= 1");
            var("X1", VarKind::Observed);
            for (int i = 1; i <= n; ++i) {
                const NodeId y = var("Y" + std::to_string(i), VarKind::Hidden);
                edges.push_back({0, y});
            }
            break;
        }
        case FixtureKind::Hmm: {
            if (n < 1) fail(ErrorKind::InfeasibleConfig, "hmm needs n >= 1");
            for (int i = 1; i <= n; ++i) var("Y" + std::to_string(i), VarKind::Hidden);
            for (int i = 1; i <= n; ++i) var("X" + std::to_string(i), VarKind::Observed);
            for (int t = 0; t < n; ++t) {
                edges.push_back({t, n + t});
                if (t + 1 < n) edges.push_back({t, t + 1});
            }
            break;
        }
        case FixtureKind::Fan: {
            if (n < 1) fail(ErrorKind::InfeasibleConfig, "fan needs n >= 1");
            for (int i = 1; i <= n; ++i) var("Y" + std::to_string(i), VarKind::Hidden);
            const NodeId x = var("X1", VarKind::Observed);
            for (int t = 0; t < n; ++t) edges.push_back({t, x});
            break;
        }
    }

    NetworkModel net{build_dag((int)vars.size(), edges), std::move(vars), {}};
    net.cpts.resize(net.var_count());
    for (NodeId v = 0; v < net.var_count(); ++v) {
        std::int64_t rows = 1;
        for (NodeId u : net.dag.parents(v)) rows *= net.var(u).card();
        const double uniform = 1.0 / net.var(v).card();
        net.cpts[v] = {v, net.dag.parents(v),
                       std::vector<std::vector<double>>(
                           rows, std::vector<double>(net.var(v).card(), uniform))};
    }
    return net;
}

void seed_cpts(NetworkModel& net, std::uint64_t seed) {
    for (NodeId v = 0; v < net.var_count(); ++v) {
        Cpt& cpt = net.cpts[v];
        std::int64_t rows = 1;
        for (NodeId u : cpt.parent_order) rows *= net.var(u).card();
        const int card = net.var(v).card();
        cpt.rows.assign(rows, std::vector<double>(card, 0.0));
        for (std::int64_t row = 0; row < rows; ++row) {
            double sum = 0.0;
            for (int s = 0; s < card; ++s) {
                cpt.rows[row][s] = unit_draw(seed, kCpt, v, row, s);
                sum += cpt.rows[row][s];
            }
            for (int s = 0; s < card; ++s) cpt.rows[row][s] /= sum;
        }
    }
}

Assignment seeded_evidence(const NetworkModel& net, std::uint64_t seed) {
    Assignment x(net.var_count());
    for (const Variable& v : net.variables)
        if (v.kind == VarKind::Observed)
            x.set(v.id, pick(seed, kEvidence, v.id, 0, v.card()));
    return x;
}

} // namespace bnet
