#include "bnet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "bnet/error.hpp"
#include "bnet/inference.hpp"
#include "bnet/io.hpp"
#include "bnet/netgen.hpp"
#include "bnet/ranking.hpp"

namespace bnet {

namespace {

std::string fmt_weight(Weight w) {
    if (!(w < kInfWeight)) return "inf";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", w);
    return buffer;
}

std::string fmt_prob(double p) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", p);
    return buffer;
}

InferenceOptions options_from_env() {
    InferenceOptions opts;
    if (const char* cap = std::getenv("BNET_SLICE_CAP")) {
        char* end = nullptr;
        const long long value = std::strtoll(cap, &end, 10);
        if (end && *end == '\0' && value > 0) opts.slice_cap = value;
    }
    return opts;
}

std::string explanation_line(const NetworkModel& net, const Assignment& y) {
    std::string line = "{";
    bool first = true;
    for (const Variable& v : net.variables) {
        if (!y.has(v.id)) continue;
        if (!first) line += ", ";
        first = false;
        line += "\"" + v.name + "\": \"" + v.states[y.get(v.id)] + "\"";
    }
    line += "}";
    return line;
}

void cmd_check(const std::string& net_path, std::ostream& out) {
    const NetworkModel net = load_network(net_path);
    const ValidationReport report = validate(net);
    for (const Violation& w : report.warnings)
        out << "warning: " << w.where << ": " << w.message << "\n";
    out << "valid: true\n";
    const RankAssignment ranks = compute_semi_ranks(net);
    const GradednessResult g = is_graded(net, ranks);
    out << "graded: " << (g.graded ? "true" : "false") << "\n";
    if (!g.graded)
        out << "witness: " << net.var(g.witness_child).name << " (hidden parent "
            << net.var(g.witness_parent).name << " has semi-rank "
            << ranks.rho[g.witness_parent] << ", expected "
            << (net.var(g.witness_child).kind == VarKind::Hidden
                    ? ranks.rho[g.witness_child] - 1
                    : ranks.rho[g.witness_child])
            << ")\n";
}

void cmd_rank(const std::string& net_path, std::ostream& out) {
    const NetworkModel net = load_network(net_path);
    const RankAssignment ranks = compute_semi_ranks(net);
    for (const Variable& v : net.variables)
        out << v.name << " " << (v.kind == VarKind::Observed ? "observed" : "hidden") << " "
            << ranks.rho[v.id] << "\n";
    out << "graded: " << (ranks.graded ? "true" : "false") << "\n";
}

void cmd_marginal(const std::string& net_path, const std::string& ev_path, std::ostream& out) {
    const NetworkModel net = load_network(net_path);
    const Assignment x = load_evidence(ev_path, net);
    const InferenceOptions opts = options_from_env();
    const RankAssignment ranks = compute_semi_ranks(net);
    const WeightModel wm = tropicalize_model(net);
    const Weight w = ranks.graded ? forward_dp(net, wm, ranks, x, opts).weight
                                  : trop_brute_force(net, wm, x, opts).weight;
    out << "p_X(x) = " << fmt_prob(marginal_brute_force(net, x, opts.enum_cap)) << "\n";
    out << "w_X(x) = " << fmt_weight(w) << "\n";
}

void cmd_infer(const std::string& net_path, const std::string& ev_path, bool all,
               const std::string& engine_name, std::ostream& out) {
    const NetworkModel net = load_network(net_path);
    const Assignment x = load_evidence(ev_path, net);
    Engine engine = Engine::Auto;
    if (engine_name == "dp") engine = Engine::Dp;
    else if (engine_name == "oracle") engine = Engine::Oracle;
    else if (engine_name != "auto")
        fail(ErrorKind::UsageError, "unknown engine '" + engine_name + "'");

    const InferenceResult res = infer(net, x, all ? TraceMode::All : TraceMode::One, engine,
                                      options_from_env());
    out << "weight: " << fmt_weight(res.weight) << "\n";
    if (res.marginal) out << "p(x): " << fmt_prob(*res.marginal) << "\n";
    if (res.explanations.empty()) {
        out << "no explanation\n";
        return;
    }
    out << "explanations: " << res.explanation_count << "\n";
    std::vector<std::string> lines;
    lines.reserve(res.explanations.size());
    for (const Assignment& y : res.explanations)
        lines.push_back(explanation_line(net, y));
    if (all) std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) out << line << "\n";
}

void cmd_gen(std::uint64_t seed, int rank_count, std::vector<int> hidden,
             std::vector<int> observed, int states, double density,
             const std::string& out_path, std::ostream& out) {
    if (hidden.empty()) hidden.assign(std::max(rank_count, 1), 1);
    if (observed.empty()) {
        observed.assign(hidden.size(), 0);
        observed[0] = 1;
    }
    if (rank_count > 0 && (hidden.size() != (std::size_t)rank_count ||
                           observed.size() != (std::size_t)rank_count))
        fail(ErrorKind::UsageError, "--ranks disagrees with --hidden/--observed lengths");
    GenConfig cfg;
    cfg.seed = seed;
    cfg.hidden_per_rank = std::move(hidden);
    cfg.observed_per_rank = std::move(observed);
    cfg.states_per_var = states;
    cfg.edge_density = density;
    const std::string text = serialize_network(gen_graded(cfg));
    if (out_path.empty()) {
        out << text;
    } else {
        std::FILE* f = std::fopen(out_path.c_str(), "wb");
        if (!f) fail(ErrorKind::UsageError, "cannot write " + out_path);
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
}

void cmd_bench(const std::string& family, const std::vector<int>& sizes, int states,
               std::uint64_t seed, std::ostream& out) {
    const FixtureKind kind = fixture_from_name(family);
    if (kind != FixtureKind::Hmm && kind != FixtureKind::Star && kind != FixtureKind::Fan)
        fail(ErrorKind::UsageError, "bench families are hmm, star and fan");
    const InferenceOptions opts = options_from_env();
    out << "family,size,states,cells,updates,ms\n";
    for (int n : sizes) {
        NetworkModel net = gen_fixture(kind, n, states);
        seed_cpts(net, seed);
        const Assignment x = seeded_evidence(net, seed);
        const RankAssignment ranks = compute_semi_ranks(net);
        const WeightModel wm = tropicalize_model(net);
        const auto start = std::chrono::steady_clock::now();
        const Trellis trellis = forward_dp(net, wm, ranks, x, opts);
        const auto stop = std::chrono::steady_clock::now();
        std::uint64_t cells = 0;
        for (const auto& column : trellis.columns) cells += column.size();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
        out << family << "," << n << "," << states << "," << cells << ","
            << trellis.cell_updates << "," << buffer << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact inference for discrete Bayesian networks via rank-by-rank "
                 "tropical dynamic programming"};
    app.require_subcommand(1);

    std::string net_path, ev_path, out_path;
    bool all = false;
    std::string engine = "auto";
    std::uint64_t seed = 1;
    int rank_count = 0, states = 2;
    double density = 0.5;
    std::vector<int> hidden, observed, sizes;
    std::string family;

    CLI::App* check = app.add_subcommand("check", "validate a network and report gradedness");
    check->add_option("net", net_path, "network file")->required();

    CLI::App* rank = app.add_subcommand("rank", "print the per-variable semi-rank table");
    rank->add_option("net", net_path, "network file")->required();

    CLI::App* marginal =
        app.add_subcommand("marginal", "print p_X(x) and w_X(x) for the evidence");
    marginal->add_option("net", net_path, "network file")->required();
    marginal->add_option("evidence", ev_path, "evidence file")->required();

    CLI::App* infer_cmd = app.add_subcommand("infer", "most probable hidden explanations");
    infer_cmd->add_option("net", net_path, "network file")->required();
    infer_cmd->add_option("evidence", ev_path, "evidence file")->required();
    infer_cmd->add_flag("--all", all, "emit every explanation, not just one");
    infer_cmd->add_option("--engine", engine, "auto|dp|oracle")->default_val("auto");

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random graded network");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--ranks", rank_count, "number of rank slices");
    gen->add_option("--hidden", hidden, "hidden variables per rank")->delimiter(',');
    gen->add_option("--observed", observed, "observed variables per rank")->delimiter(',');
    gen->add_option("--states", states, "common state-set size");
    gen->add_option("--density", density, "optional-edge density in (0,1]");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "forward-DP size/runtime table");
    bench->add_option("--family", family, "hmm|star|fan")->required();
    bench->add_option("--sizes", sizes, "family sizes n")->required()->delimiter(',');
    bench->add_option("--states", states, "common state-set size");
    bench->add_option("--seed", seed, "CPT seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) cmd_check(net_path, out);
        else if (rank->parsed()) cmd_rank(net_path, out);
        else if (marginal->parsed()) cmd_marginal(net_path, ev_path, out);
        else if (infer_cmd->parsed()) cmd_infer(net_path, ev_path, all, engine, out);
        else if (gen->parsed())
            cmd_gen(seed, rank_count, hidden, observed, states, density, out_path, out);
        else if (bench->parsed()) cmd_bench(family, sizes, states, seed, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::ParseError:
            case ErrorKind::UsageError: return 2;
            default: return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace bnet
