#include <doctest.h>

#include <cmath>
#include <map>

#include "bnet/error.hpp"
#include "bnet/mixradix.hpp"
#include "bnet/model.hpp"
#include "bnet/netgen.hpp"
#include "helpers.hpp"

using namespace bnet;
using bnet_tests::expect_error;
using bnet_tests::make_uniform_net;

namespace {

// Independent factor lookup: recomputes the row index with its own
// stride loop instead of NetworkModel::row_index.
double oracle_factor(const NetworkModel& net, NodeId v, const std::vector<int>& full) {
    long long row = 0, stride = 1;
    for (NodeId u : net.dag.parents(v)) {
        row += stride * full[u];
        stride *= net.var(u).card();
    }
    return net.cpts[v].rows[row][full[v]];
}

Assignment to_assignment(const std::vector<int>& values) {
    Assignment a((int)values.size());
    for (std::size_t i = 0; i < values.size(); ++i) a.set((int)i, values[i]);
    return a;
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("validate accepts generated networks") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.hidden_per_rank = {2, 1};
        cfg.observed_per_rank = {1, 1};
        cfg.states_per_var = 3;
        const NetworkModel net = gen_graded(cfg);
        const ValidationReport report = validate(net);
        CHECK(report.ok());
        CHECK(report.warnings.empty());
    }
}

TEST_CASE("validate flags a bad row sum") {
    NetworkModel net = gen_fixture(FixtureKind::Fig1);
    net.cpts[1].rows[0] = {0.45, 0.45};
    const ValidationReport report = validate(net);
    REQUIRE_FALSE(report.ok());
    CHECK(report.errors[0].where == "cpts.X2.rows[0]");
    CHECK(report.errors[0].message.find("0.9") != std::string::npos);
}

TEST_CASE("validate flags a missing parent row") {
    NetworkModel net = gen_fixture(FixtureKind::Fig1);
    net.cpts[3].rows.pop_back(); // X4 has two binary parents: 4 rows expected
    const ValidationReport report = validate(net);
    REQUIRE_FALSE(report.ok());
    CHECK(report.errors[0].where == "cpts.X4.rows");
}

TEST_CASE("validate warns about unreachable states") {
    NetworkModel net = make_uniform_net({{"Y", VarKind::Hidden}}, {});
    net.cpts[0].rows[0] = {1.0, 0.0};
    const ValidationReport report = validate(net);
    CHECK(report.ok());
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].message.find("'b'") != std::string::npos);
}

TEST_CASE("uniform diamond joint is 1/16 everywhere") {
    const NetworkModel net = gen_fixture(FixtureKind::Fig1);
    Odometer odo({2, 2, 2, 2});
    do {
        CHECK(joint_probability(net, to_assignment(odo.digits())) == doctest::Approx(1.0 / 16));
    } while (odo.next());
}

TEST_CASE("deterministic tables give a point mass") {
    NetworkModel net = make_uniform_net(
        {{"A", VarKind::Observed}, {"B", VarKind::Hidden}, {"C", VarKind::Hidden}},
        {{0, 1}, {1, 2}});
    net.cpts[0].rows = {{1.0, 0.0}};
    net.cpts[1].rows = {{0.0, 1.0}, {1.0, 0.0}}; // B = not A
    net.cpts[2].rows = {{1.0, 0.0}, {0.0, 1.0}}; // C = B
    CHECK(joint_probability(net, to_assignment({0, 1, 1})) == 1.0);
    CHECK(joint_probability(net, to_assignment({0, 0, 0})) == 0.0);
    CHECK(joint_probability(net, to_assignment({1, 0, 0})) == 0.0);
}

TEST_CASE("seeded joint matches per-factor oracle") {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.hidden_per_rank = {1, 2};
    cfg.observed_per_rank = {1, 1};
    const NetworkModel net = gen_graded(cfg);
    REQUIRE(net.var_count() == 5);
    Odometer odo(net.cards_of({0, 1, 2, 3, 4}));
    do {
        double expected = 1.0;
        for (NodeId v = 0; v < net.var_count(); ++v)
            expected *= oracle_factor(net, v, odo.digits());
        CHECK(joint_probability(net, to_assignment(odo.digits())) ==
              doctest::Approx(expected).epsilon(1e-12));
    } while (odo.next());
}

TEST_CASE("joint throws on a partial assignment") {
    const NetworkModel net = gen_fixture(FixtureKind::Fig1);
    Assignment partial(4);
    partial.set(0, 0);
    expect_error(ErrorKind::UnassignedVariable, [&] { joint_probability(net, partial); });
}

TEST_CASE("uniform marginal over three observed binaries is 1/8") {
    const NetworkModel net = gen_fixture(FixtureKind::Fig3);
    Odometer x({2, 2, 2});
    do {
        Assignment obs(7);
        for (int i = 0; i < 3; ++i) obs.set(i, x.digits()[i]);
        CHECK(marginal_brute_force(net, obs) == doctest::Approx(1.0 / 8).epsilon(1e-12));
    } while (x.next());
}

TEST_CASE("empty observation marginalizes to one") {
    const NetworkModel net = make_uniform_net({{"Y", VarKind::Hidden}}, {}, 3);
    CHECK(marginal_brute_force(net, Assignment(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("marginal equals an independently coded nested sum") {
    GenConfig cfg;
    cfg.seed = 7;
    cfg.hidden_per_rank = {2, 2, 1};
    cfg.observed_per_rank = {1, 1, 0};
    const NetworkModel net = gen_graded(cfg);
    const Assignment x = seeded_evidence(net, 99);

    const std::vector<NodeId> hidden = net.hidden_vars();
    std::vector<int> full(net.var_count(), 0);
    for (NodeId v : net.observed_vars()) full[v] = x.get(v);
    double expected = 0.0;
    Odometer odo(net.cards_of(hidden));
    do {
        for (std::size_t i = 0; i < hidden.size(); ++i) full[hidden[i]] = odo.digits()[i];
        double term = 1.0;
        for (NodeId v = 0; v < net.var_count(); ++v) term *= oracle_factor(net, v, full);
        expected += term;
    } while (odo.next());

    CHECK(marginal_brute_force(net, x) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("marginal cap") {
    GenConfig cfg;
    cfg.seed = 11;
    cfg.hidden_per_rank = {4};
    cfg.observed_per_rank = {1};
    const NetworkModel net = gen_graded(cfg);
    const Assignment x = seeded_evidence(net, 1);
    expect_error(ErrorKind::StateSpaceTooLarge, [&] { marginal_brute_force(net, x, 8); });
}

TEST_CASE("evidence preconditions") {
    const NetworkModel net = gen_fixture(FixtureKind::Fig3);
    Assignment missing(7);
    missing.set(0, 0);
    expect_error(ErrorKind::UnassignedVariable, [&] { marginal_brute_force(net, missing); });
    Assignment extra(7);
    for (int i = 0; i < 3; ++i) extra.set(i, 0);
    extra.set(3, 0); // Y1 is hidden
    expect_error(ErrorKind::ValidationError, [&] { marginal_brute_force(net, extra); });
}

TEST_CASE("parameter count") {
    CHECK(parameter_count({{0, 15}, {1, 0}, {2, 4}, {3, 2}, {4, 3}}) == 95);
    CHECK(full_joint_size(24) == 16777216);
    CHECK(parameter_count({{0, 1}}) == 1);
}

TEST_CASE("joint sums to one and marginals sum to one") {
    for (std::uint64_t seed : {3u, 5u, 8u}) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.hidden_per_rank = {2, 1};
        cfg.observed_per_rank = {2, 1};
        const NetworkModel net = gen_graded(cfg);

        double total = 0.0;
        std::vector<NodeId> ids(net.var_count());
        for (NodeId v = 0; v < net.var_count(); ++v) ids[v] = v;
        Odometer odo(net.cards_of(ids));
        do {
            total += joint_probability(net, to_assignment(odo.digits()));
        } while (odo.next());
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

        const std::vector<NodeId> observed = net.observed_vars();
        double marginal_total = 0.0;
        Odometer obs(net.cards_of(observed));
        do {
            Assignment x(net.var_count());
            for (std::size_t i = 0; i < observed.size(); ++i)
                x.set(observed[i], obs.digits()[i]);
            marginal_total += marginal_brute_force(net, x);
        } while (obs.next());
        CHECK(marginal_total == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("joint is invariant under factor evaluation order") {
    GenConfig cfg;
    cfg.seed = 13;
    cfg.hidden_per_rank = {2, 1};
    cfg.observed_per_rank = {1, 0};
    const NetworkModel net = gen_graded(cfg);
    std::vector<NodeId> ids(net.var_count());
    for (NodeId v = 0; v < net.var_count(); ++v) ids[v] = v;
    Odometer odo(net.cards_of(ids));
    do {
        const Assignment a = to_assignment(odo.digits());
        double reversed = 1.0;
        for (NodeId v = net.var_count() - 1; v >= 0; --v) reversed *= net.prob(v, a);
        CHECK(joint_probability(net, a) == doctest::Approx(reversed).epsilon(1e-12));
    } while (odo.next());
}

} // TEST_SUITE
