#include <doctest.h>

#include "bnet/error.hpp"
#include "bnet/io.hpp"
#include "bnet/netgen.hpp"
#include "bnet/ranking.hpp"
#include "helpers.hpp"

using namespace bnet;
using bnet_tests::expect_error;

namespace {

const char* kTinyNet = R"({
  "variables": [
    {"name": "X", "states": ["a", "b"], "observed": true},
    {"name": "Y", "states": ["a", "b"], "observed": false}
  ],
  "edges": [["X", "Y"]],
  "cpts": {
    "X": {"parents": [], "rows": [[0.25, 0.75]]},
    "Y": {"parents": ["X"], "rows": [[0.5, 0.5], [0.1, 0.9]]}
  }
})";

} // namespace

TEST_SUITE("io") {

TEST_CASE("parse a small network") {
    const NetworkModel net = parse_network(kTinyNet);
    CHECK(net.var_count() == 2);
    CHECK(net.var(0).kind == VarKind::Observed);
    CHECK(net.var(1).kind == VarKind::Hidden);
    CHECK(net.dag.parents(1) == std::vector<NodeId>{0});
    CHECK(net.cpts[1].rows[1][1] == 0.9);
}

TEST_CASE("fig3 fixture round-trips through the file format") {
    NetworkModel net = gen_fixture(FixtureKind::Fig3);
    seed_cpts(net, 404);
    const std::string bytes = serialize_network(net);
    const NetworkModel parsed = parse_network(bytes);
    CHECK(parsed.var_count() == 7);
    CHECK(compute_semi_ranks(parsed).graded);
    // parse . serialize . parse == parse, byte for byte
    CHECK(serialize_network(parsed) == bytes);
    CHECK(serialize_network(parse_network(serialize_network(parsed))) == bytes);
}

TEST_CASE("serialization is canonical with 17 significant digits") {
    NetworkModel net = gen_fixture(FixtureKind::Fig1);
    net.cpts[0].rows = {{1.0 / 3.0, 2.0 / 3.0}};
    const std::string bytes = serialize_network(net);
    CHECK(bytes == serialize_network(net));
    CHECK(bytes.find("0.33333333333333331") != std::string::npos);
    CHECK(bytes.find("0.66666666666666663") != std::string::npos);
}

TEST_CASE("row sums are checked with location info") {
    const std::string text = R"({
      "variables": [{"name": "X", "states": ["a", "b"], "observed": true}],
      "edges": [],
      "cpts": {"X": {"parents": [], "rows": [[0.49, 0.49]]}}
    })";
    try {
        parse_network(text);
        FAIL_CHECK("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ValidationError);
        CHECK(std::string(e.what()).find("cpts.X.rows[0]") != std::string::npos);
    }
}

TEST_CASE("structural errors") {
    expect_error(ErrorKind::ParseError, [] { parse_network("not json at all {"); });
    expect_error(ErrorKind::ValidationError,
                 [] { parse_network(R"({"variables": [], "edges": [], "cpts": {}})"); });
    expect_error(ErrorKind::UnknownName, [] {
        parse_network(R"({
          "variables": [{"name": "X", "states": ["a"], "observed": true}],
          "edges": [["X", "Z"]],
          "cpts": {"X": {"parents": [], "rows": [[1.0]]}}
        })");
    });
    expect_error(ErrorKind::CycleDetected, [] {
        parse_network(R"({
          "variables": [{"name": "A", "states": ["a"], "observed": true},
                        {"name": "B", "states": ["a"], "observed": true}],
          "edges": [["A", "B"], ["B", "A"]],
          "cpts": {"A": {"parents": ["B"], "rows": [[1.0]]},
                   "B": {"parents": ["A"], "rows": [[1.0]]}}
        })");
    });
    // cpt parents out of order with the edge list
    expect_error(ErrorKind::ValidationError, [] {
        parse_network(R"({
          "variables": [{"name": "A", "states": ["a", "b"], "observed": true},
                        {"name": "B", "states": ["a", "b"], "observed": true},
                        {"name": "C", "states": ["a", "b"], "observed": false}],
          "edges": [["A", "C"], ["B", "C"]],
          "cpts": {"A": {"parents": [], "rows": [[0.5, 0.5]]},
                   "B": {"parents": [], "rows": [[0.5, 0.5]]},
                   "C": {"parents": ["B", "A"],
                         "rows": [[0.5, 0.5], [0.5, 0.5], [0.5, 0.5], [0.5, 0.5]]}}
        })");
    });
    // missing cpt
    expect_error(ErrorKind::ValidationError, [] {
        parse_network(R"({
          "variables": [{"name": "X", "states": ["a"], "observed": true},
                        {"name": "Y", "states": ["a"], "observed": false}],
          "edges": [],
          "cpts": {"X": {"parents": [], "rows": [[1.0]]}}
        })");
    });
}

TEST_CASE("evidence parsing") {
    const NetworkModel net = parse_network(kTinyNet);
    const Assignment x = parse_evidence(R"({"X": "b"})", net);
    CHECK(x.get(0) == 1);
    CHECK_FALSE(x.has(1));
    CHECK(serialize_evidence(net, x) == "{\"X\": \"b\"}\n");

    expect_error(ErrorKind::UnknownName, [&] { parse_evidence(R"({"Q": "a"})", net); });
    expect_error(ErrorKind::UnknownName, [&] { parse_evidence(R"({"X": "zzz"})", net); });
    expect_error(ErrorKind::ValidationError, [&] { parse_evidence(R"({"X": "a", "Y": "a"})", net); });
    expect_error(ErrorKind::ValidationError, [&] { parse_evidence(R"({})", net); });
    expect_error(ErrorKind::ParseError, [&] { parse_evidence("[1,2]", net); });
}

TEST_CASE("generated networks round-trip") {
    GenConfig cfg;
    cfg.seed = 8080;
    cfg.hidden_per_rank = {2, 1};
    cfg.observed_per_rank = {1, 1};
    cfg.states_per_var = 3;
    const NetworkModel net = gen_graded(cfg);
    const std::string bytes = serialize_network(net);
    CHECK(serialize_network(parse_network(bytes)) == bytes);
}

} // TEST_SUITE
