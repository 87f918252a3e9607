#ifndef BNET_TESTS_HELPERS_HPP
#define BNET_TESTS_HELPERS_HPP

#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "bnet/error.hpp"
#include "bnet/model.hpp"

namespace bnet_tests {

template <class F>
void expect_error(bnet::ErrorKind kind, F&& f) {
    try {
        f();
        FAIL_CHECK("expected an error of kind " << bnet::error_kind_name(kind));
    } catch (const bnet::Error& e) {
        CHECK(e.kind() == kind);
    }
}

// Network with uniform CPTs from an explicit variable list; handy for
// hand-built topologies in tests.
inline bnet::NetworkModel make_uniform_net(
    const std::vector<std::pair<std::string, bnet::VarKind>>& vars,
    const std::vector<std::pair<bnet::NodeId, bnet::NodeId>>& edges, int states = 2) {
    std::vector<bnet::Variable> variables;
    const std::vector<std::string> labels = bnet::default_state_labels(states);
    for (std::size_t i = 0; i < vars.size(); ++i)
        variables.push_back(
            {static_cast<bnet::NodeId>(i), vars[i].first, labels, vars[i].second});
    bnet::NetworkModel net{bnet::build_dag((int)vars.size(), edges), std::move(variables), {}};
    net.cpts.resize(net.var_count());
    for (bnet::NodeId v = 0; v < net.var_count(); ++v) {
        std::int64_t rows = 1;
        for (bnet::NodeId u : net.dag.parents(v)) rows *= net.var(u).card();
        net.cpts[v] = {v, net.dag.parents(v),
                       std::vector<std::vector<double>>(
                           rows, std::vector<double>(states, 1.0 / states))};
    }
    return net;
}

// Canonical form of an explanation set for order-insensitive comparison.
inline std::vector<std::vector<int>> explanation_set(const std::vector<bnet::Assignment>& list) {
    std::vector<std::vector<int>> out;
    out.reserve(list.size());
    for (const bnet::Assignment& a : list) out.push_back(a.raw());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bnet_tests

#endif
