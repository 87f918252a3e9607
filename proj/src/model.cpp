#include "bnet/model.hpp"

#include <cmath>
#include <cstdio>

#include "bnet/error.hpp"
#include "bnet/mixradix.hpp"

namespace bnet {

int Assignment::value(NodeId v) const {
    if (values_[v] < 0)
        fail(ErrorKind::UnassignedVariable, "variable " + std::to_string(v) + " unassigned");
    return values_[v];
}

NodeId NetworkModel::node_by_name(const std::string& name) const {
    for (const Variable& v : variables)
        if (v.name == name) return v.id;
    return -1;
}

std::vector<NodeId> NetworkModel::observed_vars() const {
    std::vector<NodeId> out;
    for (const Variable& v : variables)
        if (v.kind == VarKind::Observed) out.push_back(v.id);
    return out;
}

std::vector<NodeId> NetworkModel::hidden_vars() const {
    std::vector<NodeId> out;
    for (const Variable& v : variables)
        if (v.kind == VarKind::Hidden) out.push_back(v.id);
    return out;
}

std::vector<int> NetworkModel::cards_of(const std::vector<NodeId>& vars) const {
    std::vector<int> cards;
    cards.reserve(vars.size());
    for (NodeId v : vars) cards.push_back(variables[v].card());
    return cards;
}

std::int64_t NetworkModel::row_index(NodeId v, const Assignment& a) const {
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (NodeId u : cpts[v].parent_order) {
        index += stride * a.value(u);
        stride *= variables[u].card();
    }
    return index;
}

double NetworkModel::prob(NodeId v, const Assignment& a) const {
    return cpts[v].rows[row_index(v, a)][a.value(v)];
}

namespace {

std::string row_location(const NetworkModel& net, NodeId v, std::size_t row) {
    return "cpts." + net.variables[v].name + ".rows[" + std::to_string(row) + "]";
}

} // namespace

ValidationReport validate(const NetworkModel& net) {
    ValidationReport report;
    auto err = [&](std::string where, std::string message) {
        report.errors.push_back({std::move(where), std::move(message)});
    };

    const int n = net.var_count();
    if ((int)net.variables.size() != n) {
        err("variables", "expected " + std::to_string(n) + " variables, got " +
                             std::to_string(net.variables.size()));
        return report;
    }
    if ((int)net.cpts.size() != n) {
        err("cpts", "expected one CPT per node");
        return report;
    }

    for (NodeId v = 0; v < n; ++v) {
        const Variable& var = net.variables[v];
        const std::string& where = var.name;
        if (var.id != v) err(where, "variable id mismatch");
        if (var.states.empty()) err(where, "empty state set");
        for (std::size_t i = 0; i < var.states.size(); ++i)
            for (std::size_t j = i + 1; j < var.states.size(); ++j)
                if (var.states[i] == var.states[j])
                    err(where, "duplicate state label '" + var.states[i] + "'");
        for (NodeId u = v + 1; u < n; ++u)
            if (net.variables[u].name == var.name)
                err(where, "duplicate variable name");
    }
    if (!report.errors.empty()) return report;

    for (NodeId v = 0; v < n; ++v) {
        const Cpt& cpt = net.cpts[v];
        const std::string name = net.variables[v].name;
        if (cpt.owner != v) err("cpts." + name, "owner mismatch");
        if (cpt.parent_order != net.dag.parents(v)) {
            err("cpts." + name + ".parents", "parent order differs from edge-derived parents");
            continue;
        }
        std::int64_t expected_rows = 1;
        for (NodeId u : cpt.parent_order) expected_rows *= net.variables[u].card();
        if ((std::int64_t)cpt.rows.size() != expected_rows) {
            err("cpts." + name + ".rows", "expected " + std::to_string(expected_rows) +
                                              " rows, got " + std::to_string(cpt.rows.size()));
            continue;
        }
        const int card = net.variables[v].card();
        std::vector<bool> reachable(card, false);
        for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
            const auto& row = cpt.rows[r];
            if ((int)row.size() != card) {
                err(row_location(net, v, r), "expected " + std::to_string(card) + " entries");
                continue;
            }
            double sum = 0.0;
            bool in_range = true;
            for (double p : row) {
                if (!(p >= 0.0 && p <= 1.0)) in_range = false;
                sum += p;
            }
            if (!in_range)
                err(row_location(net, v, r), "entry outside [0,1]");
            else if (std::abs(sum - 1.0) > kRowSumTolerance) {
                char buffer[64];
                std::snprintf(buffer, sizeof(buffer), "row sums to %.12g", sum);
                err(row_location(net, v, r), buffer);
            }
            for (int s = 0; s < card && s < (int)row.size(); ++s)
                if (row[s] > 0.0) reachable[s] = true;
        }
        for (int s = 0; s < card; ++s)
            if (!reachable[s])
                report.warnings.push_back(
                    {name, "state '" + net.variables[v].states[s] + "' has probability 0 in every row"});
    }
    return report;
}

void check_observed_assignment(const NetworkModel& net, const Assignment& x) {
    if (x.var_count() != net.var_count())
        fail(ErrorKind::ValidationError, "evidence sized for a different network");
    for (const Variable& v : net.variables) {
        if (v.kind == VarKind::Observed) {
            if (!x.has(v.id))
                fail(ErrorKind::UnassignedVariable, "observed variable " + v.name + " unassigned");
            if (x.get(v.id) >= v.card())
                fail(ErrorKind::ValidationError, "state index out of range for " + v.name);
        } else if (x.has(v.id)) {
            fail(ErrorKind::ValidationError, "evidence assigns hidden variable " + v.name);
        }
    }
}

std::vector<std::string> default_state_labels(int card) {
    std::vector<std::string> labels;
    labels.reserve(card);
    for (int i = 0; i < card; ++i) {
        if (card <= 26)
            labels.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            labels.push_back("s" + std::to_string(i));
    }
    return labels;
}

double joint_probability(const NetworkModel& net, const Assignment& full) {
    double p = 1.0;
    for (NodeId v = 0; v < net.var_count(); ++v)
        p *= net.prob(v, full);
    return p;
}

double marginal_brute_force(const NetworkModel& net, const Assignment& x,
                            std::int64_t max_hidden_states) {
    check_observed_assignment(net, x);
    const std::vector<NodeId> hidden = net.hidden_vars();
    const std::vector<int> cards = net.cards_of(hidden);
    const std::int64_t space = mixradix_size_capped(cards, max_hidden_states);
    if (space > max_hidden_states)
        fail(ErrorKind::StateSpaceTooLarge,
             "hidden state space exceeds cap " + std::to_string(max_hidden_states));

    Assignment a = x;
    Odometer odo(cards);
    double total = 0.0;
    do {
        for (std::size_t i = 0; i < hidden.size(); ++i)
            a.set(hidden[i], odo.digits()[i]);
        total += joint_probability(net, a);
    } while (odo.next());
    return total;
}

std::int64_t parameter_count(const std::map<int, int>& indegree_profile) {
    std::int64_t total = 0;
    for (const auto& [parents, nodes] : indegree_profile)
        total += static_cast<std::int64_t>(nodes) * (std::int64_t(1) << parents);
    return total;
}

std::int64_t full_joint_size(int var_count) {
    return std::int64_t(1) << var_count;
}

} // namespace bnet
