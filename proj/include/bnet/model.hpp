#ifndef BNET_MODEL_HPP
#define BNET_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bnet/graph.hpp"

namespace bnet {

enum class VarKind { Observed, Hidden };

struct Variable {
    NodeId id = -1;
    std::string name;
    std::vector<std::string> states; // unique labels, size >= 1
    VarKind kind = VarKind::Hidden;

    int card() const { return static_cast<int>(states.size()); }
};

// Conditional probability table of one node.  Rows are keyed by the
// mixed-radix index of the parent-state tuple in parent_order, first
// parent least significant; a node without parents has a single row.
struct Cpt {
    NodeId owner = -1;
    std::vector<NodeId> parent_order; // equals Dag::parents(owner)
    std::vector<std::vector<double>> rows;
};

// Partial or total assignment of state indices to variables.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(int var_count) : values_(var_count, -1) {}

    int var_count() const { return static_cast<int>(values_.size()); }
    bool has(NodeId v) const { return values_[v] >= 0; }
    int get(NodeId v) const { return values_[v]; }
    void set(NodeId v, int state) { values_[v] = state; }
    void clear(NodeId v) { values_[v] = -1; }

    // State index of v; throws UnassignedVariable if absent.
    int value(NodeId v) const;

    const std::vector<int>& raw() const { return values_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend bool operator<(const Assignment& a, const Assignment& b) {
        return a.values_ < b.values_;
    }

  private:
    std::vector<int> values_; // -1 = unassigned
};

// The Bayesian network (G, p).
struct NetworkModel {
    Dag dag;
    std::vector<Variable> variables;
    std::vector<Cpt> cpts; // one per node, cpts[v].owner == v

    int var_count() const { return dag.node_count(); }
    const Variable& var(NodeId v) const { return variables[v]; }

    NodeId node_by_name(const std::string& name) const; // -1 if absent

    std::vector<NodeId> observed_vars() const;
    std::vector<NodeId> hidden_vars() const;
    std::vector<int> cards_of(const std::vector<NodeId>& vars) const;

    // Row index of v's CPT under `a` (mixed-radix over parent_order).
    std::int64_t row_index(NodeId v, const Assignment& a) const;

    // The factor p(v = a[v] | parents from a).
    double prob(NodeId v, const Assignment& a) const;
};

struct Violation {
    std::string where;   // e.g. "cpts.Y2.rows[3]"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> errors;   // structural defects: shapes, sums, names
    std::vector<Violation> warnings; // e.g. states unreachable from every row
    bool ok() const { return errors.empty(); }
};

inline constexpr double kRowSumTolerance = 1e-9;
inline constexpr std::int64_t kDefaultEnumCap = std::int64_t(1) << 24;

ValidationReport validate(const NetworkModel& net);

// Requires that `x` assigns every observed variable and no hidden one.
void check_observed_assignment(const NetworkModel& net, const Assignment& x);

// State labels a, b, c, ... (s17, s18, ... past the alphabet).
std::vector<std::string> default_state_labels(int card);

// Product of the per-node conditional factors; `full` must assign
// every variable.
double joint_probability(const NetworkModel& net, const Assignment& full);

// Marginal probability of the observed assignment x by exhaustive
// enumeration of the hidden state space.  Throws StateSpaceTooLarge
// when the hidden space exceeds max_hidden_states.
double marginal_brute_force(const NetworkModel& net, const Assignment& x,
                            std::int64_t max_hidden_states = kDefaultEnumCap);

// Number of conditional distributions needed for an all-binary
// network with the given in-degree profile (parent count -> node count).
std::int64_t parameter_count(const std::map<int, int>& indegree_profile);

// Size of the full joint table over `var_count` binary variables.
std::int64_t full_joint_size(int var_count);

} // namespace bnet

#endif
