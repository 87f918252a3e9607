#ifndef BNET_NETGEN_HPP
#define BNET_NETGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bnet/model.hpp"

namespace bnet {

// Shape of a random graded network: one slice per rank, a common
// state-set size, and an edge density steering the optional edges.
struct GenConfig {
    std::uint64_t seed = 1;
    std::vector<int> hidden_per_rank;   // t_r, one entry per rank
    std::vector<int> observed_per_rank; // s_r, same length
    int states_per_var = 2;
    double edge_density = 0.5;
};

// Deterministic in cfg: the same config always yields byte-identical
// networks.  Every output passes validate() and is graded by
// construction; hidden rank-r variables draw their hidden parents
// from slice r-1 only, observed rank-r variables from slice r only.
// Throws InfeasibleConfig when the slice counts cannot be realized.
NetworkModel gen_graded(const GenConfig& cfg);

enum class FixtureKind { Fig1, Fig2, Fig3, Star, Hmm, Fan };

// Throws UnknownFixture.
FixtureKind fixture_from_name(const std::string& name);

// Canonical test topologies with uniform CPT placeholders; reseed the
// tables with seed_cpts.  `n` is the family size for Star/Hmm/Fan and
// ignored for the fixed figures.
NetworkModel gen_fixture(FixtureKind kind, int n = 0, int states = 2);

// Overwrites every CPT row with a seeded draw from the simplex.  Rows
// are keyed by (seed, node, row), so unrelated rows never shift.
void seed_cpts(NetworkModel& net, std::uint64_t seed);

// Seeded total assignment of the observed variables.
Assignment seeded_evidence(const NetworkModel& net, std::uint64_t seed);

} // namespace bnet

#endif
