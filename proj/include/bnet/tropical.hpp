#ifndef BNET_TROPICAL_HPP
#define BNET_TROPICAL_HPP

#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

#include "bnet/error.hpp"
#include "bnet/model.hpp"

namespace bnet {

// Element of the tropical semiring (R u {inf}, min, +) with additive
// identity inf and multiplicative identity 0.  NaN is never a Weight.
using Weight = double;

inline constexpr Weight kInfWeight = std::numeric_limits<double>::infinity();

inline Weight trop_add(Weight a, Weight b) {
    assert(!std::isnan(a) && !std::isnan(b));
    return a < b ? a : b;
}

inline Weight trop_mul(Weight a, Weight b) {
    assert(!std::isnan(a) && !std::isnan(b));
    return a + b; // inf absorbs: x + inf = inf
}

// phi(p) = -log p, with phi(0) = inf and phi(1) = 0.
inline Weight tropicalize(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        fail(ErrorKind::DomainError, "probability outside [0,1]");
    if (p == 0.0) return kInfWeight;
    if (p == 1.0) return 0.0;
    return -std::log(p);
}

// Per-node weight tables w = -log p, same shape as the CPT tables.
struct WeightModel {
    std::vector<std::vector<std::vector<Weight>>> tables; // tables[v][row][state]

    Weight at(NodeId v, std::int64_t row, int state) const { return tables[v][row][state]; }
};

WeightModel tropicalize_model(const NetworkModel& net);

} // namespace bnet

#endif
