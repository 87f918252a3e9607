#include "bnet/tropical.hpp"

namespace bnet {

WeightModel tropicalize_model(const NetworkModel& net) {
    WeightModel wm;
    wm.tables.resize(net.var_count());
    for (NodeId v = 0; v < net.var_count(); ++v) {
        const Cpt& cpt = net.cpts[v];
        auto& table = wm.tables[v];
        table.resize(cpt.rows.size());
        for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
            table[r].reserve(cpt.rows[r].size());
            for (double p : cpt.rows[r]) table[r].push_back(tropicalize(p));
        }
    }
    return wm;
}

} // namespace bnet
