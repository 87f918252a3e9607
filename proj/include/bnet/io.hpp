#ifndef BNET_IO_HPP
#define BNET_IO_HPP

#include <string>

#include "bnet/model.hpp"

namespace bnet {

// Network file: {"variables":[{"name","states","observed"}...],
// "edges":[["parent","child"]...], "cpts":{"name":{"parents","rows"}}}.
// Rows are listed in mixed-radix parent-tuple order, first listed
// parent least significant; the "parents" list must match the
// edge-derived parent order.
NetworkModel parse_network(const std::string& json_text);
NetworkModel load_network(const std::string& path);

// Canonical bytes: fixed key order, floats with 17 significant
// digits; identical models serialize identically.
std::string serialize_network(const NetworkModel& net);

// Evidence file: {"<observed name>": "<state label>", ...}, total
// over the observed variables.
Assignment parse_evidence(const std::string& json_text, const NetworkModel& net);
Assignment load_evidence(const std::string& path, const NetworkModel& net);
std::string serialize_evidence(const NetworkModel& net, const Assignment& x);

} // namespace bnet

#endif
