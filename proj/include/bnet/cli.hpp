#ifndef BNET_CLI_HPP
#define BNET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bnet {

// Command-line driver.  `args` excludes the program name.  Returns
// 0 on success, 1 on domain errors (invalid network, not graded with
// --engine dp, state space over cap) and 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bnet

#endif
