#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hspin {

// exit codes: 0 ok, 1 verification failure, 2 usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hspin
