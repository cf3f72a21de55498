#ifndef RHOT_CLI_HPP
#define RHOT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rhot {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 success, 1 failed verification, 2 argument errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace rhot

#endif
