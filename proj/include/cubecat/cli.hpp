#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubecat {

// Runs the cubecat command line on explicit streams so tests can drive it
// in-process. `args` excludes the program name. Returns the process exit
// code: 0 on success, 1 on verification failure, 2 on usage or parse errors.
int cubecat_main(std::vector<std::string> args, std::istream& in, std::ostream& out,
                 std::ostream& err);

} // namespace cubecat
