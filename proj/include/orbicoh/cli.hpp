#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbicoh {

/// Runs one command line.  Returns 0 on success, 1 when the computation
/// raised an Error (its name is printed to `err`) and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace orbicoh
