#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folinv {

/// folinv <command> <file> [flags]; args exclude the program name.
/// Returns 0 on pass, 1 on a failed check, 2 on input or computation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace folinv
