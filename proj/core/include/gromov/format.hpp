#pragma once

#include <string>

namespace gromov {

/// Shortest decimal text that reads back as the same double.
std::string format_double(double value);

/// Parses a whole token as a double; throws Error naming `what` otherwise.
double parse_double(const std::string& token, const std::string& what);

}  // namespace gromov
