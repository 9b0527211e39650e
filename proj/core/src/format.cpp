#include "gromov/format.hpp"

#include <array>
#include <charconv>

#include "gromov/error.hpp"

namespace gromov {

std::string format_double(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

double parse_double(const std::string& token, const std::string& what) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last || first == last) {
    throw Error("invalid number '" + token + "' for " + what);
  }
  return value;
}

}  // namespace gromov
