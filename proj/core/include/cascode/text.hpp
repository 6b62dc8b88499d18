#pragma once

#include <charconv>
#include <string>

namespace cascode {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace cascode
