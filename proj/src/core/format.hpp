#ifndef LAMW_CORE_FORMAT_HPP
#define LAMW_CORE_FORMAT_HPP

#include <charconv>
#include <string>

namespace lamw {

// Shortest decimal string that parses back to exactly v.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace lamw

#endif
