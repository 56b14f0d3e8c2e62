#include "setfrac/format.hpp"

#include <charconv>
#include <cmath>

namespace setfrac {

std::string format_real(double x) {
  char buf[64];
  // to_chars ignores the global locale, unlike printf.
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  std::string out(buf, res.ptr);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace setfrac
