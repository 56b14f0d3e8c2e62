#pragma once

#include <string>

namespace setfrac {

// Locale-independent rendering with 12 significant digits ("%.12g").
std::string format_real(double x);

}  // namespace setfrac
