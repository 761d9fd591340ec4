#pragma once

#include <cstdio>
#include <string>

namespace graphvol {

// Fixed 15-significant-digit formatter. All user-facing numeric output goes
// through this so identical inputs produce byte-identical text.
inline std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

} // namespace graphvol
