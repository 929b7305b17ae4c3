#pragma once

#include <charconv>
#include <string>

#include "semibandit/strategy.hpp"

namespace semibandit {

// Reals are printed with 9 significant digits; the output is a pure function
// of the double's bits, so identical runs give byte-identical files.
inline std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

} // namespace semibandit
