#pragma once

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace parares {

/// Formats a double with the given number of significant digits,
/// locale-independent. Infinities render as "inf"/"-inf".
inline std::string format_sig(double value, int digits = 12) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

/// Locale-independent strtod via from_chars. Accepts "inf".
/// Returns false if the token is not a complete floating-point literal.
inline bool parse_double(const std::string& tok, double& out) {
    if (tok == "inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    if (tok == "-inf") {
        out = -std::numeric_limits<double>::infinity();
        return true;
    }
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

}  // namespace parares
