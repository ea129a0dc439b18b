#include "genquat/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace genquat {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_quad(const GQuat& x) {
    return format_double(x.a1) + "," + format_double(x.a2) + "," + format_double(x.a3) +
           "," + format_double(x.a4);
}

std::optional<std::array<double, 4>> parse_quad(std::string_view s) {
    std::array<double, 4> out{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            if (pos >= s.size() || s[pos] != ',')
                return std::nullopt;
            ++pos;
        }
        const char* first = s.data() + pos;
        const char* last = s.data() + s.size();
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || !std::isfinite(v))
            return std::nullopt;
        out[i] = v;
        pos = static_cast<std::size_t>(ptr - s.data());
    }
    if (pos != s.size())
        return std::nullopt;
    return out;
}

std::string to_json(const GQuat& x, const char* branch) {
    std::string s = "{\"alpha\":";
    s += format_double(x.params.alpha);
    s += ",\"beta\":";
    s += format_double(x.params.beta);
    s += ",\"coeffs\":[";
    s += format_double(x.a1);
    s += ",";
    s += format_double(x.a2);
    s += ",";
    s += format_double(x.a3);
    s += ",";
    s += format_double(x.a4);
    s += "],\"branch\":\"";
    s += branch;
    s += "\"}";
    return s;
}

} // namespace genquat
