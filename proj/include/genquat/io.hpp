#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "genquat/algebra.hpp"

namespace genquat {

// 17 significant digits; strtod of the output reproduces the value bit for
// bit.
std::string format_double(double v);

// "a1,a2,a3,a4"
std::string format_quad(const GQuat& x);

// Strict element syntax: exactly four comma-separated finite decimal
// literals, no spaces. Returns nullopt on any violation (including nan/inf).
std::optional<std::array<double, 4>> parse_quad(std::string_view s);

// {"alpha":..,"beta":..,"coeffs":[a1,a2,a3,a4],"branch":"trig|hyp|degen|n/a"}
std::string to_json(const GQuat& x, const char* branch);

} // namespace genquat
