#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace indisc {

/// Arbitrary-precision natural number. Term values and Goedel codes routinely
/// exceed 64 bits, so every public surface uses this type.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

/// Parses a non-empty string of decimal digits; throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

}  // namespace indisc
