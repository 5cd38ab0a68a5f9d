#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mutlab {

/// Exact integer of unbounded magnitude. Matrix entries grow doubly
/// exponentially along greedy mutation paths (thousands of bits within a few
/// dozen steps), so fixed-width integers are not an option anywhere in the
/// engine.
using Int = boost::multiprecision::cpp_int;

/// Sign of an exact integer: -1, 0 or +1.
inline int sign_of(const Int& v) { return v.sign(); }

inline Int abs_of(const Int& v) { return boost::multiprecision::abs(v); }

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Parses a decimal integer string (optional leading '-'). Throws ParseError
/// on malformed input; callers at the I/O boundary add field context.
Int parse_decimal(const std::string& text);

}  // namespace mutlab
