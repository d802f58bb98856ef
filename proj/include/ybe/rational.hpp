#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ybe {

/// Exact rational scalars; all coefficient arithmetic uses this type.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", "p" or "-p/q". Throws ValidationError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace ybe
