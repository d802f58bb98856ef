#include "ybe/rational.hpp"

#include "ybe/errors.hpp"

namespace ybe {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ValidationError("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t k = start; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') throw bad();
    }
    return boost::multiprecision::cpp_int(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ybe
