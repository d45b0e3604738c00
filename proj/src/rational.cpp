#include "tk/rational.hpp"

#include "tk/error.hpp"

#include <cctype>

namespace tk {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw PreconditionError("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw PreconditionError("malformed rational: sign in denominator");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw PreconditionError("malformed rational: zero denominator");
  return Rat(num, den);
}

std::string to_string(const Rat& value) {
  const Integer den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

}  // namespace tk
