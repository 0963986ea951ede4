#include "credalkit/rational.hpp"

#include <cctype>

namespace credalkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view numerator = text;
  std::string_view denominator;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    numerator = text.substr(0, slash);
    denominator = text.substr(slash + 1);
    if (!all_digits(denominator)) return std::nullopt;
  }
  if (!all_digits(numerator)) return std::nullopt;

  BigInt num{std::string(numerator)};
  BigInt den = denominator.empty() ? BigInt(1) : BigInt{std::string(denominator)};
  if (den == 0) return std::nullopt;
  Rational value = Rational(num) / Rational(den);
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace credalkit
