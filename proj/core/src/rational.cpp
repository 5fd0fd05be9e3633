#include "homspace/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace homspace {

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace homspace
