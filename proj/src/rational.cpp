#include "gcond/rational.hpp"

#include <cctype>

namespace gcond {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool parse_bigint(std::string_view s, BigInt& out) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);   // cpp_int rejects '+'
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = BigInt(std::string(s));
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den;
  if (slash == std::string_view::npos) {
    if (!parse_bigint(text, num)) return std::nullopt;
    return Rational(num);
  }
  if (!parse_bigint(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_bigint(text.substr(slash + 1), den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

}  // namespace gcond
