#include "toughtree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace toughtree {

namespace {

BigInt parse_integer(const std::string& digits, const std::string& text) {
  if (digits.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const BigInt den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    value = Rational(parse_integer(body.substr(0, slash), text), den);
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : parse_integer(whole, text);
    const BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac, text);
    value = Rational(w * scale + f, scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace toughtree
