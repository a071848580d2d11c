#include "spinshape/rational.hpp"

#include <cctype>

namespace spinshape {

namespace {

// cpp_int's string constructor treats a leading 0 as an octal prefix;
// normalize plain decimal digit strings before handing them over.
Int parse_decimal_int(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) throw std::invalid_argument("empty integer");
  for (char c : body)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a decimal integer");
  std::size_t first = body.find_first_not_of('0');
  body = first == std::string::npos ? "0" : body.substr(first);
  Int value(body);
  return negative ? -value : value;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      Int num = parse_decimal_int(text.substr(0, slash));
      Int den = parse_decimal_int(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    auto point = text.find('.');
    if (point != std::string::npos) {
      std::string head = text.substr(0, point);
      std::string frac = text.substr(point + 1);
      bool negative = !head.empty() && head[0] == '-';
      if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
      if (head.empty()) head = "0";
      if (frac.empty()) frac = "0";
      Int den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      Rational value =
          Rational(parse_decimal_int(head)) + Rational(parse_decimal_int(frac), den);
      return negative ? -value : value;
    }
    return Rational(parse_decimal_int(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace spinshape
