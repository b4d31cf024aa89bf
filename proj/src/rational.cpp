#include "pvertex/rational.hpp"

#include <cctype>

#include "pvertex/errors.hpp"

namespace pvertex {

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("not an integer: '" + text + "'");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("not an integer: '" + text + "'");
    }
  }
  return Integer(text);
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  const std::string s = trimmed(text);
  const std::size_t slash = s.find('/');
  Integer num, den;
  if (slash == std::string::npos) {
    num = parse_integer(s);
    den = 1;
  } else {
    num = parse_integer(s.substr(0, slash));
    den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: '" + s + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace pvertex
