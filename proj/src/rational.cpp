#include "cliffrep/rational.hpp"

#include "cliffrep/errors.hpp"

#include <cctype>

namespace cliffrep {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0, slash = 0;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(text[j]))) {
      ++digits;
    } else if (text[j] == '/' && slash == 0 && digits > 0 && j + 1 < text.size()) {
      slash = j;
    } else {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
  }
  if (digits == 0) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw InvalidArgument("zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace cliffrep
