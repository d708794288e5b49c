#include "cliffrep/cli/expression.hpp"

#include "cliffrep/errors.hpp"

#include <cctype>

namespace cliffrep::cli {

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, const Signature& sig) : s_(text), sig_(sig) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string digits() {
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }

  Rational rational() {
    std::size_t start = pos();
    std::string num = digits();
    if (num.empty()) fail("expected a number");
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", start);
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }

  Blade blade() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail_at("expected a blade", start);
      return Blade{};
    }
    if (pos_ >= s_.size() || s_[pos_] != 'e') fail("expected a blade");
    ++pos_;
    std::vector<int> idx;
    std::vector<std::size_t> where;
    if (pos_ < s_.size() && s_[pos_] == '{') {
      ++pos_;
      while (true) {
        skip_ws();
        where.push_back(pos_);
        std::string d = digits();
        if (d.empty()) fail("expected a generator index");
        if (d.size() > 3) fail_at("generator index too large", where.back());
        idx.push_back(std::stoi(d));
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == '}') {
          ++pos_;
          break;
        }
        fail("expected ',' or '}'");
      }
    } else {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        where.push_back(pos_);
        idx.push_back(s_[pos_++] - '0');
      }
      if (idx.empty()) fail("expected generator digits after 'e'");
    }
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 1 || idx[i] > sig_.n())
        fail_at("generator e" + std::to_string(idx[i]) + " is not in " + to_string(sig_), where[i]);
      if (i > 0 && idx[i] <= idx[i - 1]) fail_at("generator indices must be strictly ascending", where[i]);
      mask |= std::uint32_t{1} << (idx[i] - 1);
    }
    return Blade(mask);
  }

 private:
  std::string_view s_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_expression(std::string_view text, const Signature& sig) {
  Lexer lx(text, sig);
  Multivector out(sig);
  if (lx.done()) lx.fail("empty expression");
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (!lx.accept('+') && !first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    Blade b{};
    char c = lx.peek();
    if (c == 'e') {
      b = lx.blade();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = lx.rational();
      if (lx.accept('*')) {
        b = lx.blade();
      } else if (lx.peek() == 'e') {
        b = lx.blade();
      }
    } else {
      lx.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }
    out.add_term(b, sign > 0 ? coeff : Rational(-coeff));
  }
  return out;
}

Blade parse_blade(std::string_view text, const Signature& sig) {
  Lexer lx(text, sig);
  Blade b = lx.blade();
  if (!lx.done()) lx.fail("trailing input after blade");
  return b;
}

FactorList parse_factor_list(std::string_view text, const Signature& sig) {
  Lexer lx(text, sig);
  FactorList out;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else
      lx.accept('+');
    std::size_t at = lx.pos();
    Blade b = lx.blade();
    if (b.is_scalar()) lx.fail_at("the unit is not a valid factor", at);
    out.blades.push_back(b);
    out.signs.push_back(sign);
    lx.accept(',');
  }
  return out;
}

Signature parse_signature(std::string_view text) {
  auto comma = text.find(',');
  auto number = [&](std::string_view part, std::size_t offset) {
    if (part.empty() || part.size() > 3 || part.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("expected a non-negative integer", offset);
    return std::stoi(std::string(part));
  };
  if (comma == std::string_view::npos) throw ParseError("expected 'p,q'", text.size());
  return Signature(number(text.substr(0, comma), 0), number(text.substr(comma + 1), comma + 1));
}

}  // namespace cliffrep::cli
