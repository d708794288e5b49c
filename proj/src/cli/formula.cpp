#include "cliffrep/cli/formula.hpp"

#include "cliffrep/errors.hpp"

#include <cctype>

namespace cliffrep::cli {

std::string coordinate_name(std::size_t r, std::size_t kdim) {
  if (kdim == 1) return std::to_string(r + 1);
  return std::to_string(r / kdim + 1) + std::to_string(r % kdim + 1);
}

BilinearPolynomial component(const BilinearForm& form, std::size_t a) {
  BilinearPolynomial poly;
  for (std::size_t r = 0; r < form.dim; ++r)
    for (std::size_t c = 0; c < form.dim; ++c) {
      const Rational& v = form.at(r, c)[a];
      if (!is_zero(v)) poly.terms[{r, c}] = v;
    }
  return poly;
}

std::string render(const BilinearPolynomial& poly, std::size_t kdim) {
  if (poly.terms.empty()) return "0";
  std::string out;
  for (const auto& [rc, c] : poly.terms) {
    Rational mag = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1) out += to_string(mag) + "*";
    out += "psi" + coordinate_name(rc.first, kdim) + "*phi" + coordinate_name(rc.second, kdim);
  }
  return out;
}

namespace {

class Reader {
 public:
  Reader(std::string_view t) : t_(t) {}

  void skip() {
    while (pos_ < t_.size() && (std::isspace(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_')) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= t_.size();
  }
  char peek() {
    skip();
    return pos_ < t_.size() ? t_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip();
    if (t_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    return std::string(t_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

 private:
  std::string_view t_;
  std::size_t pos_ = 0;
};

std::size_t coordinate(Reader& in, std::size_t kdim, std::size_t dim) {
  std::size_t at = in.pos();
  std::string d = in.digits();
  if (d.empty()) in.fail("expected coordinate index");
  std::size_t r = 0;
  if (kdim == 1) {
    r = std::stoul(d) - 1;
  } else {
    if (d.size() != 2) throw ParseError("coordinate needs spinor and K digits", at);
    std::size_t i = static_cast<std::size_t>(d[0] - '1');
    std::size_t a = static_cast<std::size_t>(d[1] - '1');
    if (a >= kdim) throw ParseError("K index out of range", at);
    r = i * kdim + a;
  }
  if (r >= dim) throw ParseError("coordinate out of range", at);
  return r;
}

}  // namespace

BilinearPolynomial parse_bilinear(std::string_view text, std::size_t kdim, std::size_t dim) {
  BilinearPolynomial poly;
  Reader in(text);
  if (in.done()) in.fail("empty formula");
  if (in.accept('0') && in.done()) return poly;
  in = Reader(text);
  bool first = true;
  while (!in.done()) {
    int sign = 1;
    if (in.accept('-'))
      sign = -1;
    else if (!in.accept('+') && !first)
      in.fail("expected '+' or '-'");
    first = false;
    Rational c = 1;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      std::string num = in.digits();
      if (in.accept('/')) num += "/" + in.digits();
      c = parse_rational(num);
      in.accept('*');
    }
    if (!in.accept("psi")) in.fail("expected psi");
    std::size_t r = coordinate(in, kdim, dim);
    in.accept('*');
    if (!in.accept("phi")) in.fail("expected phi");
    std::size_t col = coordinate(in, kdim, dim);
    Rational& slot = poly.terms[{r, col}];
    slot += sign * c;
    if (is_zero(slot)) poly.terms.erase({r, col});
  }
  return poly;
}

}  // namespace cliffrep::cli
