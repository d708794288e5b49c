#pragma once

#include "cliffrep/blade.hpp"
#include "cliffrep/rational.hpp"
#include "cliffrep/signature.hpp"

#include <map>
#include <string>

namespace cliffrep {

class Multivector {
 public:
  // iteration follows the monomial order
  using Terms = std::map<Blade, Rational>;

  explicit Multivector(const Signature& sig) : sig_(sig) {}
  Multivector(const Signature& sig, const Rational& scalar);
  Multivector(const Signature& sig, Blade b, const Rational& coeff = 1);
  Multivector(const Signature& sig, SignedBlade b);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Blade b) const;

  void add_term(Blade b, const Rational& coeff);

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& s);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  void check_blade(Blade b) const;

  Signature sig_;
  Terms terms_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator-(Multivector a);
Multivector operator*(Multivector a, const Rational& s);
Multivector operator*(const Rational& s, Multivector a);
Multivector operator*(const Multivector& a, const Multivector& b);
Multivector operator*(SignedBlade g, const Multivector& u);
Multivector operator*(const Multivector& u, SignedBlade g);

Multivector grade_involution(const Multivector& u);
Multivector reversion(const Multivector& u);
Multivector conjugation(const Multivector& u);
// e_I -> e_I^{-1}, extended linearly
Multivector transposition(const Multivector& u);

// "1/4 + 1/4*e13 - e24"; "0" for the zero element
std::string to_string(const Multivector& u);

}  // namespace cliffrep
