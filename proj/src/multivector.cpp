#include "cliffrep/multivector.hpp"

#include "cliffrep/errors.hpp"

#include <vector>

namespace cliffrep {

Multivector::Multivector(const Signature& sig, const Rational& scalar) : sig_(sig) {
  add_term(Blade{}, scalar);
}

Multivector::Multivector(const Signature& sig, Blade b, const Rational& coeff) : sig_(sig) {
  add_term(b, coeff);
}

Multivector::Multivector(const Signature& sig, SignedBlade b) : sig_(sig) {
  add_term(b.blade, b.sign);
}

void Multivector::check_blade(Blade b) const {
  if (b.mask >> sig_.n()) throw InvalidArgument("blade outside the algebra");
}

Rational Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Blade b, const Rational& coeff) {
  check_blade(b);
  if (cliffrep::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (cliffrep::is_zero(it->second)) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  if (!(sig_ == other.sig_)) throw SignatureMismatch();
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  if (!(sig_ == other.sig_)) throw SignatureMismatch();
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  if (cliffrep::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= Rational(-1); }
Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
Multivector operator*(const Rational& s, Multivector a) { return a *= s; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch();
  const Signature& sig = a.signature();
  Multivector out(sig);
  if (a.size() * b.size() >= sig.dimension()) {
    // dense integer accumulator: clear denominators, divide once per output term
    auto scaled = [](const Multivector& u, mpz_class& den) {
      den = 1;
      for (const auto& [b, c] : u.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      std::vector<std::pair<std::uint32_t, mpz_class>> out;
      out.reserve(u.size());
      for (const auto& [b, c] : u.terms()) out.emplace_back(b.mask, c.get_num() * (den / c.get_den()));
      return out;
    };
    mpz_class da, db;
    auto sa = scaled(a, da), sb = scaled(b, db);
    std::vector<mpz_class> acc(sig.dimension());
    std::vector<bool> touched(sig.dimension(), false);
    for (const auto& [ma, na] : sa) {
      for (const auto& [mb, nb] : sb) {
        std::uint32_t m = ma ^ mb;
        if (blade_product_sign(Blade(ma), Blade(mb), sig) > 0)
          mpz_addmul(acc[m].get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
        else
          mpz_submul(acc[m].get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
        touched[m] = true;
      }
    }
    mpz_class den = da * db;
    for (std::uint32_t m = 0; m < sig.dimension(); ++m) {
      if (!touched[m] || acc[m] == 0) continue;
      Rational c(acc[m], den);
      c.canonicalize();
      out.add_term(Blade(m), c);
    }
    return out;
  }
  Multivector::Terms acc;
  Rational prod;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      SignedBlade s = blade_mul(ba, bb, sig);
      prod = ca * cb;
      auto [it, inserted] = acc.try_emplace(s.blade, 0);
      if (s.sign > 0)
        it->second += prod;
      else
        it->second -= prod;
    }
  }
  for (auto& [blade, c] : acc) out.add_term(blade, c);
  return out;
}

Multivector operator*(SignedBlade g, const Multivector& u) {
  Multivector out(u.signature());
  for (const auto& [b, c] : u.terms()) {
    SignedBlade s = blade_mul(g.blade, b, u.signature());
    out.add_term(s.blade, (s.sign * g.sign > 0) ? c : Rational(-c));
  }
  return out;
}

Multivector operator*(const Multivector& u, SignedBlade g) {
  Multivector out(u.signature());
  for (const auto& [b, c] : u.terms()) {
    SignedBlade s = blade_mul(b, g.blade, u.signature());
    out.add_term(s.blade, (s.sign * g.sign > 0) ? c : Rational(-c));
  }
  return out;
}

namespace {

template <class SignOf>
Multivector map_signs(const Multivector& u, SignOf sign_of) {
  Multivector out(u.signature());
  for (const auto& [b, c] : u.terms()) out.add_term(b, sign_of(b) > 0 ? c : Rational(-c));
  return out;
}

}  // namespace

Multivector grade_involution(const Multivector& u) {
  return map_signs(u, [](Blade b) { return (b.grade() & 1) ? -1 : 1; });
}

Multivector reversion(const Multivector& u) {
  return map_signs(u, [](Blade b) {
    int g = b.grade();
    return ((g * (g - 1) / 2) & 1) ? -1 : 1;
  });
}

Multivector conjugation(const Multivector& u) {
  return map_signs(u, [](Blade b) {
    int g = b.grade();
    return ((g * (g + 1) / 2) & 1) ? -1 : 1;
  });
}

Multivector transposition(const Multivector& u) {
  const Signature& sig = u.signature();
  return map_signs(u, [&sig](Blade b) { return blade_square(b, sig); });
}

std::string to_string(const Multivector& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : u.terms()) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (b.is_scalar()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += format_blade(b, u.signature().n());
    }
  }
  return out;
}

}  // namespace cliffrep
