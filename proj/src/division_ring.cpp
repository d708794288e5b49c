#include "cliffrep/division_ring.hpp"

#include "cliffrep/errors.hpp"

namespace cliffrep {

std::shared_ptr<const KBasis> KBasis::build(const Idempotent& f, const Subgroup& stab) {
  const Signature& sig = f.signature();
  std::shared_ptr<KBasis> kb(new KBasis(f));
  switch (classify(sig).ring) {
    case RingType::Real:
    case RingType::DoubleReal: kb->ring_ = RingType::Real; break;
    case RingType::Complex: kb->ring_ = RingType::Complex; break;
    case RingType::Quaternion:
    case RingType::DoubleQuaternion: kb->ring_ = RingType::Quaternion; break;
  }

  // stabilizer blades outside the factor span squaring to -1
  std::vector<Blade> candidates;
  for (SignedBlade g : stab.members())
    if (g.sign > 0 && !f.factors.in_span(g.blade) && blade_square(g.blade, sig) == -1)
      candidates.push_back(g.blade);

  kb->monomials_.push_back(Blade{});
  if (kb->ring_ != RingType::Real) {
    if (candidates.empty()) throw Error("no imaginary unit found in the stabilizer");
    kb->monomials_.push_back(candidates.front());
  }
  if (kb->ring_ == RingType::Quaternion) {
    Blade ei = candidates.front();
    Blade ej{};
    bool found = false;
    for (Blade c : candidates) {
      if (!blades_commute(ei, c)) {
        ej = c;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no anticommuting unit found in the stabilizer");
    SignedBlade ek = blade_mul(ei, ej, sig);
    // keep e_i e_j = +e_k
    if (ek.sign < 0) std::swap(ei, ej);
    kb->monomials_ = {Blade{}, ei, ej, ek.blade};
  }

  std::size_t d = kb->monomials_.size();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      SignedBlade p = blade_mul(kb->monomials_[a], kb->monomials_[b], sig);
      std::size_t c = 0;
      while (c < d && !(kb->monomials_[c] == p.blade)) ++c;
      if (c == d) throw Error("monomials of K are not closed under multiplication");
      kb->sign_[a][b] = p.sign;
      kb->index_[a][b] = c;
    }
  return kb;
}

Multivector KBasis::unit(std::size_t a) const { return SignedBlade(monomials_.at(a)) * f_.value; }

bool KBasis::same_as(const KBasis& other) const {
  return this == &other || (monomials_ == other.monomials_ && f_.value == other.f_.value);
}

std::shared_ptr<const KBasis> division_ring_basis(const Idempotent& f) { return KBasis::build(f, stabilizer(f)); }

KElement::KElement(std::shared_ptr<const KBasis> basis) : basis_(std::move(basis)) {}

KElement::KElement(std::shared_ptr<const KBasis> basis, const std::vector<Rational>& coords)
    : basis_(std::move(basis)) {
  if (coords.size() != basis_->dim()) throw InvalidArgument("coordinate count does not match K");
  for (std::size_t a = 0; a < coords.size(); ++a) c_[a] = coords[a];
}

KElement KElement::one(std::shared_ptr<const KBasis> basis) {
  KElement e(std::move(basis));
  e.c_[0] = 1;
  return e;
}

bool KElement::is_zero() const {
  for (std::size_t a = 0; a < dim(); ++a)
    if (sgn(c_[a]) != 0) return false;
  return true;
}

void KElement::check(const KElement& o) const {
  if (!basis_->same_as(*o.basis_)) throw InvalidArgument("K basis mismatch");
}

KElement& KElement::operator+=(const KElement& o) {
  check(o);
  for (std::size_t a = 0; a < dim(); ++a) c_[a] += o.c_[a];
  return *this;
}

KElement& KElement::operator-=(const KElement& o) {
  check(o);
  for (std::size_t a = 0; a < dim(); ++a) c_[a] -= o.c_[a];
  return *this;
}

KElement& KElement::operator*=(const Rational& s) {
  for (std::size_t a = 0; a < dim(); ++a) c_[a] *= s;
  return *this;
}

bool operator==(const KElement& a, const KElement& b) {
  if (!a.basis_->same_as(*b.basis_)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

KElement operator+(KElement a, const KElement& b) { return a += b; }
KElement operator-(KElement a, const KElement& b) { return a -= b; }
KElement operator-(KElement a) { return a *= Rational(-1); }
KElement operator*(KElement a, const Rational& s) { return a *= s; }

KElement k_mul(const KElement& a, const KElement& b) {
  if (!a.basis().same_as(b.basis())) throw InvalidArgument("K basis mismatch");
  const KBasis& kb = a.basis();
  KElement out(a.basis_ptr());
  Rational prod;
  for (std::size_t i = 0; i < kb.dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < kb.dim(); ++j) {
      if (sgn(b[j]) == 0) continue;
      prod = a[i] * b[j];
      if (kb.product_sign(i, j) > 0)
        out[kb.product_index(i, j)] += prod;
      else
        out[kb.product_index(i, j)] -= prod;
    }
  }
  return out;
}

KElement operator*(const KElement& a, const KElement& b) { return k_mul(a, b); }

KElement k_conj(const KElement& a) {
  KElement out = a;
  for (std::size_t i = 1; i < a.dim(); ++i) out[i] = -out[i];
  return out;
}

Multivector to_multivector(const KElement& a) {
  const KBasis& kb = a.basis();
  Multivector u(kb.idempotent().signature());
  for (std::size_t i = 0; i < kb.dim(); ++i) u.add_term(kb.monomials()[i], a[i]);
  return u * kb.idempotent().value;
}

bool in_division_ring(const Multivector& x, const KBasis& basis) {
  const Multivector& f = basis.idempotent().value;
  return f * x * f == x;
}

KElement project_to_k(const Multivector& x, const std::shared_ptr<const KBasis>& basis) {
  if (!(x.signature() == basis->idempotent().signature())) throw SignatureMismatch();
  // b_a f has coefficient 1/2^k on b_a
  Rational scale(std::size_t{1} << basis->idempotent().factors.size());
  KElement out(basis);
  for (std::size_t a = 0; a < basis->dim(); ++a) out[a] = scale * x.coefficient(basis->monomials()[a]);
  if (!(to_multivector(out) == x)) throw NotInDivisionRing("element is not in K = f Cl f");
  return out;
}

std::string to_string(const KElement& a, bool symbolic) {
  static const char* names[4] = {"", "i", "j", "k"};
  const KBasis& kb = a.basis();
  int n = kb.idempotent().signature().n();
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational& c = a[i];
    if (sgn(c) == 0) continue;
    std::string unit = i == 0 ? "" : (symbolic ? names[i] : format_blade(kb.monomials()[i], n));
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    Rational mag = abs(c);
    if (unit.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += unit;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cliffrep
