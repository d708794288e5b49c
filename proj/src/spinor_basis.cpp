#include "cliffrep/spinor_basis.hpp"

#include "cliffrep/errors.hpp"

namespace cliffrep {

SpinorBasis SpinorBasis::build(const Idempotent& f) {
  Subgroup stab = cliffrep::stabilizer(f);
  Transversal t = cliffrep::transversal(f, stab);
  return SpinorBasis(f, std::move(stab), std::move(t));
}

SpinorBasis SpinorBasis::build(const Idempotent& f, const Transversal& t) {
  return SpinorBasis(f, cliffrep::stabilizer(f), t);
}

SpinorBasis::SpinorBasis(const Idempotent& f, Subgroup stab, Transversal t)
    : stab_(std::move(stab)), t_(std::move(t)) {
  const Signature& sig = f.signature();
  if (t_.reps.empty() || !t_.reps.front().is_scalar()) throw InvalidArgument("transversal must start with 1");
  kbasis_ = KBasis::build(f, stab_);

  for (Blade m : t_.reps) {
    elements_.push_back(SignedBlade(m) * f.value);
    family_.push_back(conjugate(SignedBlade(m), f));
  }

  const auto span = f.factors.span_masks();
  const auto& mono = kbasis_->monomials();
  split_.assign(sig.dimension(), Split{});
  std::vector<bool> seen(sig.dimension(), false);
  for (std::uint32_t i = 0; i < t_.size(); ++i)
    for (std::uint32_t a = 0; a < mono.size(); ++a) {
      SignedBlade mb = blade_mul(t_.reps[i], mono[a], sig);
      for (std::uint32_t h = 0; h < span.size(); ++h) {
        SignedBlade x = blade_mul(mb, SignedBlade(Blade(span[h])), sig);
        if (seen[x.blade.mask]) throw InvalidArgument("transversal representatives share a coset");
        seen[x.blade.mask] = true;
        split_[x.blade.mask] = {i, a, h, x.sign};
      }
    }
  for (bool b : seen)
    if (!b) throw InvalidArgument("transversal does not cover the group");

  // absorption signs per family member: (t_j1 t_j2 ...) f_k = (s_j1 s_j2 ...) f_k
  const auto& factors = f.factors.factors();
  absorb_.resize(family_.size());
  for (std::size_t k = 0; k < family_.size(); ++k) {
    auto& row = absorb_[k];
    row.assign(span.size(), 1);
    std::vector<SignedBlade> prod(span.size(), SignedBlade(Blade{}));
    std::vector<int> sigma(span.size(), 1);
    for (std::size_t s = 1; s < span.size(); ++s) {
      int j = std::countr_zero(s);
      std::size_t prev = s & (s - 1);
      // prev only holds factors above j, so prepend t_j
      prod[s] = blade_mul(SignedBlade(factors[j]), prod[prev], sig);
      sigma[s] = sigma[prev] * family_[k].signs[j];
      row[s] = prod[s].sign * sigma[s];
    }
  }
}

std::vector<KElement> SpinorBasis::product_coordinates(const Multivector& u, std::size_t k) const {
  if (!(u.signature() == idempotent().signature())) throw SignatureMismatch();
  std::vector<KElement> out(size(), KElement(kbasis_));
  const auto& absorb = absorb_[k];
  for (const auto& [x, c] : u.terms()) {
    const Split& s = split_[x.mask];
    if (s.sign * absorb[s.h] > 0)
      out[s.i][s.a] += c;
    else
      out[s.i][s.a] -= c;
  }
  return out;
}

std::vector<KElement> decompose_spinor(const Multivector& psi, const SpinorBasis& s) {
  const Signature& sig = s.idempotent().signature();
  if (!(psi.signature() == sig)) throw SignatureMismatch();
  Rational scale(std::size_t{1} << s.idempotent().factors.size());
  const auto& mono = s.kbasis()->monomials();
  std::vector<KElement> out(s.size(), KElement(s.kbasis()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t a = 0; a < mono.size(); ++a) {
      // m_i b_a f carries sign(m_i b_a)/2^k on the blade m_i b_a
      SignedBlade mb = blade_mul(s.transversal().reps[i], mono[a], sig);
      Rational c = psi.coefficient(mb.blade) * scale;
      out[i][a] = mb.sign > 0 ? c : Rational(-c);
    }
  if (!(assemble_spinor(out, s) == psi)) throw NotInIdeal("element is not in the spinor ideal Cl f");
  return out;
}

Multivector assemble_spinor(const std::vector<KElement>& coords, const SpinorBasis& s) {
  if (coords.size() != s.size()) throw InvalidArgument("one K coordinate per basis element required");
  Multivector psi(s.idempotent().signature());
  for (std::size_t i = 0; i < coords.size(); ++i)
    psi += SignedBlade(s.transversal().reps[i]) * to_multivector(coords[i]);
  return psi;
}

StructConstants::StructConstants(const SpinorBasis& s) : n_(s.size()), target_(n_ * n_), sign_(n_ * n_) {
  const Signature& sig = s.idempotent().signature();
  const auto& reps = s.transversal().reps;
  for (std::size_t l = 0; l < n_; ++l)
    for (std::size_t k = 0; k < n_; ++k) {
      SignedBlade x = blade_mul(reps[l], reps[k], sig);
      const auto& sp = s.split(x.blade);
      if (sp.a != 0)
        throw Error("transversal products leave the cosets of the factor span; constants are not signs");
      target_[l * n_ + k] = sp.i;
      sign_[l * n_ + k] = x.sign * sp.sign * s.absorption(0, sp.h);
    }
}

std::vector<std::vector<int>> StructConstants::matrix() const {
  std::vector<std::vector<int>> c(n_, std::vector<int>(n_, 0));
  for (std::size_t l = 0; l < n_; ++l)
    for (std::size_t k = 0; k < n_; ++k) c[target(l, k)][k] = sign(l, k);
  return c;
}

StructConstants structure_constants(const SpinorBasis& s) { return StructConstants(s); }

}  // namespace cliffrep
