#include "cliffrep/norms.hpp"

#include "cliffrep/errors.hpp"

namespace cliffrep {

namespace {

void require_in_ideal(const Multivector& x, const SpinorBasis& s) {
  if (!(x * s.idempotent().value == x)) throw NotInIdeal("argument is not in the spinor ideal Cl f");
}

Multivector beta_product(BetaKind kind, const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w) {
  return w.s * (kind == BetaKind::Plus ? reversion(psi) : conjugation(psi)) * phi;
}

template <class Product>
BilinearForm tabulate(const SpinorBasis& s, Product product) {
  auto basis = real_spinor_basis(s);
  BilinearForm form;
  form.dim = basis.size();
  form.gram.reserve(form.dim * form.dim);
  for (const auto& x : basis)
    for (const auto& y : basis) form.gram.push_back(project_to_k(product(x, y), s.kbasis()));
  return form;
}

}  // namespace

KElement t_inner(const Multivector& psi, const Multivector& phi, const SpinorBasis& s) {
  require_in_ideal(psi, s);
  require_in_ideal(phi, s);
  return project_to_k(transposition(psi) * phi, s.kbasis());
}

KElement beta(BetaKind kind, const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w,
              const SpinorBasis& s) {
  require_in_ideal(psi, s);
  require_in_ideal(phi, s);
  Multivector x = beta_product(kind, psi, phi, w);
  if (!in_division_ring(x, *s.kbasis())) throw NotInDivisionRing("witness does not map the product into K");
  return project_to_k(x, s.kbasis());
}

KElement beta_plus(const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w, const SpinorBasis& s) {
  return beta(BetaKind::Plus, psi, phi, w, s);
}

KElement beta_minus(const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w, const SpinorBasis& s) {
  return beta(BetaKind::Minus, psi, phi, w, s);
}

std::vector<Multivector> real_spinor_basis(const SpinorBasis& s) {
  std::vector<Multivector> out;
  const auto& mono = s.kbasis()->monomials();
  for (Blade m : s.transversal().reps)
    for (Blade b : mono) out.push_back(blade_mul(m, b, s.idempotent().signature()) * s.idempotent().value);
  return out;
}

BilinearForm t_inner_form(const SpinorBasis& s) {
  return tabulate(s, [](const Multivector& x, const Multivector& y) { return transposition(x) * y; });
}

BilinearForm beta_form(BetaKind kind, const PureSpinorWitness& w, const SpinorBasis& s) {
  return tabulate(s, [&](const Multivector& x, const Multivector& y) { return beta_product(kind, x, y, w); });
}

std::optional<PureSpinorWitness> find_witness(BetaKind kind, const SpinorBasis& s) {
  const Signature& sig = s.idempotent().signature();
  auto basis = real_spinor_basis(s);
  std::vector<Multivector> transformed;
  for (const auto& x : basis) transformed.push_back(kind == BetaKind::Plus ? reversion(x) : conjugation(x));
  for (Blade b : blade_order(sig)) {
    PureSpinorWitness w{Multivector(sig, b)};
    bool ok = true;
    for (std::size_t r = 0; r < basis.size() && ok; ++r) {
      Multivector left = SignedBlade(b) * transformed[r];
      bool row_nonzero = false;
      for (const auto& y : basis) {
        Multivector x = left * y;
        if (!in_division_ring(x, *s.kbasis())) {
          ok = false;
          break;
        }
        row_nonzero = row_nonzero || !x.is_zero();
      }
      ok = ok && row_nonzero;
    }
    if (ok) return w;
  }
  return std::nullopt;
}

bool in_G_epsilon(const Multivector& g) { return transposition(g) * g == Multivector(g.signature(), Rational(1)); }

}  // namespace cliffrep
