#pragma once

#include "cliffrep/spinor_basis.hpp"

#include <optional>
#include <vector>

namespace cliffrep {

struct PureSpinorWitness {
  Multivector s;
};

enum class BetaKind { Plus, Minus };  // s rev(psi) phi, s conj(psi) phi

// T(psi) phi read as an element of K; psi, phi must lie in Cl f.
KElement t_inner(const Multivector& psi, const Multivector& phi, const SpinorBasis& s);
KElement beta(BetaKind kind, const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w,
              const SpinorBasis& s);
KElement beta_plus(const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w, const SpinorBasis& s);
KElement beta_minus(const Multivector& psi, const Multivector& phi, const PureSpinorWitness& w, const SpinorBasis& s);

// Real basis m_i b_a f of S, ordered by (i, a).
std::vector<Multivector> real_spinor_basis(const SpinorBasis& s);

// Values of a K-valued real-bilinear form on pairs of real basis vectors.
struct BilinearForm {
  std::size_t dim = 0;
  std::vector<KElement> gram;  // row-major dim x dim
  const KElement& at(std::size_t r, std::size_t c) const { return gram[r * dim + c]; }
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

BilinearForm t_inner_form(const SpinorBasis& s);
BilinearForm beta_form(BetaKind kind, const PureSpinorWitness& w, const SpinorBasis& s);

// Smallest positive blade s making the beta product land in K for every
// pair of basis spinors, with no zero row.
std::optional<PureSpinorWitness> find_witness(BetaKind kind, const SpinorBasis& s);

// T(g) g = 1
bool in_G_epsilon(const Multivector& g);

}  // namespace cliffrep
