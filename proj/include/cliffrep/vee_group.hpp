#pragma once

#include "cliffrep/idempotent.hpp"

#include <cstddef>
#include <vector>

namespace cliffrep {

// Signed blades {+-e_I}; element index = 2*mask + (sign < 0).
class VeeGroup {
 public:
  explicit VeeGroup(const Signature& sig) : sig_(sig) {}

  const Signature& signature() const { return sig_; }
  std::size_t order() const { return sig_.dimension() * 2; }
  // monomial order, +e_I before -e_I
  std::vector<SignedBlade> elements() const;

  static std::size_t index(SignedBlade g) { return 2 * std::size_t{g.blade.mask} + (g.sign < 0 ? 1 : 0); }
  static SignedBlade element(std::size_t idx) {
    return {(idx & 1) ? -1 : 1, Blade(static_cast<std::uint32_t>(idx >> 1))};
  }

 private:
  Signature sig_;
};

class Subgroup {
 public:
  // closure of the generators; the list is kept as given
  static Subgroup generated_by(const Signature& sig, const std::vector<SignedBlade>& generators);
  // members are checked for closure; generators are chosen by minimal_generators
  static Subgroup from_members(const Signature& sig, const std::vector<SignedBlade>& members);

  const Signature& signature() const { return sig_; }
  const std::vector<SignedBlade>& members() const { return members_; }  // sorted
  const std::vector<SignedBlade>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }
  bool contains(SignedBlade g) const { return in_[VeeGroup::index(g)]; }
  // positive blades b with +b or -b in the subgroup
  bool contains_blade(Blade b) const { return contains(SignedBlade(b)) || contains(SignedBlade(-1, b)); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.sig_ == b.sig_ && a.members_ == b.members_; }

 private:
  explicit Subgroup(const Signature& sig) : sig_(sig), in_(sig.dimension() * 2, false) {}

  Signature sig_;
  std::vector<bool> in_;
  std::vector<SignedBlade> members_;
  std::vector<SignedBlade> generators_;
};

// Seed with -1, sweep positive blades in monomial order keeping any blade not
// yet generated, then drop -1 if the rest generate it.
std::vector<SignedBlade> minimal_generators(const Subgroup& h);

// g u g^{-1}
Multivector conjugate(SignedBlade g, const Multivector& u);
// conjugation keeps the product form; only signs change
Idempotent conjugate(SignedBlade g, const Idempotent& f);

Subgroup stabilizer(const Idempotent& f);
// ordered like the transversal: theta(m_i) = m_i f m_i^{-1}
std::vector<Idempotent> orbit(const Idempotent& f);

struct Transversal {
  std::vector<Blade> reps;  // m_1 = 1
  std::vector<int> squares; // alpha_i = m_i^2
  std::size_t size() const { return reps.size(); }
};

Transversal transversal(const Idempotent& f, const Subgroup& stab);
Transversal transversal(const Idempotent& f);
// index of the transversal element whose coset contains b
std::size_t coset_index(Blade b, const Transversal& t, const Subgroup& stab);

Subgroup commutator_subgroup(const VeeGroup& g);
bool is_normal(const Subgroup& h);
bool pointwise_stabilizes(const Subgroup& h, const CommutingSet& t);

// m m_i f = signs[i] * m_perm[i] * residues[i] * f, residues in the stabilizer.
// A residue of 1 means the action is a signed permutation on that basis vector.
struct CosetAction {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  std::vector<Blade> residues;
};

CosetAction coset_permutation(SignedBlade m, const Transversal& t, const Idempotent& f, const Subgroup& stab);
CosetAction coset_permutation(SignedBlade m, const Transversal& t, const Idempotent& f);

}  // namespace cliffrep
