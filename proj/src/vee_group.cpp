#include "cliffrep/vee_group.hpp"

#include "cliffrep/errors.hpp"

#include <algorithm>

namespace cliffrep {

std::vector<SignedBlade> VeeGroup::elements() const {
  std::vector<SignedBlade> out;
  out.reserve(order());
  for (Blade b : blade_order(sig_)) {
    out.emplace_back(1, b);
    out.emplace_back(-1, b);
  }
  return out;
}

Subgroup Subgroup::generated_by(const Signature& sig, const std::vector<SignedBlade>& generators) {
  Subgroup h(sig);
  std::vector<SignedBlade> frontier{SignedBlade(Blade{})};
  h.in_[VeeGroup::index(frontier[0])] = true;
  // every element of a vee group has finite order, so right multiplication by
  // generators reaches the whole subgroup
  while (!frontier.empty()) {
    SignedBlade x = frontier.back();
    frontier.pop_back();
    for (SignedBlade g : generators) {
      if (g.blade.mask >> sig.n()) throw InvalidArgument("generator outside the algebra");
      SignedBlade y = blade_mul(x, g, sig);
      std::size_t idx = VeeGroup::index(y);
      if (!h.in_[idx]) {
        h.in_[idx] = true;
        frontier.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < h.in_.size(); ++i)
    if (h.in_[i]) h.members_.push_back(VeeGroup::element(i));
  std::sort(h.members_.begin(), h.members_.end());
  h.generators_ = generators;
  return h;
}

Subgroup Subgroup::from_members(const Signature& sig, const std::vector<SignedBlade>& members) {
  Subgroup h(sig);
  for (SignedBlade g : members) {
    if (g.blade.mask >> sig.n()) throw InvalidArgument("element outside the algebra");
    h.in_[VeeGroup::index(g)] = true;
  }
  for (std::size_t i = 0; i < h.in_.size(); ++i)
    if (h.in_[i]) h.members_.push_back(VeeGroup::element(i));
  std::sort(h.members_.begin(), h.members_.end());
  if (!h.contains(SignedBlade(Blade{}))) throw InvalidArgument("subset lacks the identity");
  for (SignedBlade a : h.members_)
    for (SignedBlade b : h.members_)
      if (!h.contains(blade_mul(a, b, sig))) throw InvalidArgument("subset is not closed");
  h.generators_ = minimal_generators(h);
  return h;
}

std::vector<SignedBlade> minimal_generators(const Subgroup& h) {
  const Signature& sig = h.signature();
  SignedBlade minus_one(-1, Blade{});
  std::vector<SignedBlade> gens;
  bool seeded = h.contains(minus_one);
  if (seeded) gens.push_back(minus_one);
  Subgroup current = Subgroup::generated_by(sig, gens);
  for (SignedBlade g : h.members()) {
    if (g.sign < 0 || g.blade.is_scalar() || current.contains(g)) continue;
    gens.push_back(g);
    current = Subgroup::generated_by(sig, gens);
  }
  if (seeded && gens.size() > 1) {
    std::vector<SignedBlade> rest(gens.begin() + 1, gens.end());
    if (Subgroup::generated_by(sig, rest).contains(minus_one)) gens = rest;
  }
  return gens;
}

Multivector conjugate(SignedBlade g, const Multivector& u) {
  Multivector out(u.signature());
  for (const auto& [b, c] : u.terms()) out.add_term(b, blades_commute(g.blade, b) ? c : Rational(-c));
  return out;
}

Idempotent conjugate(SignedBlade g, const Idempotent& f) {
  std::vector<int> signs = f.signs;
  for (std::size_t j = 0; j < signs.size(); ++j)
    if (!blades_commute(g.blade, f.factors.factors()[j])) signs[j] = -signs[j];
  return product_idempotent(f.factors, signs);
}

Subgroup stabilizer(const Idempotent& f) {
  // g f g^{-1} = f is decided on the expanded value, not on the factor list
  const Signature& sig = f.signature();
  std::vector<SignedBlade> members;
  for (SignedBlade g : VeeGroup(sig).elements())
    if (conjugate(g, f.value) == f.value) members.push_back(g);
  return Subgroup::from_members(sig, members);
}

Transversal transversal(const Idempotent& f, const Subgroup& stab) {
  const Signature& sig = f.signature();
  Transversal t;
  // cosets of the stabilizer are cosets of its blade masks; -1 is always inside
  std::vector<std::uint32_t> stab_masks;
  for (SignedBlade g : stab.members())
    if (g.sign > 0) stab_masks.push_back(g.blade.mask);
  std::vector<bool> covered(sig.dimension(), false);
  for (Blade b : blade_order(sig)) {
    if (covered[b.mask]) continue;
    for (std::uint32_t h : stab_masks) covered[b.mask ^ h] = true;
    t.reps.push_back(b);
    t.squares.push_back(blade_square(b, sig));
  }
  return t;
}

Transversal transversal(const Idempotent& f) { return transversal(f, stabilizer(f)); }

std::size_t coset_index(Blade b, const Transversal& t, const Subgroup& stab) {
  for (std::size_t i = 0; i < t.reps.size(); ++i)
    if (stab.contains_blade(Blade(b.mask ^ t.reps[i].mask))) return i;
  throw InvalidArgument("blade not covered by the transversal");
}

std::vector<Idempotent> orbit(const Idempotent& f) {
  std::vector<Idempotent> out;
  for (Blade m : transversal(f).reps) out.push_back(conjugate(SignedBlade(m), f));
  return out;
}

Subgroup commutator_subgroup(const VeeGroup& g) {
  const Signature& sig = g.signature();
  std::vector<bool> seen(g.order(), false);
  std::vector<SignedBlade> gens;
  auto elems = g.elements();
  for (SignedBlade a : elems) {
    SignedBlade ai = blade_inverse(a, sig);
    for (SignedBlade b : elems) {
      SignedBlade c = blade_mul(blade_mul(a, b, sig), blade_mul(ai, blade_inverse(b, sig), sig), sig);
      if (!seen[VeeGroup::index(c)]) {
        seen[VeeGroup::index(c)] = true;
        gens.push_back(c);
      }
    }
  }
  return Subgroup::from_members(sig, Subgroup::generated_by(sig, gens).members());
}

bool is_normal(const Subgroup& h) {
  const Signature& sig = h.signature();
  for (SignedBlade g : VeeGroup(sig).elements()) {
    SignedBlade gi = blade_inverse(g, sig);
    for (SignedBlade x : h.members())
      if (!h.contains(blade_mul(blade_mul(g, x, sig), gi, sig))) return false;
  }
  return true;
}

bool pointwise_stabilizes(const Subgroup& h, const CommutingSet& t) {
  for (SignedBlade m : h.members())
    for (Blade e : t.factors())
      if (!blades_commute(m.blade, e)) return false;
  return true;
}

CosetAction coset_permutation(SignedBlade m, const Transversal& t, const Idempotent& f, const Subgroup& stab) {
  const Signature& sig = f.signature();
  CosetAction act;
  for (std::size_t i = 0; i < t.size(); ++i) {
    SignedBlade x = blade_mul(m, SignedBlade(t.reps[i]), sig);
    std::size_t j = coset_index(x.blade, t, stab);
    // x = m_j y with y = m_j^{-1} x in the stabilizer
    SignedBlade y = blade_mul(blade_inverse(SignedBlade(t.reps[j]), sig), x, sig);
    int sign = y.sign;
    Blade residue = y.blade;
    if (f.factors.in_span(residue)) {
      sign *= absorption_sign(residue, f);
      residue = Blade{};
    }
    act.perm.push_back(j);
    act.signs.push_back(sign);
    act.residues.push_back(residue);
  }
  return act;
}

CosetAction coset_permutation(SignedBlade m, const Transversal& t, const Idempotent& f) {
  return coset_permutation(m, t, f, stabilizer(f));
}

}  // namespace cliffrep
