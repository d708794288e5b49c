#include "cliffrep/cli/expression.hpp"
#include "cliffrep/errors.hpp"
#include "cliffrep/vee_group.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace cliffrep;

namespace {

std::set<std::pair<std::uint32_t, int>> as_set(const Subgroup& h) {
  std::set<std::pair<std::uint32_t, int>> out;
  for (SignedBlade g : h.members()) out.emplace(g.blade.mask, g.sign);
  return out;
}

Idempotent tabulated(const Signature& sig, const std::string& factors) {
  auto fl = cli::parse_factor_list(factors, sig);
  return primitive_idempotent(CommutingSet(sig, fl.blades), fl.signs);
}

}  // namespace

TEST(VeeGroup, StabilizerMatchesBruteForce) {
  for (int n = 1; n <= 7; ++n)
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      Idempotent f = primitive_idempotent(sig);
      auto brute = oracle::brute_stabilizer(f.value);
      std::set<std::pair<std::uint32_t, int>> want(brute.begin(), brute.end());
      EXPECT_EQ(as_set(stabilizer(f)), want) << to_string(sig);
    }
}

TEST(VeeGroup, StabilizerOrderFormula) {
  for (int n = 1; n <= 9; ++n)
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      int r = ((p - q) % 8 + 8) % 8;
      bool simple = r != 1 && r != 5;
      std::size_t expected = std::size_t{1} << ((simple ? 1 : 2) + p + oracle::rh(q - p));
      EXPECT_EQ(stabilizer(primitive_idempotent(Signature(p, q))).size(), expected) << p << "," << q;
    }
}

TEST(VeeGroup, ExampleTwoOne) {
  Signature sig(2, 1);
  Idempotent f = tabulated(sig, "+e1,+e23");
  std::vector<std::string> names;
  Subgroup st = stabilizer(f);
  for (SignedBlade g : st.members()) names.push_back(format_blade(g, 3));
  EXPECT_EQ(names, (std::vector<std::string>{"+1", "-1", "+e1", "-e1", "+e23", "-e23", "+e123", "-e123"}));
  Transversal t = transversal(f);
  EXPECT_EQ(t.reps, (std::vector<Blade>{Blade(0), blade_from_indices({2})}));
}

TEST(VeeGroup, TransversalPartitionsTheGroup) {
  for (auto [p, q] : {std::pair{2, 2}, {3, 0}, {2, 4}, {0, 5}, {4, 1}}) {
    Signature sig(p, q);
    Idempotent f = primitive_idempotent(sig);
    Subgroup st = stabilizer(f);
    Transversal t = transversal(f, st);
    EXPECT_EQ(t.reps.front(), Blade(0));
    EXPECT_EQ(t.size() * st.size(), 2 * sig.dimension());
    std::vector<std::size_t> hits(t.size(), 0);
    for (Blade b : blade_order(sig)) ++hits[coset_index(b, t, st)];
    for (auto h : hits) EXPECT_EQ(h, sig.dimension() / t.size());
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t.squares[i], blade_square(t.reps[i], sig));
  }
}

TEST(VeeGroup, OrbitOfCl22) {
  Signature sig(2, 2);
  Idempotent f = tabulated(sig, "+e13,+e24");
  auto orb = orbit(f);
  ASSERT_EQ(orb.size(), 4u);
  EXPECT_EQ(to_string(orb[1]), "1/4(1-e13)(1+e24)");
  for (const auto& g : orb)
    EXPECT_EQ(oracle::naive_product(g.value, g.value), g.value);
}

TEST(VeeGroup, ConjugateMatchesProducts) {
  Signature sig(1, 3);
  Idempotent f = primitive_idempotent(sig);
  for (Blade b : blade_order(sig)) {
    Multivector g(sig, b);
    auto [s, unit] = oracle::naive_blade_product(b, b, sig);
    Multivector expected = oracle::naive_product(oracle::naive_product(g, f.value), Multivector(sig, b, Rational(s)));
    EXPECT_EQ(conjugate(SignedBlade(b), f.value), expected);
    EXPECT_EQ(conjugate(SignedBlade(b), f).value, expected);
  }
}

TEST(VeeGroup, CommutatorSubgroup) {
  EXPECT_EQ(commutator_subgroup(VeeGroup(Signature(1, 0))).size(), 1u);
  EXPECT_EQ(commutator_subgroup(VeeGroup(Signature(2, 2))).size(), 2u);
}

TEST(VeeGroup, GeneratedSubgroup) {
  Signature sig(0, 2);
  Subgroup q8 = Subgroup::generated_by(sig, {SignedBlade(blade_from_indices({1})), SignedBlade(blade_from_indices({2}))});
  EXPECT_EQ(q8.size(), 8u);
  EXPECT_TRUE(q8.contains(SignedBlade(-1, Blade(0))));
  EXPECT_TRUE(is_normal(q8));
  EXPECT_THROW(Subgroup::from_members(sig, {SignedBlade(blade_from_indices({1}))}), InvalidArgument);
}

TEST(VeeGroup, CosetPermutationCl22) {
  Signature sig(2, 2);
  Idempotent f = tabulated(sig, "+e13,+e24");
  Transversal t = transversal(f);
  CosetAction a = coset_permutation(SignedBlade(blade_from_indices({1})), t, f);
  EXPECT_EQ(a.perm, (std::vector<std::size_t>{1, 0, 3, 2}));
  EXPECT_EQ(a.signs, (std::vector<int>{1, 1, 1, 1}));
  // e1 (e2 f) = e12 f, e1 (e12 f) = e2 f
  Multivector e1(sig, blade_from_indices({1}));
  for (std::size_t i = 0; i < 4; ++i) {
    Multivector lhs = oracle::naive_product(e1, oracle::naive_product(Multivector(sig, t.reps[i]), f.value));
    Multivector rhs = oracle::naive_product(Multivector(sig, t.reps[a.perm[i]], Rational(a.signs[i])), f.value);
    EXPECT_EQ(lhs, rhs);
  }
}
