#include "cliffrep/cli/expression.hpp"
#include "cliffrep/errors.hpp"
#include "cliffrep/rep_matrix.hpp"
#include "cliffrep/sampling.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace cliffrep;

namespace {

Idempotent tabulated(const Signature& sig, const std::string& factors) {
  auto fl = cli::parse_factor_list(factors, sig);
  return primitive_idempotent(CommutingSet(sig, fl.blades), fl.signs);
}

bool same(const RepMatrix& m, const oracle::KMatrix& o, bool hat) {
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t k = 0; k < m.size(); ++k) {
      const KElement& e = hat ? m.hat(j, k) : m.at(j, k);
      for (std::size_t a = 0; a < e.dim(); ++a)
        if (e[a] != o[j][k][a]) return false;
    }
  return true;
}

oracle::KMatrix direct(const Multivector& u, const SpinorBasis& s) {
  return oracle::direct_rep(u, s.idempotent().value, s.transversal().reps, s.kbasis()->monomials(),
                            static_cast<int>(s.idempotent().factors.size()));
}

}  // namespace

TEST(RepMatrix, MatchesDirectRoute) {
  Sampler rng(31);
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      Representation rp = Representation::build(sig);
      Multivector u = rng.multivector(sig);
      RepMatrix m = rp(u);
      if (rp.simple()) {
        EXPECT_TRUE(same(m, direct(u, rp.basis()), false)) << to_string(sig);
      } else {
        EXPECT_TRUE(same(m, direct(u, rp.double_basis()->first()), false)) << to_string(sig);
        EXPECT_TRUE(same(m, direct(u, rp.double_basis()->second()), true)) << to_string(sig);
      }
    }
}

TEST(RepMatrix, MatchesDirectRouteLarge) {
  Sampler rng(32);
  for (auto [p, q] : {std::pair{0, 7}, {4, 3}, {1, 7}, {5, 3}}) {
    Signature sig(p, q);
    Representation rp = Representation::build(sig);
    Multivector u = rng.sparse(sig, 6);
    RepMatrix m = rp(u);
    const SpinorBasis& s = rp.simple() ? rp.basis() : rp.double_basis()->first();
    EXPECT_TRUE(same(m, direct(u, s), false)) << to_string(sig);
  }
}

TEST(RepMatrix, Homomorphism) {
  Sampler rng(33);
  for (auto [p, q] : {std::pair{2, 2}, {3, 0}, {2, 4}, {0, 3}, {2, 1}, {1, 4}}) {
    Representation rp = Representation::build(Signature(p, q));
    Multivector u = rng.multivector(Signature(p, q)), v = rng.multivector(Signature(p, q));
    EXPECT_EQ(rp(u * v), rp(u) * rp(v));
    EXPECT_EQ(rp(u + v), rp(u) + rp(v));
  }
}

TEST(RepMatrix, AdjointOfTransposition) {
  Sampler rng(34);
  for (int n = 1; n <= 7; ++n)
    for (int p = 0; p <= n; ++p) {
      Representation rp = Representation::build(Signature(p, n - p));
      Multivector u = rng.multivector(Signature(p, n - p));
      EXPECT_EQ(rp(transposition(u)), adjoint(rp(u))) << p << "," << n - p;
    }
}

TEST(RepMatrix, SimpleConstructionRejectsSemisimple) {
  Signature sig(2, 1);
  SpinorBasis s = SpinorBasis::build(primitive_idempotent(sig));
  EXPECT_THROW(rep_matrix(Multivector(sig, Rational(1)), s), InvalidArgument);
}

TEST(RepMatrix, ExampleTwoOneIdentityPair) {
  Signature sig(2, 1);
  Representation rp = Representation::build(tabulated(sig, "+e1,+e23"));
  RepMatrix one = rp(Multivector(sig, Rational(1)));
  ASSERT_TRUE(one.paired());
  EXPECT_EQ(one, one.identity_like());
  // first component sits in J+ = 1/2(1 + e123)
  auto [jp, jm] = central_idempotents(sig);
  RepMatrix j = rp(jp);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      EXPECT_EQ(j.at(a, b), one.at(a, b));
      EXPECT_TRUE(j.hat(a, b).is_zero());
    }
}

TEST(RepMatrix, Cl22PermutationForE1) {
  Signature sig(2, 2);
  Representation rp = Representation::build(tabulated(sig, "+e13,+e24"));
  RepMatrix m = rp(Multivector(sig, blade_from_indices({1})));
  const int perm[4] = {1, 0, 3, 2};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) EXPECT_EQ(m.at(j, k)[0], Rational(perm[k] == j ? 1 : 0));
}
