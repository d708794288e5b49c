#include "cliffrep/blade.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cliffrep;

TEST(Blade, ProductSignMatchesIndexSorting) {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      for (std::uint32_t a = 0; a < sig.dimension(); ++a)
        for (std::uint32_t b = 0; b < sig.dimension(); ++b) {
          auto [s, blade] = oracle::naive_blade_product(Blade(a), Blade(b), sig);
          SignedBlade got = blade_mul(Blade(a), Blade(b), sig);
          ASSERT_EQ(got.sign, s) << to_string(sig) << " " << a << " " << b;
          ASSERT_EQ(got.blade, blade);
        }
    }
}

TEST(Blade, MonomialOrder) {
  std::vector<std::string> names;
  for (Blade b : blade_order(3)) names.push_back(format_blade(b, 3));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"}));
  auto order = blade_order(5);
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
}

TEST(Blade, FromIndices) {
  EXPECT_EQ(blade_from_indices({3, 1}).mask, 0b101u);
  EXPECT_EQ(blade_indices(Blade(0b1010)), (std::vector<int>{2, 4}));
}

TEST(Blade, Format) {
  EXPECT_EQ(format_blade(Blade(0), 4), "1");
  EXPECT_EQ(format_blade(Blade(0b1001), 4), "e14");
  EXPECT_EQ(format_blade(SignedBlade(-1, Blade(0b11)), 4), "-e12");
  EXPECT_EQ(format_blade(blade_from_indices({1, 10}), 10), "e{1,10}");
}

TEST(Blade, SquaresAndOrders) {
  Signature sig(2, 2);
  EXPECT_EQ(blade_square(blade_from_indices({1}), sig), 1);
  EXPECT_EQ(blade_square(blade_from_indices({3}), sig), -1);
  EXPECT_EQ(blade_square(blade_from_indices({1, 2}), sig), -1);
  EXPECT_EQ(blade_square(blade_from_indices({1, 3}), sig), 1);
  EXPECT_EQ(element_order(SignedBlade(Blade(0)), sig), 1);
  EXPECT_EQ(element_order(SignedBlade(-1, Blade(0)), sig), 2);
  EXPECT_EQ(element_order(SignedBlade(blade_from_indices({3})), sig), 4);
  EXPECT_EQ(element_order(SignedBlade(blade_from_indices({1})), sig), 2);
}

TEST(Blade, CommutationAgreesWithProducts) {
  Signature sig(3, 2);
  for (std::uint32_t a = 0; a < sig.dimension(); ++a)
    for (std::uint32_t b = 0; b < sig.dimension(); ++b) {
      int ab = blade_mul(Blade(a), Blade(b), sig).sign, ba = blade_mul(Blade(b), Blade(a), sig).sign;
      EXPECT_EQ(blades_commute(Blade(a), Blade(b)), ab == ba);
      EXPECT_EQ(commutation_sign(Blade(a), Blade(b)), ab * ba);
    }
}

TEST(Blade, Inverse) {
  Signature sig(1, 3);
  for (std::uint32_t a = 0; a < sig.dimension(); ++a)
    for (int s : {1, -1}) {
      SignedBlade g(s, Blade(a));
      SignedBlade prod = blade_mul(g, blade_inverse(g, sig), sig);
      EXPECT_EQ(prod, SignedBlade(Blade(0)));
    }
}
