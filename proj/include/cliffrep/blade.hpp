#pragma once

#include "cliffrep/signature.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cliffrep {

// Basis monomial e_I. Bit i-1 of the mask is generator e_i; mask 0 is the unit.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t m) : mask(m) {}

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool is_scalar() const { return mask == 0; }
  constexpr bool contains(int index) const { return (mask >> (index - 1)) & 1u; }

  friend constexpr bool operator==(Blade, Blade) = default;
  // Graded-lex monomial order: by grade, then lexicographic on ascending
  // index tuples (e12 < e13 < e23).
  friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
    if (a.grade() != b.grade()) return a.grade() <=> b.grade();
    if (a.mask == b.mask) return std::strong_ordering::equal;
    std::uint32_t diff = a.mask ^ b.mask;
    std::uint32_t low = diff & (~diff + 1);
    return (a.mask & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

struct SignedBlade {
  int sign = 1;
  Blade blade;

  constexpr SignedBlade() = default;
  constexpr SignedBlade(int s, Blade b) : sign(s < 0 ? -1 : 1), blade(b) {}
  constexpr explicit SignedBlade(Blade b) : blade(b) {}

  constexpr SignedBlade operator-() const { return {-sign, blade}; }
  friend constexpr bool operator==(SignedBlade, SignedBlade) = default;
  // blade order first, +e before -e
  friend constexpr std::strong_ordering operator<=>(SignedBlade a, SignedBlade b) {
    if (auto c = a.blade <=> b.blade; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

Blade blade_from_indices(const std::vector<int>& indices);  // any order, no repeats
std::vector<int> blade_indices(Blade b);

// sign of e_a e_b relative to e_{a xor b}
int blade_product_sign(Blade a, Blade b, const Signature& sig);
SignedBlade blade_mul(Blade a, Blade b, const Signature& sig);
SignedBlade blade_mul(SignedBlade a, SignedBlade b, const Signature& sig);

int blade_square(Blade b, const Signature& sig);  // +1 or -1
// e_a e_b = +- e_b e_a, independent of the signature
inline bool blades_commute(Blade a, Blade b) {
  return ((a.grade() * b.grade() - std::popcount(a.mask & b.mask)) & 1) == 0;
}
inline int commutation_sign(Blade a, Blade b) { return blades_commute(a, b) ? 1 : -1; }

SignedBlade blade_inverse(SignedBlade g, const Signature& sig);
int element_order(SignedBlade g, const Signature& sig);  // 1, 2 or 4

// All 2^n blades in monomial order.
std::vector<Blade> blade_order(const Signature& sig);
std::vector<Blade> blade_order(int n);

// "1", "e13"; generators above 9 force the braced form "e{1,10,12}".
std::string format_blade(Blade b, int n);
std::string format_blade(SignedBlade b, int n);  // "-e13", "+1"

}  // namespace cliffrep
