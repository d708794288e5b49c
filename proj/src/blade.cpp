#include "cliffrep/blade.hpp"

#include "cliffrep/errors.hpp"

#include <algorithm>

namespace cliffrep {

Blade blade_from_indices(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) throw InvalidArgument("generator index out of range");
    std::uint32_t bit = std::uint32_t{1} << (i - 1);
    if (mask & bit) throw InvalidArgument("repeated generator index");
    mask |= bit;
  }
  return Blade(mask);
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (std::uint32_t m = b.mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int blade_product_sign(Blade a, Blade b, const Signature& sig) {
  // transpositions needed to move every generator of b past the larger ones of a
  int swaps = 0;
  for (std::uint32_t x = a.mask >> 1; x; x >>= 1) swaps += std::popcount(x & b.mask);
  swaps += std::popcount(a.mask & b.mask & sig.negative_mask());
  return (swaps & 1) ? -1 : 1;
}

SignedBlade blade_mul(Blade a, Blade b, const Signature& sig) {
  return {blade_product_sign(a, b, sig), Blade(a.mask ^ b.mask)};
}

SignedBlade blade_mul(SignedBlade a, SignedBlade b, const Signature& sig) {
  return {a.sign * b.sign * blade_product_sign(a.blade, b.blade, sig), Blade(a.blade.mask ^ b.blade.mask)};
}

int blade_square(Blade b, const Signature& sig) { return blade_product_sign(b, b, sig); }

SignedBlade blade_inverse(SignedBlade g, const Signature& sig) {
  return {g.sign * blade_square(g.blade, sig), g.blade};
}

int element_order(SignedBlade g, const Signature& sig) {
  if (g.blade.is_scalar()) return g.sign > 0 ? 1 : 2;
  return blade_square(g.blade, sig) > 0 ? 2 : 4;
}

std::vector<Blade> blade_order(int n) {
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Blade> blade_order(const Signature& sig) { return blade_order(sig.n()); }

std::string format_blade(Blade b, int n) {
  if (b.is_scalar()) return "1";
  auto idx = blade_indices(b);
  std::string s = "e";
  if (n > 9 || idx.back() > 9) {
    s += "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(idx[i]);
    }
    s += "}";
  } else {
    for (int i : idx) s += static_cast<char>('0' + i);
  }
  return s;
}

std::string format_blade(SignedBlade b, int n) {
  return (b.sign < 0 ? "-" : "+") + format_blade(b.blade, n);
}

}  // namespace cliffrep
