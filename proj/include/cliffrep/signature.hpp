#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace cliffrep {

// Masks are 32-bit and several tables are dense over all blades.
inline constexpr int kMaxGenerators = 16;

struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p, int q);  // throws InvalidArgument on negative counts or n > kMaxGenerators

  int n() const { return p + q; }
  std::size_t dimension() const { return std::size_t{1} << n(); }
  // bits of the generators squaring to -1
  std::uint32_t negative_mask() const { return ((std::uint32_t{1} << q) - 1) << p; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);  // "Cl(2,2)"

}  // namespace cliffrep
