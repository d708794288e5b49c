#pragma once

#include "cliffrep/multivector.hpp"

#include <cstdint>
#include <random>

namespace cliffrep {

// Seeded source of small dyadic rationals and multivectors. Values depend only
// on the seed and the call sequence (mt19937_64 is fully specified).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return (rng_() & 1u) != 0; }

  // a / 2^e with |a| <= 16, e in 0..3
  Rational dyadic();
  // same, never zero
  Rational nonzero_dyadic();

  // every coefficient drawn, about a quarter of them zeroed
  Multivector multivector(const Signature& sig);
  // at most `terms` random blades
  Multivector sparse(const Signature& sig, std::size_t terms);
  // grade-1 element
  Multivector vector(const Signature& sig);
  SignedBlade group_element(const Signature& sig);

 private:
  std::mt19937_64 rng_;
};

}  // namespace cliffrep
